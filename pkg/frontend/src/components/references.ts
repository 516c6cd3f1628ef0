/** Reference material panel: shows what the session already holds and
 * uploads new glossaries, example pairs, parallel texts, or a style guide.
 */

import { button, el, labeled } from "../dom.js";
import type { ReferencesJson } from "../types.js";

export interface ReferencesActions {
  upload(kind: string, content: string, name: string): void;
}

const KINDS = [
  ["glossary", "Glossary (TSV/CSV)"],
  ["examples", "Example pairs (TSV/CSV)"],
  ["parallel", "Parallel text"],
  ["style", "Style guide"],
] as const;

export function References(refs: ReferencesJson, actions: ReferencesActions): HTMLElement {
  const box = el("section", "panel references");
  box.id = "refs-panel";
  box.appendChild(el("h2", "", "Reference material"));

  const inventory = el("ul", "refs-inventory");
  inventory.id = "refs-inventory";
  inventory.appendChild(el("li", "", `Glossary terms: ${refs.glossary.length}`));
  inventory.appendChild(el("li", "", `Example pairs: ${refs.paired_examples.length}`));
  const parallelNames = refs.parallel_texts.map(([name]) => name).join(", ");
  inventory.appendChild(
    el(
      "li",
      "",
      `Parallel texts: ${refs.parallel_texts.length}` +
        (parallelNames ? ` (${parallelNames})` : ""),
    ),
  );
  inventory.appendChild(el("li", "", `Style guide: ${refs.style_guide ? "yes" : "no"}`));
  box.appendChild(inventory);

  if (refs.glossary.length > 0) {
    const terms = el("ul", "glossary-terms");
    for (const [source, target] of refs.glossary.slice(0, 50)) {
      terms.appendChild(el("li", "", `${source} → ${target}`));
    }
    box.appendChild(terms);
  }

  const kindSelect = el("select");
  kindSelect.id = "ref-kind";
  for (const [value, label] of KINDS) {
    const option = el("option", "", label);
    option.value = value;
    kindSelect.appendChild(option);
  }
  box.appendChild(labeled("Kind", kindSelect));

  const nameInput = el("input");
  nameInput.id = "ref-name";
  nameInput.placeholder = "name (for parallel texts)";
  box.appendChild(labeled("Name", nameInput));

  const contentInput = el("textarea");
  contentInput.id = "ref-content";
  contentInput.rows = 3;
  contentInput.placeholder = "Paste reference content…";
  box.appendChild(labeled("Content", contentInput));

  const uploadBtn = button("Add reference", "secondary", () =>
    actions.upload(kindSelect.value, contentInput.value, nameInput.value),
  );
  uploadBtn.id = "upload-ref";
  box.appendChild(uploadBtn);
  return box;
}
