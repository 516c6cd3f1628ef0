/** Dialogue panel: propose a specification from source text, then refine it
 * with plain-language instructions. Refinements show a field-level diff.
 */

import { button, el, labeled } from "../dom.js";
import type { ChatEntry } from "../state.js";
import type { DiffEntry } from "../types.js";

export interface ChatActions {
  propose(source: string): void;
  refine(instruction: string): void;
}

export function Chat(entries: ChatEntry[], disabled: boolean, actions: ChatActions): HTMLElement {
  const box = el("section", "panel chat");
  box.appendChild(el("h2", "", "Specification dialogue"));

  const log = el("div", "chat-log");
  log.id = "chat-log";
  if (entries.length === 0) {
    log.appendChild(el("p", "muted", "Paste source text and propose a specification."));
  }
  for (const entry of entries) {
    const item = el("article", `chat-entry chat-${entry.role}`);
    item.appendChild(el("strong", "", entry.role));
    item.appendChild(el("p", "", entry.text));
    if (entry.diff && entry.diff.length > 0) item.appendChild(DiffList(entry.diff));
    log.appendChild(item);
  }
  box.appendChild(log);

  const sourceInput = el("textarea");
  sourceInput.id = "propose-source";
  sourceInput.rows = 4;
  sourceInput.placeholder = "Source text to analyse…";
  box.appendChild(labeled("Source text", sourceInput));
  const proposeBtn = button("Propose specification", "primary", () =>
    actions.propose(sourceInput.value),
  );
  proposeBtn.id = "propose-btn";
  proposeBtn.disabled = disabled;
  box.appendChild(proposeBtn);

  const instructionInput = el("input");
  instructionInput.id = "instruction";
  instructionInput.placeholder = "e.g. use plain da/dearu style throughout";
  box.appendChild(labeled("Refinement instruction", instructionInput));
  const refineBtn = button("Refine", "secondary", () =>
    actions.refine(instructionInput.value),
  );
  refineBtn.id = "refine-btn";
  refineBtn.disabled = disabled;
  box.appendChild(refineBtn);

  return box;
}

function DiffList(diff: DiffEntry[]): HTMLElement {
  const list = el("ul", "diff-list");
  for (const [path, oldRepr, newRepr] of diff) {
    const item = el("li", "diff-entry");
    item.dataset.path = path;
    item.appendChild(el("code", "diff-path", path));
    item.appendChild(el("span", "diff-old", oldRepr));
    item.appendChild(el("span", "diff-arrow", "→"));
    item.appendChild(el("span", "diff-new", newRepr));
    list.appendChild(item);
  }
  return list;
}
