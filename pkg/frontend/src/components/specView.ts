/** Rendered markdown view of the current specification. */

import { el } from "../dom.js";
import { renderMarkdown } from "../markdown.js";
import type { SessionSnapshot } from "../types.js";

export function SpecView(snapshot: SessionSnapshot): HTMLElement {
  const box = el("section", "panel spec-view");
  box.id = "markdown-view";
  box.appendChild(el("h2", "", "Rendered view"));
  if (snapshot.spec_markdown) {
    box.appendChild(renderMarkdown(snapshot.spec_markdown));
  } else {
    box.appendChild(
      el(
        "p",
        "muted",
        "No rendered view yet — the specification has open validity problems.",
      ),
    );
  }
  return box;
}
