/** Renders the service's specification markdown (headings, bullets,
 * paragraphs) into DOM nodes. Text is inserted via textContent only.
 */

import { el } from "./dom.js";

export function renderMarkdown(markdown: string): HTMLElement {
  const root = el("div", "markdown");
  let list: HTMLUListElement | null = null;
  let paragraph: string[] = [];

  const flushParagraph = () => {
    if (paragraph.length > 0) {
      root.appendChild(el("p", "", paragraph.join(" ")));
      paragraph = [];
    }
  };
  const flushList = () => {
    list = null;
  };

  for (const line of markdown.split("\n")) {
    if (line.startsWith("# ")) {
      flushParagraph();
      flushList();
      root.appendChild(el("h1", "", line.slice(2)));
    } else if (line.startsWith("## ")) {
      flushParagraph();
      flushList();
      root.appendChild(el("h2", "md-section", line.slice(3)));
    } else if (line.startsWith("- ")) {
      flushParagraph();
      if (!list) {
        list = el("ul");
        root.appendChild(list);
      }
      list.appendChild(el("li", "", line.slice(2)));
    } else if (line.trim() === "") {
      flushParagraph();
      flushList();
    } else {
      flushList();
      paragraph.push(line);
    }
  }
  flushParagraph();
  return root;
}
