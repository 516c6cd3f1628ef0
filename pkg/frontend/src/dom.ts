/** Small DOM construction helpers shared by all components. */

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className = "",
  text = "",
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text) node.textContent = text;
  return node;
}

export function button(
  label: string,
  className: string,
  onClick: () => void,
): HTMLButtonElement {
  const node = el("button", className, label);
  node.type = "button";
  node.addEventListener("click", onClick);
  return node;
}

export function labeled(labelText: string, control: HTMLElement): HTMLElement {
  const wrap = el("label", "field");
  wrap.appendChild(el("span", "field-label", labelText));
  wrap.appendChild(control);
  return wrap;
}

export function detailsBlock(summaryText: string, body: HTMLElement): HTMLElement {
  const details = el("details", "fold");
  details.appendChild(el("summary", "", summaryText));
  details.appendChild(body);
  return details;
}

export function preBlock(text: string, className = "code-block"): HTMLPreElement {
  const pre = el("pre", className);
  pre.textContent = text;
  return pre;
}

export function warningList(warnings: string[]): HTMLElement | null {
  if (warnings.length === 0) return null;
  const list = el("ul", "warnings");
  for (const warning of warnings) list.appendChild(el("li", "", warning));
  return list;
}
