/** Highlights judge-reported error spans inside a candidate translation.
 *
 * Each locatable span is wrapped in a <mark> colored by severity (fixed
 * palette). Spans the judge could not anchor — or whose text no longer
 * occurs in the draft — are listed under the text instead of being guessed
 * at. Overlapping matches keep the earliest span and drop the rest into the
 * unlocated list, so the highlighted text always reads left to right.
 */

import { el } from "../dom.js";
import type { ErrorSpanJson, Severity } from "../types.js";

export const SEVERITY_COLORS: Record<Severity, string> = {
  critical: "#c62828",
  major: "#e65100",
  minor: "#b8860b",
};

interface Placement {
  start: number;
  end: number;
  error: ErrorSpanJson;
}

export function SpanOverlay(text: string, errors: ErrorSpanJson[]): HTMLElement {
  const box = el("div", "span-overlay");
  const placements: Placement[] = [];
  const unlocated: ErrorSpanJson[] = [];

  for (const error of errors) {
    const index = error.unlocatable || !error.span ? -1 : text.indexOf(error.span);
    if (index < 0) {
      unlocated.push(error);
    } else {
      placements.push({ start: index, end: index + error.span.length, error });
    }
  }

  // Left to right; on a shared start the longer (more specific) span wins.
  placements.sort((a, b) => a.start - b.start || b.end - a.end);
  const kept: Placement[] = [];
  for (const placement of placements) {
    const last = kept[kept.length - 1];
    if (last && placement.start < last.end) {
      unlocated.push(placement.error);
    } else {
      kept.push(placement);
    }
  }

  const body = el("p", "overlay-text");
  let cursor = 0;
  for (const { start, end, error } of kept) {
    if (start > cursor) body.appendChild(document.createTextNode(text.slice(cursor, start)));
    const mark = el("mark", `error-span sev-${error.severity}`, text.slice(start, end));
    mark.style.backgroundColor = SEVERITY_COLORS[error.severity] + "33";
    mark.style.borderBottom = `2px solid ${SEVERITY_COLORS[error.severity]}`;
    mark.title = `${error.severity} · ${error.category}: ${error.explanation}`;
    body.appendChild(mark);
    cursor = end;
  }
  if (cursor < text.length) body.appendChild(document.createTextNode(text.slice(cursor)));
  box.appendChild(body);

  if (unlocated.length > 0) {
    const list = el("ul", "unlocated-errors");
    for (const error of unlocated) {
      const item = el("li", "unlocated-error");
      const chip = el("span", `sev-chip sev-${error.severity}`, error.severity);
      chip.style.backgroundColor = SEVERITY_COLORS[error.severity];
      item.appendChild(chip);
      item.appendChild(
        document.createTextNode(` ${error.category}: ${error.explanation}`),
      );
      if (error.span) item.appendChild(el("em", "lost-span", ` (“${error.span}”)`));
      list.appendChild(item);
    }
    box.appendChild(el("p", "muted", "Not locatable in the text:"));
    box.appendChild(list);
  }
  return box;
}
