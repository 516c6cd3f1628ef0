/** Structured field editor for the translation specification.
 *
 * Every editable field is an input tagged with data-path (dotted, matching
 * the service's diff paths). Fields touched by the most recent refinement
 * get the diff-changed class. While the session is locked the whole form is
 * read-only and the unlock affordance is shown instead of apply/lock.
 */

import { button, el, labeled, warningList } from "../dom.js";
import type { DiffEntry, SessionSnapshot, SpecJson, Violation } from "../types.js";

export interface SpecEditorActions {
  applyEdits(spec: SpecJson): void;
  lock(): void;
  unlock(): void;
}

interface FieldSpec {
  path: string;
  label: string;
  kind: "text" | "long" | "number" | "list";
}

const FIELDS: FieldSpec[] = [
  { path: "source_lang", label: "Source language", kind: "text" },
  { path: "target_lang", label: "Target language", kind: "text" },
  { path: "skopos", label: "Skopos (purpose)", kind: "long" },
  { path: "text_type", label: "Text type", kind: "text" },
  { path: "house_mode", label: "House mode", kind: "text" },
  { path: "loyalty.author_intention", label: "Loyalty: author intention", kind: "number" },
  { path: "loyalty.st_culture_fidelity", label: "Loyalty: source-culture fidelity", kind: "number" },
  { path: "loyalty.tt_reader_orientation", label: "Loyalty: reader orientation", kind: "number" },
  { path: "loyalty.commissioner_brief", label: "Loyalty: commissioner brief", kind: "number" },
  { path: "domestication_axis", label: "Domestication axis", kind: "number" },
  { path: "audience.description", label: "Audience description", kind: "text" },
  { path: "audience.expertise", label: "Audience expertise", kind: "text" },
  { path: "audience.locale", label: "Audience locale", kind: "text" },
  { path: "register.formality", label: "Register: formality", kind: "text" },
  { path: "register.voice", label: "Register: voice", kind: "text" },
  { path: "register.person", label: "Register: person", kind: "text" },
  { path: "genre", label: "Genre", kind: "text" },
  { path: "terminology_guidance", label: "Terminology guidance", kind: "long" },
  { path: "style_decisions", label: "Style decisions", kind: "long" },
  { path: "preserve", label: "Preserve (one per line)", kind: "list" },
  { path: "localize", label: "Localise (one per line)", kind: "list" },
  { path: "avoid", label: "Avoid (one per line)", kind: "list" },
  { path: "open_questions", label: "Open questions (one per line)", kind: "list" },
];

function getAtPath(spec: SpecJson, path: string): unknown {
  let value: unknown = spec;
  for (const key of path.split(".")) {
    value = (value as Record<string, unknown>)[key];
  }
  return value;
}

function setAtPath(target: Record<string, unknown>, path: string, value: unknown): void {
  const keys = path.split(".");
  let node = target;
  for (const key of keys.slice(0, -1)) {
    node = node[key] as Record<string, unknown>;
  }
  node[keys[keys.length - 1]] = value;
}

/** Read the edited spec back out of a rendered editor. */
export function collectSpec(editorRoot: HTMLElement, base: SpecJson): SpecJson {
  const spec = JSON.parse(JSON.stringify(base)) as SpecJson;
  const controls = editorRoot.querySelectorAll<HTMLInputElement | HTMLTextAreaElement>(
    "[data-path]",
  );
  for (const control of controls) {
    const path = control.dataset.path ?? "";
    const field = FIELDS.find((f) => f.path === path);
    if (!field) continue;
    if (field.kind === "number") {
      const parsed = Number.parseFloat(control.value);
      if (!Number.isNaN(parsed)) setAtPath(spec as unknown as Record<string, unknown>, path, parsed);
    } else if (field.kind === "list") {
      const items = control.value
        .split("\n")
        .map((line) => line.trim())
        .filter((line) => line.length > 0);
      setAtPath(spec as unknown as Record<string, unknown>, path, items);
    } else {
      setAtPath(spec as unknown as Record<string, unknown>, path, control.value);
    }
  }
  return spec;
}

export function SpecEditor(
  snapshot: SessionSnapshot,
  lastDiff: DiffEntry[],
  actions: SpecEditorActions,
): HTMLElement {
  const locked = snapshot.state === "locked";
  const changedPaths = new Set(lastDiff.map(([path]) => path));
  const box = el("section", "panel spec-editor" + (locked ? " editor-locked" : ""));
  box.id = "spec-editor";

  const head = el("div", "panel-head");
  head.appendChild(el("h2", "", "Specification"));
  const badge = el("span", `phase-badge phase-${snapshot.state}`, snapshot.state);
  badge.id = "phase-badge";
  head.appendChild(badge);
  box.appendChild(head);

  if (locked) {
    box.appendChild(
      el("p", "locked-note", "Locked — fields are read-only. Unlock to edit."),
    );
  }

  const form = el("div", "editor-fields");
  for (const field of FIELDS) {
    const value = getAtPath(snapshot.spec, field.path);
    let control: HTMLInputElement | HTMLTextAreaElement;
    if (field.kind === "long" || field.kind === "list") {
      control = el("textarea");
      control.rows = field.kind === "long" ? 2 : 3;
      control.value = field.kind === "list" ? (value as string[]).join("\n") : String(value);
    } else {
      control = el("input");
      if (field.kind === "number") {
        control.type = "number";
        control.step = "0.1";
      }
      control.value = String(value);
    }
    control.dataset.path = field.path;
    control.disabled = locked;
    const row = labeled(field.label, control);
    row.classList.add("editor-row");
    if (changedPaths.has(field.path)) row.classList.add("diff-changed");
    form.appendChild(row);
  }
  box.appendChild(form);

  const violations = ViolationList(snapshot.violations);
  if (violations) box.appendChild(violations);

  const controls = el("div", "editor-controls");
  if (locked) {
    const unlockBtn = button("Unlock to edit", "secondary", () => actions.unlock());
    unlockBtn.id = "unlock-btn";
    controls.appendChild(unlockBtn);
  } else {
    const applyBtn = button("Apply edits", "secondary", () =>
      actions.applyEdits(collectSpec(box, snapshot.spec)),
    );
    applyBtn.id = "apply-edits";
    controls.appendChild(applyBtn);
    const lockBtn = button("Lock specification", "primary", () => actions.lock());
    lockBtn.id = "lock-btn";
    lockBtn.disabled = snapshot.violations.length > 0;
    controls.appendChild(lockBtn);
  }
  box.appendChild(controls);
  return box;
}

function ViolationList(violations: Violation[]): HTMLElement | null {
  const lines = violations.map((v) => `${v.field}: ${v.reason}`);
  const list = warningList(lines);
  if (!list) return null;
  list.id = "violations";
  return list;
}
