/** Run controls: source text, optional config overrides, and the Run button.
 * The button is enabled only while the specification is locked; the caller
 * guards the action again so a run request can never be sent while drafting.
 */

import { button, el, labeled } from "../dom.js";
import type { RunView } from "../state.js";
import type { PipelineConfigJson, SessionSnapshot } from "../types.js";

export interface RunActions {
  startRun(source: string, config: Partial<PipelineConfigJson>): void;
}

const CONFIG_FIELDS = [
  ["threshold", "Score threshold", "-2", false],
  ["max_revisions", "Max revisions", "2", false],
  ["max_chunk_chars", "Max chunk chars", "4000", false],
  ["generation_temperature", "Generation temperature", "0.3", true],
] as const;

export function RunPanel(
  snapshot: SessionSnapshot | null,
  run: RunView | null,
  actions: RunActions,
): HTMLElement {
  const box = el("section", "panel run-panel");
  box.appendChild(el("h2", "", "Translate"));

  const sourceInput = el("textarea");
  sourceInput.id = "run-source";
  sourceInput.rows = 6;
  sourceInput.placeholder = "Document to translate…";
  box.appendChild(labeled("Source document", sourceInput));

  const configRow = el("div", "config-row");
  const configInputs: [keyof PipelineConfigJson, HTMLInputElement, boolean][] = [];
  for (const [key, label, placeholder, isFloat] of CONFIG_FIELDS) {
    const input = el("input");
    input.id = `cfg-${key.replaceAll("_", "-")}`;
    input.type = "number";
    if (isFloat) input.step = "0.1";
    input.placeholder = placeholder;
    configInputs.push([key, input, isFloat]);
    configRow.appendChild(labeled(label, input));
  }
  box.appendChild(configRow);

  const locked = snapshot?.state === "locked";
  const runBtn = button("Run translation", "primary", () => {
    const config: Partial<PipelineConfigJson> = {};
    for (const [key, input, isFloat] of configInputs) {
      if (input.value.trim() === "") continue;
      const parsed = isFloat ? Number.parseFloat(input.value) : Number.parseInt(input.value, 10);
      if (!Number.isNaN(parsed)) config[key] = parsed;
    }
    actions.startRun(sourceInput.value, config);
  });
  runBtn.id = "run-btn";
  runBtn.disabled = !locked || run?.phase === "streaming" || run?.phase === "reconnecting";
  box.appendChild(runBtn);
  if (!locked) {
    box.appendChild(
      el("p", "muted run-gate-note", "Lock the specification to enable runs."),
    );
  }

  if (run) {
    const status = el("div", "run-status");
    status.id = "run-status";
    const label =
      run.phase === "finished"
        ? `run ${run.runId}: ${run.final?.status ?? "done"}`
        : `run ${run.runId}: ${run.phase}`;
    status.appendChild(el("span", `run-badge run-${run.final?.status ?? run.phase}`, label));
    if (run.final?.error) status.appendChild(el("p", "error-text", run.final.error));
    if (run.final?.output !== undefined) {
      const output = el("pre", "final-output");
      output.id = "final-output";
      output.textContent = run.final.output;
      status.appendChild(output);
    }
    box.appendChild(status);
  }
  return box;
}
