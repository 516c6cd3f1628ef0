/** Application shell: owns the state store, the API client, and the render
 * loop, and exposes every user action. Text typed into forms survives
 * re-renders via a scratch map re-applied after each render.
 */

import { ApiClient, ApiError } from "./api.js";
import { Chat } from "./components/chat.js";
import { Inspector } from "./components/inspector.js";
import { References } from "./components/references.js";
import { RunPanel } from "./components/runPanel.js";
import { SpecEditor } from "./components/specEditor.js";
import { SpecView } from "./components/specView.js";
import { el, button } from "./dom.js";
import { pushRunEvent, Store } from "./state.js";
import { RunStream } from "./stream.js";
import type { PipelineConfigJson, RunEventName, SpecJson, TraceJson } from "./types.js";

export interface MountOptions {
  /** Delay before reopening a dropped event stream (0 in tests). */
  reconnectDelayMs?: number;
}

export interface AppHandle {
  store: Store;
  api: ApiClient;
  render(): void;
}

const FORM_FIELDS = [
  "api-key",
  "source-lang",
  "target-lang",
  "propose-source",
  "instruction",
  "ref-kind",
  "ref-name",
  "ref-content",
  "run-source",
  "cfg-threshold",
  "cfg-max-revisions",
  "cfg-max-chunk-chars",
  "cfg-generation-temperature",
] as const;

function humanize(error: unknown): string {
  if (!(error instanceof ApiError)) {
    return error instanceof Error ? error.message : String(error);
  }
  switch (error.code) {
    case "missing_key":
      return "Add a provider API key first — it is kept in memory only.";
    case "spec_not_locked":
      return "The specification must be locked before starting a run — review it and press “Lock specification”.";
    case "spec_locked":
      return "The specification is locked. Unlock it to keep editing.";
    case "already_locked":
      return "Already locked.";
    case "not_locked":
      return "Nothing to unlock — the specification is still in drafting.";
    case "run_in_progress":
      return "A run is already in progress for this session; wait for it to finish.";
    case "session_not_found":
      return "That session no longer exists on the server.";
    default:
      return error.message;
  }
}

export function mountApp(
  root: HTMLElement,
  api: ApiClient,
  options: MountOptions = {},
): AppHandle {
  const store = new Store();
  const forms = new Map<string, string>();
  let stream: RunStream | null = null;

  const refresh = async () => {
    const sessionId = store.state.sessionId;
    if (!sessionId) return;
    const snapshot = await api.getSession(sessionId);
    store.update((s) => {
      s.snapshot = snapshot;
    });
  };

  const guarded = (action: () => Promise<void>) => {
    store.update((s) => {
      s.busy = true;
      s.notice = null;
    });
    void action()
      .then(() => {
        store.update((s) => {
          s.busy = false;
        });
      })
      .catch((error: unknown) => {
        store.update((s) => {
          s.busy = false;
          s.notice = { kind: "error", text: humanize(error) };
        });
      });
  };

  const newSession = () =>
    guarded(async () => {
      const sourceLang = forms.get("source-lang")?.trim() || "ja";
      const targetLang = forms.get("target-lang")?.trim() || "en";
      const sessionId = await api.createSession(sourceLang, targetLang);
      store.update((s) => {
        Object.assign(s, {
          sessionId,
          snapshot: null,
          chat: [],
          lastDiff: [],
          run: null,
          selectedChunk: 0,
        });
      });
      await refresh();
    });

  const propose = (source: string) =>
    guarded(async () => {
      const sessionId = requireSession();
      const result = await api.proposeSpec(sessionId, source);
      store.update((s) => {
        s.chat.push({
          role: "you",
          text: `Draft a specification from the pasted source (${source.length} characters).`,
        });
        s.chat.push({
          role: "service",
          text:
            "Proposed a specification from the source." +
            (result.warnings.length > 0 ? ` Warnings: ${result.warnings.join("; ")}` : ""),
        });
        s.lastDiff = [];
      });
      await refresh();
    });

  const refine = (instruction: string) =>
    guarded(async () => {
      const sessionId = requireSession();
      const result = await api.refineSpec(sessionId, instruction);
      store.update((s) => {
        s.chat.push({ role: "you", text: instruction });
        s.chat.push({
          role: "service",
          text:
            result.diff.length > 0
              ? `Updated ${result.diff.length} field${result.diff.length === 1 ? "" : "s"}.`
              : "No fields changed.",
          diff: result.diff,
        });
        s.lastDiff = result.diff;
      });
      await refresh();
    });

  const applyEdits = (spec: SpecJson) =>
    guarded(async () => {
      const sessionId = requireSession();
      const result = await api.putSpec(sessionId, spec);
      store.update((s) => {
        s.lastDiff = [];
        s.notice =
          result.violations.length > 0
            ? {
                kind: "info",
                text: `Saved with open problems: ${result.violations
                  .map((v) => v.field)
                  .join(", ")}`,
              }
            : { kind: "info", text: "Edits applied." };
      });
      await refresh();
    });

  const lock = () =>
    guarded(async () => {
      await api.lockSpec(requireSession());
      await refresh();
    });

  const unlock = () =>
    guarded(async () => {
      await api.unlockSpec(requireSession());
      await refresh();
    });

  const upload = (kind: string, content: string, name: string) =>
    guarded(async () => {
      const sessionId = requireSession();
      const result = await api.uploadReference(sessionId, kind, content, name || undefined);
      store.update((s) => {
        s.notice =
          result.warnings.length > 0
            ? { kind: "info", text: `Added with warnings: ${result.warnings.join("; ")}` }
            : { kind: "info", text: "Reference added." };
      });
      await refresh();
    });

  const startRun = (source: string, config: Partial<PipelineConfigJson>) => {
    // Hard guard, independent of button state: while the specification is
    // still in drafting no run request leaves the browser.
    if (store.state.snapshot?.state !== "locked") {
      store.update((s) => {
        s.notice = {
          kind: "error",
          text: "The specification must be locked before starting a run — review it and press “Lock specification”.",
        };
      });
      return;
    }
    guarded(async () => {
      const sessionId = requireSession();
      const runId = await api.startRun(sessionId, source, config);
      store.update((s) => {
        s.run = {
          runId,
          phase: "streaming",
          events: [],
          chunkResults: [],
          final: null,
          trace: null,
        };
        s.selectedChunk = 0;
      });
      stream?.stop();
      stream = new RunStream(
        api,
        sessionId,
        runId,
        {
          onEvent: (name: RunEventName, payload: unknown) => {
            store.update((s) => {
              if (s.run?.runId === runId) pushRunEvent(s.run, name, payload);
            });
          },
          onResume: (trace: TraceJson) => {
            store.update((s) => {
              if (s.run?.runId === runId) {
                s.run.trace = trace;
                if (trace.status === "running") s.run.phase = "reconnecting";
              }
            });
          },
          onReconnect: () => {
            store.update((s) => {
              if (s.run?.runId === runId) {
                s.run.events = [];
                s.run.chunkResults = [];
                s.run.phase = "streaming";
              }
            });
          },
          onFinished: () => {
            void (async () => {
              // The exact assembled prompts exist only in the trace, so a
              // finished (or resumed) run always fetches it.
              let trace: TraceJson | null = null;
              try {
                trace = await api.getTrace(sessionId, runId);
              } catch {
                trace = null;
              }
              store.update((s) => {
                if (s.run?.runId === runId) {
                  s.run.phase = "finished";
                  if (trace) s.run.trace = trace;
                }
              });
              await refresh();
            })();
          },
        },
        options.reconnectDelayMs ?? 500,
      );
      stream.start();
    });
  };

  const requireSession = (): string => {
    const sessionId = store.state.sessionId;
    if (!sessionId) throw new Error("Create a session first.");
    return sessionId;
  };

  const build = (): HTMLElement => {
    const state = store.state;
    const page = el("div", "workbench");

    const header = el("header", "top-bar");
    header.appendChild(el("h1", "", "Translation workbench"));
    const connection = el("div", "connection");
    const keyInput = el("input");
    keyInput.id = "api-key";
    keyInput.type = "password";
    keyInput.placeholder = "provider API key (memory only)";
    keyInput.addEventListener("input", () => {
      api.apiKey = keyInput.value;
    });
    connection.appendChild(keyInput);
    const sourceLang = el("input");
    sourceLang.id = "source-lang";
    sourceLang.placeholder = "source lang (ja)";
    sourceLang.size = 10;
    connection.appendChild(sourceLang);
    const targetLang = el("input");
    targetLang.id = "target-lang";
    targetLang.placeholder = "target lang (en)";
    targetLang.size = 10;
    connection.appendChild(targetLang);
    const newSessionBtn = button("New session", "primary", newSession);
    newSessionBtn.id = "new-session";
    connection.appendChild(newSessionBtn);
    if (state.sessionId) {
      connection.appendChild(el("span", "session-label", `session ${state.sessionId}`));
    }
    header.appendChild(connection);
    page.appendChild(header);

    if (state.notice) {
      const notice = el("div", `notice notice-${state.notice.kind}`, state.notice.text);
      notice.id = "notice";
      page.appendChild(notice);
    }

    if (!state.snapshot) {
      page.appendChild(
        el("p", "muted intro", "Create a session to start drafting a specification."),
      );
      return page;
    }

    const grid = el("main", "grid");
    const left = el("div", "column");
    left.appendChild(Chat(state.chat, state.busy, { propose, refine }));
    left.appendChild(SpecEditor(state.snapshot, state.lastDiff, { applyEdits, lock, unlock }));
    left.appendChild(References(state.snapshot.references, { upload }));
    grid.appendChild(left);

    const right = el("div", "column");
    right.appendChild(SpecView(state.snapshot));
    right.appendChild(RunPanel(state.snapshot, state.run, { startRun }));
    right.appendChild(
      Inspector(state.run, state.selectedChunk, (index) => {
        store.update((s) => {
          s.selectedChunk = index;
        });
      }),
    );
    grid.appendChild(right);
    page.appendChild(grid);
    return page;
  };

  const bindForms = () => {
    for (const id of FORM_FIELDS) {
      const node = root.querySelector<HTMLInputElement | HTMLTextAreaElement | HTMLSelectElement>(
        `#${id}`,
      );
      if (!node) continue;
      const saved = forms.get(id);
      if (saved !== undefined) node.value = saved;
      node.addEventListener("input", () => forms.set(id, node.value));
      node.addEventListener("change", () => forms.set(id, node.value));
    }
    const keyInput = root.querySelector<HTMLInputElement>("#api-key");
    if (keyInput) api.apiKey = keyInput.value;
  };

  const render = () => {
    root.replaceChildren(build());
    bindForms();
  };

  store.subscribe(render);
  render();
  return { store, api, render };
}
