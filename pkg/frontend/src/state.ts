/** Single mutable UI state with change notification; the app re-renders on
 * every notify. Form text lives in the DOM (and a scratch map), not here, so
 * a re-render never races the user's typing.
 */

import type {
  ChunkDonePayload,
  DiffEntry,
  RunDonePayload,
  RunEvent,
  RunEventName,
  SessionSnapshot,
  TraceJson,
} from "./types.js";

export interface ChatEntry {
  role: "you" | "service";
  text: string;
  diff?: DiffEntry[];
}

export interface RunView {
  runId: string;
  phase: "streaming" | "reconnecting" | "finished";
  events: RunEvent[];
  chunkResults: ChunkDonePayload[];
  final: RunDonePayload | null;
  trace: TraceJson | null;
}

export interface Notice {
  kind: "info" | "error";
  text: string;
}

export interface UiState {
  sessionId: string | null;
  snapshot: SessionSnapshot | null;
  chat: ChatEntry[];
  lastDiff: DiffEntry[];
  run: RunView | null;
  selectedChunk: number;
  notice: Notice | null;
  busy: boolean;
}

export function initialState(): UiState {
  return {
    sessionId: null,
    snapshot: null,
    chat: [],
    lastDiff: [],
    run: null,
    selectedChunk: 0,
    notice: null,
    busy: false,
  };
}

export class Store {
  private listeners: (() => void)[] = [];

  constructor(public state: UiState = initialState()) {}

  subscribe(listener: () => void): void {
    this.listeners.push(listener);
  }

  /** Mutate state and re-render. */
  update(mutate: (state: UiState) => void): void {
    mutate(this.state);
    for (const listener of this.listeners) listener();
  }
}

export function pushRunEvent(run: RunView, name: RunEventName, payload: unknown): void {
  run.events.push({ name, payload } as RunEvent);
  if (name === "chunk_done") {
    run.chunkResults.push(payload as ChunkDonePayload);
  } else if (name === "run_done") {
    run.final = payload as RunDonePayload;
    run.phase = "finished";
  }
}
