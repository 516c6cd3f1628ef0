/** Follows a run's server-sent event stream with automatic recovery.
 *
 * The server replays a run's full event log from the start on every
 * connection, so recovery from a dropped stream is: fetch the trace to
 * re-sync whatever already completed, then — if the run is still going —
 * reopen the stream and let the replay rebuild event-derived state from
 * scratch (onReconnect fires first so the consumer can reset).
 */

import type { ApiClient, EventSourceLike } from "./api.js";
import type { RunEventName, TraceJson } from "./types.js";

export interface RunStreamHandlers {
  onEvent(name: RunEventName, payload: unknown): void;
  /** A dropped stream was re-synced from the trace endpoint. */
  onResume(trace: TraceJson): void;
  /** The stream is about to reopen and will replay from the start. */
  onReconnect(): void;
  onFinished(): void;
}

const EVENT_NAMES: RunEventName[] = [
  "stage_started",
  "stage_finished",
  "chunk_done",
  "run_done",
];

export class RunStream {
  reconnects = 0;

  private source: EventSourceLike | null = null;
  private finished = false;

  constructor(
    private readonly api: ApiClient,
    private readonly sessionId: string,
    private readonly runId: string,
    private readonly handlers: RunStreamHandlers,
    private readonly reconnectDelayMs = 500,
  ) {}

  start(): void {
    this.open();
  }

  stop(): void {
    this.finished = true;
    this.source?.close();
    this.source = null;
  }

  private open(): void {
    const source = this.api.openEvents(this.sessionId, this.runId);
    this.source = source;
    for (const name of EVENT_NAMES) {
      source.addEventListener(name, (event) => this.dispatch(name, event));
    }
    source.onerror = () => {
      void this.recover(source);
    };
  }

  private dispatch(name: RunEventName, event: MessageEvent): void {
    if (this.finished) return;
    let payload: unknown;
    try {
      payload = JSON.parse(String(event.data));
    } catch {
      return;
    }
    this.handlers.onEvent(name, payload);
    if (name === "run_done") {
      this.finished = true;
      this.source?.close();
      this.source = null;
      this.handlers.onFinished();
    }
  }

  private async recover(source: EventSourceLike): Promise<void> {
    if (this.finished || source !== this.source) return;
    source.close();
    this.source = null;
    this.reconnects += 1;
    let stillRunning = true;
    try {
      const trace = await this.api.getTrace(this.sessionId, this.runId);
      this.handlers.onResume(trace);
      stillRunning = trace.status === "running";
    } catch {
      // Trace not written yet — the run is still in its first chunk.
    }
    if (this.finished) return;
    if (!stillRunning) {
      this.finished = true;
      this.handlers.onFinished();
      return;
    }
    setTimeout(() => {
      if (this.finished) return;
      this.handlers.onReconnect();
      this.open();
    }, this.reconnectDelayMs);
  }
}
