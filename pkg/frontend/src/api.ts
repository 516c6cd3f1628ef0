/** HTTP + SSE client for the translation service.
 *
 * All network access goes through two injectable seams — a fetch function and
 * an EventSource factory — so tests can run fully offline.
 */

import type {
  EditResult,
  PipelineConfigJson,
  ProposeResult,
  RefineResult,
  SessionSnapshot,
  SpecJson,
  TraceJson,
  UploadResult,
} from "./types.js";

/** The subset of EventSource the client relies on. */
export interface EventSourceLike {
  addEventListener(type: string, listener: (event: MessageEvent) => void): void;
  close(): void;
  onerror: ((event: unknown) => void) | null;
}

export type EventSourceFactory = (url: string) => EventSourceLike;

export interface ApiClientOptions {
  baseUrl: string;
  fetchFn?: typeof fetch;
  eventSourceFactory?: EventSourceFactory;
}

/** Error carrying the machine-readable code the service returns. */
export class ApiError extends Error {
  readonly status: number;
  readonly code: string;

  constructor(status: number, code: string, message: string) {
    super(message);
    this.name = "ApiError";
    this.status = status;
    this.code = code;
  }
}

interface RequestOptions {
  body?: unknown;
  rawBody?: string;
  query?: Record<string, string>;
  withKey?: boolean;
}

export class ApiClient {
  readonly baseUrl: string;
  /** Held in memory only; attached per request, never persisted. */
  apiKey = "";

  private readonly fetchFn: typeof fetch;
  private readonly esFactory: EventSourceFactory;

  constructor(options: ApiClientOptions) {
    this.baseUrl = options.baseUrl.replace(/\/+$/, "");
    this.fetchFn = options.fetchFn ?? fetch.bind(globalThis);
    this.esFactory =
      options.eventSourceFactory ??
      ((url: string) => new EventSource(url) as unknown as EventSourceLike);
  }

  private async request<T>(
    method: string,
    path: string,
    options: RequestOptions = {},
  ): Promise<T> {
    let url = this.baseUrl + path;
    if (options.query) {
      url += "?" + new URLSearchParams(options.query).toString();
    }
    const headers: Record<string, string> = {};
    let body: string | undefined;
    if (options.rawBody !== undefined) {
      headers["Content-Type"] = "text/plain; charset=utf-8";
      body = options.rawBody;
    } else if (options.body !== undefined) {
      headers["Content-Type"] = "application/json";
      body = JSON.stringify(options.body);
    }
    if (options.withKey && this.apiKey) {
      headers["X-Provider-Key"] = this.apiKey;
    }
    const response = await this.fetchFn(url, { method, headers, body });
    const text = await response.text();
    let data: unknown = null;
    if (text) {
      try {
        data = JSON.parse(text);
      } catch {
        data = null;
      }
    }
    if (!response.ok) {
      const detail = (data as { detail?: { code?: string; message?: string } } | null)
        ?.detail;
      throw new ApiError(
        response.status,
        detail?.code ?? "unknown_error",
        detail?.message ?? `request failed with status ${response.status}`,
      );
    }
    return data as T;
  }

  async createSession(sourceLang: string, targetLang: string): Promise<string> {
    const result = await this.request<{ session_id: string }>("POST", "/sessions", {
      body: { source_lang: sourceLang, target_lang: targetLang },
    });
    return result.session_id;
  }

  getSession(sessionId: string): Promise<SessionSnapshot> {
    return this.request("GET", `/sessions/${sessionId}`);
  }

  uploadReference(
    sessionId: string,
    kind: string,
    content: string,
    name?: string,
  ): Promise<UploadResult> {
    const query: Record<string, string> = { kind };
    if (name) query.name = name;
    return this.request("POST", `/sessions/${sessionId}/references`, {
      query,
      rawBody: content,
    });
  }

  proposeSpec(sessionId: string, source: string): Promise<ProposeResult> {
    return this.request("POST", `/sessions/${sessionId}/spec/propose`, {
      body: { source },
      withKey: true,
    });
  }

  refineSpec(sessionId: string, instruction: string): Promise<RefineResult> {
    return this.request("POST", `/sessions/${sessionId}/spec/refine`, {
      body: { instruction },
      withKey: true,
    });
  }

  putSpec(sessionId: string, spec: SpecJson): Promise<EditResult> {
    return this.request("PUT", `/sessions/${sessionId}/spec`, { body: spec });
  }

  lockSpec(sessionId: string): Promise<{ state: string }> {
    return this.request("POST", `/sessions/${sessionId}/spec/lock`);
  }

  unlockSpec(sessionId: string): Promise<{ state: string }> {
    return this.request("POST", `/sessions/${sessionId}/spec/unlock`);
  }

  async startRun(
    sessionId: string,
    source: string,
    config?: Partial<PipelineConfigJson>,
  ): Promise<string> {
    const body: Record<string, unknown> = { source };
    if (config && Object.keys(config).length > 0) body.config = config;
    const result = await this.request<{ run_id: string }>(
      "POST",
      `/sessions/${sessionId}/runs`,
      { body, withKey: true },
    );
    return result.run_id;
  }

  getTrace(sessionId: string, runId: string): Promise<TraceJson> {
    return this.request("GET", `/sessions/${sessionId}/runs/${runId}/trace`);
  }

  eventsUrl(sessionId: string, runId: string): string {
    return `${this.baseUrl}/sessions/${sessionId}/runs/${runId}/events`;
  }

  openEvents(sessionId: string, runId: string): EventSourceLike {
    return this.esFactory(this.eventsUrl(sessionId, runId));
  }
}
