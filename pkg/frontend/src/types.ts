/** JSON shapes exchanged with the translation service. */

export type Severity = "critical" | "major" | "minor";

export interface LoyaltyJson {
  author_intention: string;
  st_culture_fidelity: string;
  tt_reader_orientation: string;
  commissioner_brief: string;
}

export interface AudienceJson {
  description: string;
  expertise: string;
  locale: string;
}

export interface RegisterJson {
  formality: string;
  voice: string;
  person: string;
}

export interface SpecJson {
  source_lang: string;
  target_lang: string;
  skopos: string;
  audience: AudienceJson;
  text_type: string;
  register: RegisterJson;
  loyalty: LoyaltyJson;
  terminology_policy: string;
  preserve: string[];
  localize: string[];
  avoid: string[];
  length_constraint: string;
  format_constraints: string;
  quality_bar: string;
  open_questions: string[];
}

export interface Violation {
  field: string;
  reason: string;
}

export interface ReferencesJson {
  glossary: [string, string][];
  paired_examples: [string, string][];
  parallel_texts: [string, string][];
  style_guide: string | null;
}

export type SessionPhase = "drafting" | "locked";
export type RunStatus = "queued" | "running" | "done" | "failed";

export interface RunInfo {
  run_id: string;
  status: RunStatus;
  stale: boolean;
}

export interface SessionSnapshot {
  session_id: string;
  state: SessionPhase;
  spec: SpecJson;
  spec_markdown: string | null;
  violations: Violation[];
  references: ReferencesJson;
  revision_history: [string, string][];
  runs: RunInfo[];
  created_at: string;
  updated_at: string;
}

/** One entry of a field-level spec diff: [dotted path, old repr, new repr]. */
export type DiffEntry = [string, string, string];

export interface ProposeResult {
  spec: SpecJson;
  markdown: string;
  warnings: string[];
}

export interface RefineResult extends ProposeResult {
  diff: DiffEntry[];
}

export interface EditResult {
  spec: SpecJson;
  markdown: string | null;
  violations: Violation[];
}

export interface UploadResult {
  warnings: string[];
  references: ReferencesJson;
}

// ---------------------------------------------------------------------------
// Run trace
// ---------------------------------------------------------------------------

export interface ErrorSpanJson {
  span: string;
  category: string;
  severity: Severity;
  explanation: string;
  unlocatable: boolean;
}

export interface ReportJson {
  errors: ErrorSpanJson[];
  score: number | null;
  verdict: "accept" | "revise";
  iteration: number;
  warnings: string[];
}

export interface MemoryJson {
  ledger: [string, string][];
  summary: string;
  prev_chunk: [string, string] | null;
}

export interface ChunkInfoJson {
  index: number;
  text: string;
  boundary_kind: string;
  separator: string;
  overlong: boolean;
}

export interface ChunkRecordJson {
  chunk: ChunkInfoJson;
  identification: Record<string, string>;
  identification_warnings: string[];
  assembled_prompts: string[];
  verification_prompts: string[];
  drafts: string[];
  reports: ReportJson[];
  accepted: boolean;
  accepted_draft_index: number | null;
  verification_failed: boolean;
  translation: string;
  numeral_warnings: string[];
  memory_before: MemoryJson;
  memory_after: MemoryJson;
  memory_warnings: string[];
  elapsed_ms: number;
}

export interface ModelCallJson {
  stage_tag: string;
  system: string;
  user: string;
  reply: string;
  temperature: number;
  latency_ms: number;
  input_tokens: number | null;
  output_tokens: number | null;
}

export interface PipelineConfigJson {
  threshold: number;
  max_revisions: number;
  max_chunk_chars: number;
  generation_temperature: number;
}

export interface TraceJson {
  run_id: string;
  status: "running" | "done" | "failed";
  incomplete: boolean;
  spec: SpecJson;
  spec_markdown: string;
  config: PipelineConfigJson;
  judge_prompt_version: string;
  chunk_warnings: string[];
  chunks: ChunkRecordJson[];
  model_calls: ModelCallJson[];
  total_model_calls: number;
  timings: { started_at: string; finished_at: string; elapsed_ms: number };
  output: string;
}

// ---------------------------------------------------------------------------
// Run event stream
// ---------------------------------------------------------------------------

export type StageName = "identify" | "generate" | "verify" | "memory_update";

export interface StageStartedPayload {
  chunk_index: number;
  stage: StageName;
  iteration?: number;
}

export interface StageFinishedPayload extends StageStartedPayload {
  identification?: Record<string, string>;
  draft?: string;
  report?: ReportJson;
  memory?: MemoryJson;
}

export interface ChunkDonePayload {
  chunk_index: number;
  accepted: boolean;
  accepted_draft_index: number | null;
  score: number | null;
  translation: string;
}

export interface RunDonePayload {
  run_id: string;
  status: RunStatus;
  output?: string;
  total_model_calls?: number;
  all_accepted?: boolean;
  error?: string;
  replayed?: boolean;
}

export type RunEvent =
  | { name: "stage_started"; payload: StageStartedPayload }
  | { name: "stage_finished"; payload: StageFinishedPayload }
  | { name: "chunk_done"; payload: ChunkDonePayload }
  | { name: "run_done"; payload: RunDonePayload };

export type RunEventName = RunEvent["name"];
