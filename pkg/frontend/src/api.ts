import type {
  ApiErrorBody,
  Candidate,
  CanvasItem,
  Diagram,
  Pair,
  Plan,
  PreviewResult,
  Prompt,
  ReplaceResult,
  Scheme,
  SessionCreated,
} from "./types";

export class ApiError extends Error {
  constructor(
    public readonly code: string,
    message: string,
    public readonly status: number,
    public readonly providerDetail?: string | null,
  ) {
    super(message);
  }
}

// One method per service endpoint the studio touches. The mock client in
// src/mock implements the same surface over recorded responses.
export interface ApiClient {
  createSession(expression: string): Promise<SessionCreated>;
  selectConcepts(sid: string, indices: number[]): Promise<{ id: string; selected: string[] }>;
  inferTheme(sid: string): Promise<{ sentence: string }>;
  suggestObjects(sid: string, concept: string): Promise<{ candidates: Candidate[] }>;
  suggestAttributes(sid: string, names: string[]): Promise<{ candidates: Candidate[] }>;
  analysisObjects(sid: string): Promise<Diagram>;
  analysisAttributes(sid: string, objectA: string, objectB: string): Promise<Diagram>;
  generateSchemes(sid: string, pair: Pair, n?: number): Promise<{ schemes: Scheme[] }>;
  composePrompt(sid: string, pair: Pair, schemeIndex: number, plan?: Plan): Promise<Prompt>;
  generateImage(sid: string, promptId: string): Promise<CanvasItem>;
  canvas(sid: string): Promise<{ items: CanvasItem[] }>;
  imageUrl(artifactId: string): string;
  preview(sid: string, name: string): Promise<PreviewResult>;
  replaceObject(sid: string, concept: string, oldName: string, newName: string): Promise<ReplaceResult>;
  planMulti(sid: string, choices: Record<string, [string, string]>): Promise<Plan>;
}

async function parseError(resp: Response): Promise<never> {
  let body: ApiErrorBody = { code: `http_${resp.status}`, message: resp.statusText };
  try {
    body = (await resp.json()) as ApiErrorBody;
  } catch {
    // non-JSON error body; keep the status fallback
  }
  throw new ApiError(body.code, body.message, resp.status, body.provider_detail);
}

export class HttpApiClient implements ApiClient {
  constructor(private readonly baseUrl: string) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const resp = await fetch(this.baseUrl + path, {
      method,
      headers: body === undefined ? {} : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!resp.ok) await parseError(resp);
    return (await resp.json()) as T;
  }

  createSession(expression: string) {
    return this.request<SessionCreated>("POST", "/sessions", { expression });
  }

  selectConcepts(sid: string, indices: number[]) {
    return this.request<{ id: string; selected: string[] }>(
      "POST", `/sessions/${sid}/concepts`, { indices },
    );
  }

  inferTheme(sid: string) {
    return this.request<{ sentence: string }>("POST", `/sessions/${sid}/theme`);
  }

  suggestObjects(sid: string, concept: string) {
    return this.request<{ candidates: Candidate[] }>(
      "POST", `/sessions/${sid}/concepts/${encodeURIComponent(concept)}/objects`, {},
    );
  }

  suggestAttributes(sid: string, names: string[]) {
    return this.request<{ candidates: Candidate[] }>(
      "POST", `/sessions/${sid}/objects/attributes`, { names },
    );
  }

  analysisObjects(sid: string) {
    return this.request<Diagram>("GET", `/sessions/${sid}/analysis/objects`);
  }

  analysisAttributes(sid: string, objectA: string, objectB: string) {
    const pair = encodeURIComponent(`${objectA},${objectB}`);
    return this.request<Diagram>("GET", `/sessions/${sid}/analysis/attributes?pair=${pair}`);
  }

  generateSchemes(sid: string, pair: Pair, n?: number) {
    return this.request<{ schemes: Scheme[] }>(
      "POST", `/sessions/${sid}/schemes`, n === undefined ? { pair } : { pair, n },
    );
  }

  composePrompt(sid: string, pair: Pair, schemeIndex: number, plan?: Plan) {
    return this.request<Prompt>("POST", `/sessions/${sid}/prompts`, {
      pair,
      scheme_index: schemeIndex,
      plan: plan ?? null,
    });
  }

  generateImage(sid: string, promptId: string) {
    return this.request<CanvasItem>("POST", `/sessions/${sid}/images`, { prompt_id: promptId });
  }

  canvas(sid: string) {
    return this.request<{ items: CanvasItem[] }>("GET", `/sessions/${sid}/canvas`);
  }

  imageUrl(artifactId: string) {
    return `${this.baseUrl}/images/${artifactId}`;
  }

  preview(sid: string, name: string) {
    return this.request<PreviewResult>("POST", `/sessions/${sid}/objects/preview`, { name });
  }

  replaceObject(sid: string, concept: string, oldName: string, newName: string) {
    return this.request<ReplaceResult>("POST", `/sessions/${sid}/objects/replace`, {
      concept,
      old: oldName,
      new: newName,
    });
  }

  planMulti(sid: string, choices: Record<string, [string, string]>) {
    return this.request<Plan>("POST", `/sessions/${sid}/plan-multi`, { choices });
  }
}
