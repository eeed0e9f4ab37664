// Mock server: replays the recorded service responses (captured from the
// fixture-backed backend by scripts/export_ui_snapshot.py) and applies the
// same mutation semantics the real service has, so the studio can run and
// be tested with no backend at all.

import { ApiError, type ApiClient } from "../api.js";
import type {
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
} from "../types.js";
import { SNAPSHOT } from "./snapshot.js";

function clone<T>(value: T): T {
  return JSON.parse(JSON.stringify(value)) as T;
}

function placeholderTile(label: string): string {
  const svg =
    `<svg xmlns="http://www.w3.org/2000/svg" width="96" height="96">` +
    `<rect width="96" height="96" fill="#e8e3d8"/>` +
    `<text x="48" y="52" font-size="10" text-anchor="middle" fill="#6b6455">${label.slice(0, 12)}</text>` +
    `</svg>`;
  return `data:image/svg+xml;utf8,${encodeURIComponent(svg)}`;
}

export class MockApiClient implements ApiClient {
  private sid: string | null = null;
  private prompts: Prompt[] = [];
  private items: CanvasItem[] = [];
  private candidates: Record<string, Candidate[]> = {};
  private replaced = false;

  private requireSession(sid: string): void {
    if (sid !== this.sid) {
      throw new ApiError("unknown_session", `no session ${sid}`, 404);
    }
  }

  async createSession(expression: string): Promise<SessionCreated> {
    if (!expression.trim()) {
      throw new ApiError("empty_expression", "expression is empty", 400);
    }
    const created = clone(SNAPSHOT.create_session) as unknown as SessionCreated;
    this.sid = created.id;
    this.prompts = [];
    this.items = [];
    this.candidates = {};
    this.replaced = false;
    return created;
  }

  async selectConcepts(sid: string, _indices: number[]) {
    this.requireSession(sid);
    return clone(SNAPSHOT.select_concepts) as unknown as { id: string; selected: string[] };
  }

  async inferTheme(sid: string) {
    this.requireSession(sid);
    return clone(SNAPSHOT.theme) as unknown as { sentence: string };
  }

  async suggestObjects(sid: string, concept: string) {
    this.requireSession(sid);
    const batch = (SNAPSHOT.objects as Record<string, unknown>)[concept];
    if (!batch) {
      throw new ApiError("oracle_unavailable", `no recorded batch for ${concept}`, 502);
    }
    const out = clone(batch) as unknown as { candidates: Candidate[] };
    this.candidates[concept] = out.candidates;
    return out;
  }

  async suggestAttributes(sid: string, names: string[]) {
    this.requireSession(sid);
    const all: Candidate[] = [];
    for (const block of Object.values(SNAPSHOT.attributes as Record<string, unknown>)) {
      all.push(...(clone(block) as unknown as { candidates: Candidate[] }).candidates);
    }
    const wanted = new Set(names);
    const hit = all.filter((c) => wanted.has(c.name));
    if (hit.length !== names.length) {
      throw new ApiError("unknown_object", "some names are not stored candidates", 404);
    }
    for (const c of hit) {
      const list = this.candidates[c.concept] ?? [];
      this.candidates[c.concept] = list.map((x) => (x.name === c.name ? c : x));
    }
    return { candidates: hit };
  }

  async analysisObjects(sid: string): Promise<Diagram> {
    this.requireSession(sid);
    return clone(SNAPSHOT.analysis_objects) as unknown as Diagram;
  }

  async analysisAttributes(sid: string, objectA: string, objectB: string): Promise<Diagram> {
    this.requireSession(sid);
    if (objectA !== "earth" || objectB !== "fireplace") {
      throw new ApiError(
        "precondition_conflict",
        `mock has attribute analysis only for earth,fireplace (asked ${objectA},${objectB})`,
        409,
      );
    }
    return clone(SNAPSHOT.analysis_attributes) as unknown as Diagram;
  }

  async generateSchemes(sid: string, pair: Pair): Promise<{ schemes: Scheme[] }> {
    this.requireSession(sid);
    if (this.replaced && (pair.object_a === "fireplace" || pair.object_b === "fireplace")) {
      throw new ApiError("unknown_object", "fireplace was replaced", 404);
    }
    return clone(SNAPSHOT.schemes) as unknown as { schemes: Scheme[] };
  }

  async composePrompt(sid: string, _pair: Pair, _schemeIndex: number): Promise<Prompt> {
    this.requireSession(sid);
    const prompt = clone(SNAPSHOT.prompt) as unknown as Prompt;
    prompt.id = `p${this.prompts.length + 1}`;
    this.prompts.push(prompt);
    return prompt;
  }

  async generateImage(sid: string, promptId: string): Promise<CanvasItem> {
    this.requireSession(sid);
    const prompt = this.prompts.find((p) => p.id === promptId);
    if (!prompt) throw new ApiError("unknown_prompt", `no prompt ${promptId}`, 404);
    if (prompt.retired) {
      throw new ApiError("precondition_conflict", "prompt references a replaced object", 409);
    }
    let item = this.items.find((i) => i.prompt_id === promptId);
    const template = (clone(SNAPSHOT.canvas) as unknown as { items: CanvasItem[] }).items[0];
    const ref = template.image_refs[0];
    if (!item) {
      item = { prompt_id: promptId, coords: template.coords, image_refs: [ref], count: 1 };
      this.items.push(item);
    } else {
      item.image_refs.push(ref);
      item.count = item.image_refs.length;
    }
    return clone(item);
  }

  async canvas(sid: string) {
    this.requireSession(sid);
    return { items: clone(this.items) };
  }

  imageUrl(artifactId: string): string {
    return placeholderTile(artifactId);
  }

  async preview(sid: string, name: string): Promise<PreviewResult> {
    this.requireSession(sid);
    return { object: name, artifact_id: `preview-${name}`, url: placeholderTile(name) };
  }

  async replaceObject(
    sid: string, concept: string, oldName: string, newName: string,
  ): Promise<ReplaceResult> {
    this.requireSession(sid);
    const list = this.candidates[concept] ?? [];
    if (!list.some((c) => c.name === oldName)) {
      throw new ApiError("unknown_object", `${oldName} is not a candidate of ${concept}`, 404);
    }
    const recorded = clone(SNAPSHOT.replace) as unknown as ReplaceResult;
    let removed = 0;
    const keep: CanvasItem[] = [];
    for (const item of this.items) {
      const prompt = this.prompts.find((p) => p.id === item.prompt_id);
      const mentions =
        prompt !== undefined &&
        (prompt.pair.object_a === oldName || prompt.pair.object_b === oldName);
      if (mentions) {
        removed += 1;
        if (prompt) prompt.retired = true;
      } else {
        keep.push(item);
      }
    }
    this.items = keep;
    this.replaced = true;
    this.candidates[concept] = recorded.candidates;
    return {
      ...recorded,
      concept,
      old: oldName,
      new: newName,
      removed_items: removed,
    };
  }

  async planMulti(sid: string): Promise<Plan> {
    this.requireSession(sid);
    throw new ApiError(
      "insufficient_concepts",
      "the recorded walkthrough has two concepts; multi-concept planning needs a live backend",
      400,
    );
  }
}
