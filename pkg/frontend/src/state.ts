// Single source of UI truth. Selections must always reference entities
// present in the latest fetched snapshot; setters enforce that instead of
// trusting callers.

import type { Candidate, CanvasItem, Diagram, Prompt, Scheme, Token } from "./types";

export interface ViewState {
  sessionId: string | null;
  expression: string;
  tokens: Token[];
  selectedConcepts: string[];
  theme: string | null;
  candidates: Record<string, Candidate[]>; // concept -> list
  objectsDiagram: Diagram | null;
  attributesDiagram: Diagram | null;
  selectedObjects: { left: string; right: string } | null;
  selectedAttributes: { left: string; right: string } | null;
  schemes: Scheme[];
  selectedScheme: number | null;
  prompts: Prompt[];
  canvasItems: CanvasItem[];
}

export function initialState(): ViewState {
  return {
    sessionId: null,
    expression: "",
    tokens: [],
    selectedConcepts: [],
    theme: null,
    candidates: {},
    objectsDiagram: null,
    attributesDiagram: null,
    selectedObjects: null,
    selectedAttributes: null,
    schemes: [],
    selectedScheme: null,
    prompts: [],
    canvasItems: [],
  };
}

type Listener = (state: ViewState) => void;

export class Store {
  private state: ViewState = initialState();
  private listeners = new Set<Listener>();

  get(): ViewState {
    return this.state;
  }

  subscribe(fn: Listener): () => void {
    this.listeners.add(fn);
    return () => this.listeners.delete(fn);
  }

  update(patch: Partial<ViewState>): void {
    this.state = { ...this.state, ...patch };
    for (const fn of this.listeners) fn(this.state);
  }

  reset(): void {
    this.state = initialState();
    for (const fn of this.listeners) fn(this.state);
  }

  candidateNames(): Set<string> {
    const names = new Set<string>();
    for (const list of Object.values(this.state.candidates)) {
      for (const c of list) names.add(c.name);
    }
    return names;
  }

  // Clicking an objects-diagram link: both endpoints must be live candidates.
  selectObjectPair(left: string, right: string): boolean {
    const names = this.candidateNames();
    if (!names.has(left) || !names.has(right)) return false;
    this.update({
      selectedObjects: { left, right },
      selectedAttributes: null,
      attributesDiagram: null,
      schemes: [],
      selectedScheme: null,
    });
    return true;
  }

  selectAttributePair(left: string, right: string): boolean {
    const pair = this.state.selectedObjects;
    const d = this.state.attributesDiagram;
    if (!pair || !d) return false;
    const leftOk = d.nodes.some((n) => n.side === "left" && n.label === left);
    const rightOk = d.nodes.some((n) => n.side === "right" && n.label === right);
    if (!leftOk || !rightOk) return false;
    this.update({ selectedAttributes: { left, right } });
    return true;
  }

  selectScheme(index: number): boolean {
    if (index < 0 || index >= this.state.schemes.length) return false;
    this.update({ selectedScheme: index });
    return true;
  }

  replaceCandidates(concept: string, candidates: Candidate[]): void {
    const next = { ...this.state.candidates, [concept]: candidates };
    const names = new Set<string>();
    for (const list of Object.values(next)) for (const c of list) names.add(c.name);
    const patch: Partial<ViewState> = { candidates: next };
    const pair = this.state.selectedObjects;
    if (pair && (!names.has(pair.left) || !names.has(pair.right))) {
      // stale selection after a replacement: drop everything downstream
      patch.selectedObjects = null;
      patch.selectedAttributes = null;
      patch.attributesDiagram = null;
      patch.schemes = [];
      patch.selectedScheme = null;
    }
    this.update(patch);
  }
}
