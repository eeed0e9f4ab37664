// Payload shapes of the documented HTTP API (docs/schemas in the backend
// repo). The UI renders these verbatim; it computes no scores and no
// prompt strings of its own.

export type Pos = "noun" | "verb" | "adjective";

export interface Token {
  surface: string;
  pos: Pos;
  span: [number, number];
  selected: boolean;
}

export interface SessionCreated {
  id: string;
  tokens: Token[];
}

export interface Candidate {
  name: string;
  concept: string;
  rationale: string;
  attributes: string[];
  iteration: number;
  preview_id: string | null;
}

export interface DiagramNode {
  id: string; // side-prefixed: "L:earth" / "R:fireplace"
  label: string;
  side: "left" | "right";
}

export interface DiagramLink {
  source: string;
  target: string;
  raw_sim: number;
  width: number; // min-max normalized similarity, drives stroke width
  raw_sent: number;
  norm_sent: number;
  color: string; // server-computed sentiment color, used verbatim
}

export interface Diagram {
  schema_version: number;
  kind: "objects" | "attributes";
  palette: { negative: string; positive: string };
  nodes: DiagramNode[];
  links: DiagramLink[];
}

export interface Pair {
  object_a: string;
  attribute_a: string;
  object_b: string;
  attribute_b: string;
}

export interface Scheme {
  scheme: string;
  reason: string;
}

export interface Prompt {
  id: string;
  text: string;
  pair: Pair;
  scheme: Scheme;
  theme: { sentence: string };
  secondary: [string, string, string][];
  retired: boolean;
}

export interface CanvasItem {
  prompt_id: string;
  coords: [number, number];
  image_refs: string[];
  count: number;
}

export interface ReplaceResult {
  id: string;
  concept: string;
  old: string;
  new: string;
  removed_items: number;
  candidates: Candidate[];
}

export interface PreviewResult {
  object: string;
  artifact_id: string;
  url: string;
}

export interface Plan {
  primary: Pair;
  secondary: [string, string, string][];
}

export interface ApiErrorBody {
  code: string;
  message: string;
  provider_detail?: string | null;
}
