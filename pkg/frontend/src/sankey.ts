// Two-column Sankey geometry, computed purely from the diagram payload.
// Link stroke width is proportional to the server's `width` field and the
// stroke color is the server's `color`, used verbatim; nothing is rescored
// client-side.

import type { Diagram, DiagramLink, DiagramNode } from "./types";

export interface NodeBox {
  id: string;
  label: string;
  side: "left" | "right";
  x: number;
  y: number;
  width: number;
  height: number;
}

export interface Ribbon {
  link: DiagramLink;
  path: string; // SVG path data
  strokeWidth: number;
  color: string;
  sourceLabel: string;
  targetLabel: string;
}

export interface SankeyLayout {
  width: number;
  height: number;
  nodes: NodeBox[];
  ribbons: Ribbon[];
}

export interface SankeyOptions {
  width?: number;
  rowHeight?: number;
  nodeWidth?: number;
  maxStroke?: number;
  minStroke?: number;
  padding?: number;
}

const DEFAULTS = {
  width: 560,
  rowHeight: 34,
  nodeWidth: 120,
  maxStroke: 14,
  minStroke: 1,
  padding: 10,
};

export class DiagramSchemaError extends Error {}

export function validateDiagram(payload: unknown): Diagram {
  const d = payload as Diagram;
  if (!d || typeof d !== "object") throw new DiagramSchemaError("diagram payload is not an object");
  if (d.kind !== "objects" && d.kind !== "attributes") {
    throw new DiagramSchemaError(`unknown diagram kind: ${String(d.kind)}`);
  }
  if (!Array.isArray(d.nodes) || !Array.isArray(d.links)) {
    throw new DiagramSchemaError("diagram must carry nodes and links arrays");
  }
  const ids = new Set(d.nodes.map((n) => n.id));
  for (const link of d.links) {
    if (!ids.has(link.source) || !ids.has(link.target)) {
      throw new DiagramSchemaError(`link references unknown node: ${link.source}->${link.target}`);
    }
    if (typeof link.width !== "number" || link.width < 0 || link.width > 1) {
      throw new DiagramSchemaError(`link width out of range: ${link.width}`);
    }
    if (typeof link.color !== "string") {
      throw new DiagramSchemaError("link is missing its color");
    }
  }
  return d;
}

export function nodeLabel(nodeId: string): string {
  return nodeId.slice(2); // strip the "L:"/"R:" prefix
}

export function layoutSankey(diagram: Diagram, options: SankeyOptions = {}): SankeyLayout {
  const opt = { ...DEFAULTS, ...options };
  const left = diagram.nodes.filter((n) => n.side === "left");
  const right = diagram.nodes.filter((n) => n.side === "right");
  const rows = Math.max(left.length, right.length);
  const height = rows * opt.rowHeight + 2 * opt.padding;

  const place = (nodes: DiagramNode[], x: number): NodeBox[] =>
    nodes.map((n, i) => ({
      id: n.id,
      label: n.label,
      side: n.side,
      x,
      y: opt.padding + i * opt.rowHeight,
      width: opt.nodeWidth,
      height: opt.rowHeight - 8,
    }));

  const leftBoxes = place(left, opt.padding);
  const rightBoxes = place(right, opt.width - opt.padding - opt.nodeWidth);
  const byId = new Map<string, NodeBox>();
  for (const b of [...leftBoxes, ...rightBoxes]) byId.set(b.id, b);

  const ribbons: Ribbon[] = diagram.links.map((link) => {
    const s = byId.get(link.source)!;
    const t = byId.get(link.target)!;
    const x1 = s.x + s.width;
    const y1 = s.y + s.height / 2;
    const x2 = t.x;
    const y2 = t.y + t.height / 2;
    const mx = (x1 + x2) / 2;
    return {
      link,
      path: `M ${x1} ${y1} C ${mx} ${y1}, ${mx} ${y2}, ${x2} ${y2}`,
      strokeWidth: opt.minStroke + link.width * (opt.maxStroke - opt.minStroke),
      color: link.color,
      sourceLabel: nodeLabel(link.source),
      targetLabel: nodeLabel(link.target),
    };
  });

  return { width: opt.width, height, nodes: [...leftBoxes, ...rightBoxes], ribbons };
}

// Deterministic "strongest link": widest, ties broken by node ids.
export function maxWidthLink(diagram: Diagram): DiagramLink {
  if (diagram.links.length === 0) throw new DiagramSchemaError("diagram has no links");
  return [...diagram.links].sort(
    (a, b) => b.width - a.width
      || a.source.localeCompare(b.source)
      || a.target.localeCompare(b.target),
  )[0];
}

// Clicking a link selects the corresponding pair of items in the lists.
export function linkSelection(link: DiagramLink): { left: string; right: string } {
  return { left: nodeLabel(link.source), right: nodeLabel(link.target) };
}
