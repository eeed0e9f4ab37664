// Zoomable 2D canvas math. Items live in the unit square (object
// similarity on X, attribute similarity on Y, origin bottom-left); the
// viewport transform is pure view state and never touches the server.

import type { CanvasItem } from "./types";

export interface Viewport {
  zoom: number; // scale factor, 1 = whole unit square visible
  panX: number; // world-units offset of the view origin
  panY: number;
}

export interface CanvasOptions {
  width: number;
  height: number;
  thumbSize: number;
}

export interface ItemView {
  item: CanvasItem;
  x: number; // screen px of the thumbnail's top-left corner
  y: number;
  size: number;
  badge: number; // group counter shown top-right, server-reported
  artifactId: string | null; // newest image in the group; null -> placeholder tile
}

export const HOME_VIEW: Viewport = { zoom: 1, panX: 0, panY: 0 };

export function worldToScreen(
  coords: [number, number], view: Viewport, opt: CanvasOptions,
): { x: number; y: number } {
  const [wx, wy] = coords;
  return {
    x: (wx - view.panX) * view.zoom * opt.width,
    y: opt.height - (wy - view.panY) * view.zoom * opt.height, // flip: similarity grows upward
  };
}

export function itemViews(
  items: CanvasItem[], view: Viewport, opt: CanvasOptions,
): ItemView[] {
  return items.map((item) => {
    const { x, y } = worldToScreen(item.coords, view, opt);
    const last = item.image_refs.length ? item.image_refs[item.image_refs.length - 1] : null;
    return {
      item,
      x: x - opt.thumbSize / 2,
      y: y - opt.thumbSize / 2,
      size: opt.thumbSize,
      badge: item.count,
      artifactId: last,
    };
  });
}

// Zoom about a screen point so the world position under the cursor stays put.
export function zoomAt(
  view: Viewport, factor: number, screenX: number, screenY: number, opt: CanvasOptions,
): Viewport {
  const zoom = Math.min(16, Math.max(0.25, view.zoom * factor));
  const wx = view.panX + screenX / (view.zoom * opt.width);
  const wy = view.panY + (opt.height - screenY) / (view.zoom * opt.height);
  return {
    zoom,
    panX: wx - screenX / (zoom * opt.width),
    panY: wy - (opt.height - screenY) / (zoom * opt.height),
  };
}

export function panBy(view: Viewport, dxPx: number, dyPx: number, opt: CanvasOptions): Viewport {
  return {
    zoom: view.zoom,
    panX: view.panX - dxPx / (view.zoom * opt.width),
    panY: view.panY + dyPx / (view.zoom * opt.height),
  };
}

// Screen-space distance between two items under a viewport; zooming in
// separates near-identical coordinates without any server round trip.
export function screenDistance(
  a: CanvasItem, b: CanvasItem, view: Viewport, opt: CanvasOptions,
): number {
  const pa = worldToScreen(a.coords, view, opt);
  const pb = worldToScreen(b.coords, view, opt);
  return Math.hypot(pa.x - pb.x, pa.y - pb.y);
}
