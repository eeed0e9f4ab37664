// DOM glue for the studio. All scoring, prompt text and counters come from
// the service verbatim; this layer only lays out payloads and forwards
// clicks to endpoints (mutations awaited one at a time, server state wins).

import { ApiError, type ApiClient } from "./api.js";
import {
  HOME_VIEW,
  itemViews,
  panBy,
  zoomAt,
  type CanvasOptions,
  type Viewport,
} from "./canvas.js";
import {
  DiagramSchemaError,
  layoutSankey,
  linkSelection,
  validateDiagram,
} from "./sankey.js";
import { Store } from "./state.js";
import type { Candidate, Diagram, Pair } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const CANVAS_OPT: CanvasOptions = { width: 520, height: 420, thumbSize: 72 };

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K, cls?: string, text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (cls) node.className = cls;
  if (text !== undefined) node.textContent = text;
  return node;
}

export class App {
  readonly store = new Store();
  private view: Viewport = { ...HOME_VIEW };
  private busy = false;

  constructor(
    private readonly api: ApiClient,
    private readonly root: HTMLElement,
  ) {}

  mount(): void {
    this.root.innerHTML = "";
    this.root.append(
      this.buildExpressionModule(),
      this.buildColumns(),
    );
    this.store.subscribe(() => this.render());
    this.render();
  }

  // -- layout skeleton ------------------------------------------------------

  private buildExpressionModule(): HTMLElement {
    const bar = el("div", "expression-bar");
    const input = el("input") as HTMLInputElement;
    input.id = "expression-input";
    input.placeholder = "Describe an abstract idea, e.g. “global warming”";
    const go = el("button", "", "Parse");
    go.onclick = () => this.guard(async () => {
      const created = await this.api.createSession(input.value);
      this.store.reset();
      this.store.update({
        sessionId: created.id,
        expression: input.value,
        tokens: created.tokens,
      });
    });
    const chips = el("div", "concept-chips");
    chips.id = "concept-chips";
    const analyze = el("button", "", "Map concepts");
    analyze.id = "analyze-button";
    analyze.onclick = () => this.guard(() => this.runMapping());
    bar.append(input, go, chips, analyze);
    return bar;
  }

  private buildColumns(): HTMLElement {
    const grid = el("div", "columns");
    const lists = el("div", "panel");
    lists.id = "candidate-panels";
    const middle = el("div", "panel");
    middle.id = "blend-panel";
    const right = el("div", "panel");
    right.id = "analysis-panel";
    const canvas = el("div", "panel");
    canvas.id = "canvas-panel";
    grid.append(lists, middle, right, canvas);
    return grid;
  }

  // -- flows ------------------------------------------------------------------

  private async runMapping(): Promise<void> {
    const s = this.store.get();
    if (!s.sessionId) throw new ApiError("validation", "parse an expression first", 400);
    const picks = s.tokens
      .map((t, i) => ({ t, i }))
      .filter(({ t }) => t.selected)
      .map(({ i }) => i);
    if (picks.length < 2) {
      throw new ApiError("validation", "select at least two concepts", 400);
    }
    const selected = await this.api.selectConcepts(s.sessionId, picks);
    const theme = await this.api.inferTheme(s.sessionId);
    const candidates: Record<string, Candidate[]> = {};
    for (const concept of selected.selected) {
      const batch = await this.api.suggestObjects(s.sessionId, concept);
      const filled = await this.api.suggestAttributes(
        s.sessionId, batch.candidates.map((c) => c.name),
      );
      candidates[concept] = filled.candidates;
    }
    const objectsDiagram = validateDiagram(await this.api.analysisObjects(s.sessionId));
    this.store.update({
      selectedConcepts: selected.selected,
      theme: theme.sentence,
      candidates,
      objectsDiagram,
      selectedObjects: null,
      selectedAttributes: null,
      attributesDiagram: null,
      schemes: [],
      selectedScheme: null,
    });
  }

  private async pickObjectPair(left: string, right: string): Promise<void> {
    const s = this.store.get();
    if (!s.sessionId) return;
    if (!this.store.selectObjectPair(left, right)) return;
    const diagram = validateDiagram(
      await this.api.analysisAttributes(s.sessionId, left, right),
    );
    this.store.update({ attributesDiagram: diagram });
  }

  private currentPair(): Pair | null {
    const s = this.store.get();
    if (!s.selectedObjects || !s.selectedAttributes) return null;
    return {
      object_a: s.selectedObjects.left,
      attribute_a: s.selectedAttributes.left,
      object_b: s.selectedObjects.right,
      attribute_b: s.selectedAttributes.right,
    };
  }

  private async fetchSchemes(): Promise<void> {
    const s = this.store.get();
    const pair = this.currentPair();
    if (!s.sessionId || !pair) return;
    const { schemes } = await this.api.generateSchemes(s.sessionId, pair);
    this.store.update({ schemes, selectedScheme: schemes.length ? 0 : null });
  }

  private async generateBlend(): Promise<void> {
    const s = this.store.get();
    const pair = this.currentPair();
    if (!s.sessionId || !pair || s.selectedScheme === null) return;
    const prompt = await this.api.composePrompt(s.sessionId, pair, s.selectedScheme);
    await this.api.generateImage(s.sessionId, prompt.id);
    const { items } = await this.api.canvas(s.sessionId);
    this.store.update({ prompts: [...s.prompts, prompt], canvasItems: items });
  }

  private async replaceObject(concept: string, oldName: string): Promise<void> {
    const s = this.store.get();
    if (!s.sessionId) return;
    const newName = window.prompt(`Replace “${oldName}” (${concept}) with:`);
    if (!newName) return;
    const result = await this.api.replaceObject(s.sessionId, concept, oldName, newName);
    this.store.replaceCandidates(concept, result.candidates);
    // refresh analysis and canvas: server state is authoritative
    const objectsDiagram = validateDiagram(await this.api.analysisObjects(s.sessionId));
    const { items } = await this.api.canvas(s.sessionId);
    this.store.update({ objectsDiagram, canvasItems: items });
  }

  private async moreObjects(concept: string): Promise<void> {
    const s = this.store.get();
    if (!s.sessionId) return;
    const batch = await this.api.suggestObjects(s.sessionId, concept);
    const filled = await this.api.suggestAttributes(
      s.sessionId, batch.candidates.map((c) => c.name),
    );
    const merged = [...(s.candidates[concept] ?? []), ...filled.candidates];
    this.store.replaceCandidates(concept, merged);
  }

  // Serializes mutating flows and renders failures as a toast with retry.
  private guard(run: () => Promise<void>): void {
    if (this.busy) return;
    this.busy = true;
    run()
      .catch((err) => this.toast(err, () => this.guard(run)))
      .finally(() => {
        this.busy = false;
      });
  }

  private toast(err: unknown, retry: () => void): void {
    const box = el("div", "toast");
    const text = err instanceof ApiError
      ? `${err.code}: ${err.message}`
      : `error: ${String(err)}`;
    box.append(el("span", "", text));
    const again = el("button", "", "Retry");
    again.onclick = () => {
      box.remove();
      retry();
    };
    const dismiss = el("button", "", "Dismiss");
    dismiss.onclick = () => box.remove();
    box.append(again, dismiss);
    this.root.append(box);
  }

  // -- rendering ---------------------------------------------------------------

  private render(): void {
    this.renderChips();
    this.renderCandidates();
    this.renderBlendPanel();
    this.renderAnalysis();
    this.renderCanvas();
  }

  private renderChips(): void {
    const chips = this.root.querySelector("#concept-chips");
    if (!chips) return;
    chips.innerHTML = "";
    const s = this.store.get();
    s.tokens.forEach((t, i) => {
      const chip = el("button", `chip pos-${t.pos}${t.selected ? " selected" : ""}`);
      chip.textContent = `${t.surface} · ${t.pos}`;
      chip.onclick = () => {
        const tokens = s.tokens.map((tok, j) =>
          j === i ? { ...tok, selected: !tok.selected } : tok,
        );
        this.store.update({ tokens });
      };
      chips.append(chip);
    });
  }

  private renderCandidates(): void {
    const host = this.root.querySelector("#candidate-panels");
    if (!host) return;
    host.innerHTML = "";
    const s = this.store.get();
    if (s.theme) host.append(el("p", "theme", `Theme: ${s.theme}`));
    for (const [concept, list] of Object.entries(s.candidates)) {
      const section = el("section", "candidate-list");
      section.append(el("h3", "", concept));
      for (const c of list) {
        const row = el("div", "candidate-row");
        row.dataset.object = c.name;
        const selected =
          s.selectedObjects &&
          (s.selectedObjects.left === c.name || s.selectedObjects.right === c.name);
        if (selected) row.classList.add("selected");
        row.append(el("strong", "", c.name));
        row.append(el("p", "rationale", c.rationale));
        row.append(el("p", "attributes", c.attributes.join(" · ")));
        const preview = el("button", "", "preview");
        preview.onclick = () => this.guard(async () => {
          const p = await this.api.preview(s.sessionId!, c.name);
          this.lightbox(p.url, c.name);
        });
        const replace = el("button", "", "replace");
        replace.onclick = () => this.guard(() => this.replaceObject(concept, c.name));
        row.append(preview, replace);
        section.append(row);
      }
      const more = el("button", "", "More objects");
      more.onclick = () => this.guard(() => this.moreObjects(concept));
      section.append(more);
      host.append(section);
    }
  }

  private renderBlendPanel(): void {
    const host = this.root.querySelector("#blend-panel");
    if (!host) return;
    host.innerHTML = "";
    const s = this.store.get();
    host.append(el("h3", "", "Blend"));
    if (s.selectedObjects) {
      host.append(el("p", "", `Objects: ${s.selectedObjects.left} + ${s.selectedObjects.right}`));
    }
    if (s.selectedAttributes) {
      host.append(
        el("p", "", `Attributes: ${s.selectedAttributes.left} + ${s.selectedAttributes.right}`),
      );
    }
    const schemesBtn = el("button", "", "Generate schemes");
    schemesBtn.disabled = this.currentPair() === null;
    schemesBtn.onclick = () => this.guard(() => this.fetchSchemes());
    host.append(schemesBtn);
    s.schemes.forEach((scheme, i) => {
      const row = el("label", "scheme-row");
      const radio = el("input") as HTMLInputElement;
      radio.type = "radio";
      radio.name = "scheme";
      radio.checked = s.selectedScheme === i;
      radio.onchange = () => this.store.selectScheme(i);
      row.append(radio, el("span", "", scheme.scheme), el("small", "", scheme.reason));
      host.append(row);
    });
    const blendBtn = el("button", "primary", "Generate blend image");
    blendBtn.disabled = s.selectedScheme === null;
    blendBtn.onclick = () => this.guard(() => this.generateBlend());
    host.append(blendBtn);
    if (s.prompts.length) {
      const last = s.prompts[s.prompts.length - 1];
      host.append(el("p", "prompt-text", last.text));
    }
  }

  private renderAnalysis(): void {
    const host = this.root.querySelector("#analysis-panel");
    if (!host) return;
    host.innerHTML = "";
    const s = this.store.get();
    host.append(el("h3", "", "Objects analysis"));
    host.append(this.sankeySvg(s.objectsDiagram, (left, right) =>
      this.guard(() => this.pickObjectPair(left, right)),
    ));
    host.append(el("h3", "", "Attributes analysis"));
    host.append(this.sankeySvg(s.attributesDiagram, (left, right) => {
      this.store.selectAttributePair(left, right);
    }));
  }

  private sankeySvg(
    diagram: Diagram | null,
    onPick: (left: string, right: string) => void,
  ): HTMLElement | SVGSVGElement {
    if (!diagram) return el("p", "empty-hint", "No analysis yet.");
    let layout;
    try {
      layout = layoutSankey(validateDiagram(diagram));
    } catch (err) {
      if (err instanceof DiagramSchemaError) {
        return el("div", "error-banner", `Bad diagram payload: ${err.message}`);
      }
      throw err;
    }
    const svg = document.createElementNS(SVG_NS, "svg");
    svg.setAttribute("viewBox", `0 0 ${layout.width} ${layout.height}`);
    svg.setAttribute("class", `sankey sankey-${diagram.kind}`);
    for (const ribbon of layout.ribbons) {
      const path = document.createElementNS(SVG_NS, "path");
      path.setAttribute("d", ribbon.path);
      path.setAttribute("fill", "none");
      path.setAttribute("stroke", ribbon.color);
      path.setAttribute("stroke-width", String(ribbon.strokeWidth));
      path.setAttribute("class", "link");
      path.addEventListener("click", () => {
        const pick = linkSelection(ribbon.link);
        onPick(pick.left, pick.right);
      });
      svg.append(path);
    }
    for (const node of layout.nodes) {
      const g = document.createElementNS(SVG_NS, "g");
      const rect = document.createElementNS(SVG_NS, "rect");
      rect.setAttribute("x", String(node.x));
      rect.setAttribute("y", String(node.y));
      rect.setAttribute("width", String(node.width));
      rect.setAttribute("height", String(node.height));
      rect.setAttribute("class", "node");
      const label = document.createElementNS(SVG_NS, "text");
      label.setAttribute("x", String(node.x + node.width / 2));
      label.setAttribute("y", String(node.y + node.height / 2 + 4));
      label.setAttribute("text-anchor", "middle");
      label.textContent = node.label;
      g.append(rect, label);
      svg.append(g);
    }
    return svg;
  }

  private renderCanvas(): void {
    const host = this.root.querySelector("#canvas-panel");
    if (!host) return;
    host.innerHTML = "";
    host.append(el("h3", "", "Exploration canvas"));
    const s = this.store.get();
    if (!s.canvasItems.length) {
      host.append(el("p", "empty-hint", "Generated blends land here, placed by similarity."));
      return;
    }
    const stage = el("div", "canvas-stage");
    stage.style.width = `${CANVAS_OPT.width}px`;
    stage.style.height = `${CANVAS_OPT.height}px`;
    stage.addEventListener("wheel", (ev) => {
      ev.preventDefault();
      const rect = stage.getBoundingClientRect();
      const factor = ev.deltaY < 0 ? 1.2 : 1 / 1.2;
      this.view = zoomAt(
        this.view, factor, ev.clientX - rect.left, ev.clientY - rect.top, CANVAS_OPT,
      );
      this.renderCanvas();
    });
    let dragging: { x: number; y: number } | null = null;
    stage.addEventListener("pointerdown", (ev) => {
      dragging = { x: ev.clientX, y: ev.clientY };
    });
    stage.addEventListener("pointermove", (ev) => {
      if (!dragging) return;
      this.view = panBy(this.view, ev.clientX - dragging.x, ev.clientY - dragging.y, CANVAS_OPT);
      dragging = { x: ev.clientX, y: ev.clientY };
      this.renderCanvas();
    });
    stage.addEventListener("pointerup", () => {
      dragging = null;
    });

    for (const view of itemViews(s.canvasItems, this.view, CANVAS_OPT)) {
      const tile = el("div", "canvas-item");
      tile.style.left = `${view.x}px`;
      tile.style.top = `${view.y}px`;
      tile.style.width = `${view.size}px`;
      tile.style.height = `${view.size}px`;
      if (view.artifactId) {
        const img = el("img") as HTMLImageElement;
        img.src = this.api.imageUrl(view.artifactId);
        img.onerror = () => {
          img.remove();
          tile.classList.add("placeholder");
        };
        img.onclick = () => this.lightbox(img.src, view.item.prompt_id);
        tile.append(img);
      } else {
        tile.classList.add("placeholder");
      }
      tile.append(el("span", "badge", String(view.badge)));
      stage.append(tile);
    }
    host.append(stage);
    host.append(el("p", "axis-label", "x: object similarity · y: attribute similarity"));
  }

  private lightbox(url: string, caption: string): void {
    const overlay = el("div", "lightbox");
    const img = el("img") as HTMLImageElement;
    img.src = url;
    overlay.append(img, el("p", "", caption));
    overlay.onclick = () => overlay.remove();
    this.root.append(overlay);
  }
}
