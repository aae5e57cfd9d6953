/** SVG rendering of the diagram and the verdict badges.
 *
 * Every edge is a single thin arrow; weights of 2 or more get a numeric
 * label.  Vertices are click targets for mutation and are disabled while a
 * request is in flight.
 */

import { forceLayout } from "./layout.js";
import type { ViewState } from "./state.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 640;
const HEIGHT = 440;
const VERTEX_R = 16;

function el<K extends keyof SVGElementTagNameMap>(
  name: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, name);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  return node;
}

export function renderDiagram(
  svg: SVGSVGElement,
  view: ViewState,
  onVertexClick: (v: number) => void,
): void {
  svg.innerHTML = "";
  svg.setAttribute("viewBox", `0 0 ${WIDTH} ${HEIGHT}`);
  const defs = el("defs", {});
  const marker = el("marker", {
    id: "arrow",
    viewBox: "0 0 10 10",
    refX: "9",
    refY: "5",
    markerWidth: "7",
    markerHeight: "7",
    orient: "auto-start-reverse",
  });
  marker.appendChild(el("path", { d: "M 0 0 L 10 5 L 0 10 z", fill: "#333" }));
  defs.appendChild(marker);
  svg.appendChild(defs);

  const pos = forceLayout(view.diagram, WIDTH, HEIGHT);
  for (const e of view.diagram.edges) {
    const a = pos[e.tail - 1];
    const b = pos[e.head - 1];
    const dx = b.x - a.x;
    const dy = b.y - a.y;
    const d = Math.max(Math.hypot(dx, dy), 1);
    const sx = a.x + (dx / d) * VERTEX_R;
    const sy = a.y + (dy / d) * VERTEX_R;
    const tx = b.x - (dx / d) * (VERTEX_R + 4);
    const ty = b.y - (dy / d) * (VERTEX_R + 4);
    svg.appendChild(
      el("line", {
        x1: String(sx),
        y1: String(sy),
        x2: String(tx),
        y2: String(ty),
        stroke: "#333",
        "stroke-width": "1.6",
        "marker-end": "url(#arrow)",
      }),
    );
    if (e.weight >= 2) {
      const label = el("text", {
        x: String((a.x + b.x) / 2 + 8),
        y: String((a.y + b.y) / 2 - 6),
        "font-size": "15",
        fill: "#b33",
      });
      label.textContent = String(e.weight);
      svg.appendChild(label);
    }
  }
  for (let v = 1; v <= view.diagram.n; v++) {
    const p = pos[v - 1];
    const group = el("g", { cursor: view.pending ? "wait" : "pointer" });
    const circle = el("circle", {
      cx: String(p.x),
      cy: String(p.y),
      r: String(VERTEX_R),
      fill: view.pending ? "#ddd" : "#f5f0e6",
      stroke: "#333",
      "stroke-width": "1.5",
    });
    const label = el("text", {
      x: String(p.x),
      y: String(p.y + 5),
      "text-anchor": "middle",
      "font-size": "14",
    });
    label.textContent = String(v);
    group.appendChild(circle);
    group.appendChild(label);
    if (!view.pending) {
      group.addEventListener("click", () => onVertexClick(v));
    }
    svg.appendChild(group);
  }
}

export function renderBadges(container: HTMLElement, view: ViewState): void {
  container.innerHTML = "";
  for (const badge of view.badges) {
    const span = document.createElement("span");
    span.className = `badge badge-${badge.kind}`;
    span.textContent = badge.label;
    container.appendChild(span);
  }
}

export function renderHistory(
  container: HTMLElement,
  view: ViewState,
  onUndo: () => void,
): void {
  container.innerHTML = "";
  const list = document.createElement("span");
  list.className = "history";
  list.textContent = view.history.length
    ? "mu " + view.history.join(", ")
    : "(no mutations yet)";
  container.appendChild(list);
  const undo = document.createElement("button");
  undo.textContent = "undo";
  undo.disabled = view.pending || view.history.length === 0;
  undo.addEventListener("click", onUndo);
  container.appendChild(undo);
}

export function renderError(container: HTMLElement, view: ViewState): void {
  container.textContent = view.error ?? "";
}
