/** Small deterministic force-directed layout.
 *
 * Spring forces along edges, inverse-square repulsion between all pairs,
 * centering pull; fixed iteration count and a seeded initial circle make the
 * output reproducible for a given diagram.
 */

import type { ParsedDiagram } from "./state.js";

export interface Point {
  x: number;
  y: number;
}

export function forceLayout(
  diagram: ParsedDiagram,
  width: number,
  height: number,
  iterations = 250,
): Point[] {
  const n = diagram.n;
  if (n === 0) return [];
  const cx = width / 2;
  const cy = height / 2;
  const radius = Math.min(width, height) / 3;
  const pos: Point[] = [];
  for (let i = 0; i < n; i++) {
    const angle = (2 * Math.PI * i) / n + 0.5;
    pos.push({ x: cx + radius * Math.cos(angle), y: cy + radius * Math.sin(angle) });
  }
  const spring = 90;
  const repulse = 12000;
  for (let it = 0; it < iterations; it++) {
    const step = 0.02 * (1 - it / iterations) + 0.002;
    const force: Point[] = pos.map(() => ({ x: 0, y: 0 }));
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        const dx = pos[j].x - pos[i].x;
        const dy = pos[j].y - pos[i].y;
        const d2 = Math.max(dx * dx + dy * dy, 1);
        const d = Math.sqrt(d2);
        const f = repulse / d2;
        force[i].x -= (f * dx) / d;
        force[i].y -= (f * dy) / d;
        force[j].x += (f * dx) / d;
        force[j].y += (f * dy) / d;
      }
    }
    for (const e of diagram.edges) {
      const a = e.tail - 1;
      const b = e.head - 1;
      const dx = pos[b].x - pos[a].x;
      const dy = pos[b].y - pos[a].y;
      const d = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
      const f = (d - spring) * 2;
      force[a].x += (f * dx) / d;
      force[a].y += (f * dy) / d;
      force[b].x -= (f * dx) / d;
      force[b].y -= (f * dy) / d;
    }
    for (let i = 0; i < n; i++) {
      force[i].x += (cx - pos[i].x) * 0.02;
      force[i].y += (cy - pos[i].y) * 0.02;
      pos[i].x += force[i].x * step;
      pos[i].y += force[i].y * step;
    }
  }
  return pos;
}
