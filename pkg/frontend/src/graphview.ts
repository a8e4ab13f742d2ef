import type { Point } from "./layout.js";
import type { Snapshot } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const VERTEX_RADIUS = 20;
export const GREEN_FILL = "#8be28b";
export const RED_FILL = "#f08080";

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) el.setAttribute(key, value);
  return el;
}

/** Redraw the quiver from a snapshot.
 *
 * Vertex fills mirror snapshot.greens/reds exactly; arrows follow the sign
 * pattern of the current principal matrix with weights > 1 as labels.
 */
export function renderGraph(
  svg: SVGSVGElement,
  snapshot: Snapshot,
  positions: Point[],
  onVertexClick: (v: number) => void,
): void {
  if (positions.length !== snapshot.n) {
    throw new Error(`have ${positions.length} positions for ${snapshot.n} vertices`);
  }
  while (svg.firstChild) svg.removeChild(svg.firstChild);

  const defs = svgEl("defs", {});
  const marker = svgEl("marker", {
    id: "arrowhead",
    viewBox: "0 0 10 10",
    refX: "9",
    refY: "5",
    markerWidth: "7",
    markerHeight: "7",
    orient: "auto-start-reverse",
  });
  marker.appendChild(svgEl("path", { d: "M 0 0 L 10 5 L 0 10 z", fill: "#444" }));
  defs.appendChild(marker);
  svg.appendChild(defs);

  const greens = new Set(snapshot.greens);
  const b = snapshot.b;
  for (let i = 0; i < snapshot.n; i++) {
    for (let j = 0; j < snapshot.n; j++) {
      if (b[i][j] <= 0) continue;
      const from = positions[i];
      const to = positions[j];
      const dx = to.x - from.x;
      const dy = to.y - from.y;
      const d = Math.sqrt(dx * dx + dy * dy) || 1;
      const pad = VERTEX_RADIUS + 4;
      const x1 = from.x + (dx / d) * pad;
      const y1 = from.y + (dy / d) * pad;
      const x2 = to.x - (dx / d) * pad;
      const y2 = to.y - (dy / d) * pad;
      const line = svgEl("line", {
        x1: String(x1),
        y1: String(y1),
        x2: String(x2),
        y2: String(y2),
        stroke: "#444",
        "stroke-width": "1.6",
        "marker-end": "url(#arrowhead)",
        class: "arrow",
        "data-from": String(i + 1),
        "data-to": String(j + 1),
      });
      svg.appendChild(line);
      if (b[i][j] > 1) {
        const label = svgEl("text", {
          x: String((x1 + x2) / 2 + (dy / d) * 10),
          y: String((y1 + y2) / 2 - (dx / d) * 10),
          class: "weight-label",
          "text-anchor": "middle",
        });
        label.textContent = String(b[i][j]);
        svg.appendChild(label);
      }
    }
  }

  for (let v = 1; v <= snapshot.n; v++) {
    const p = positions[v - 1];
    const group = svgEl("g", { class: "vertex", "data-vertex": String(v) });
    const circle = svgEl("circle", {
      cx: String(p.x),
      cy: String(p.y),
      r: String(VERTEX_RADIUS),
      fill: greens.has(v) ? GREEN_FILL : RED_FILL,
      stroke: "#333",
      "stroke-width": "1.5",
    });
    const label = svgEl("text", {
      x: String(p.x),
      y: String(p.y + 5),
      "text-anchor": "middle",
      class: "vertex-label",
    });
    label.textContent = String(v);
    group.appendChild(circle);
    group.appendChild(label);
    group.addEventListener("click", () => onVertexClick(v));
    svg.appendChild(group);
  }
}

/** Matrix block rendered as an aligned text grid. */
export function formatMatrix(rows: number[][]): string {
  if (rows.length === 0) return "";
  const width = Math.max(...rows.flat().map((v) => String(v).length));
  return rows.map((row) => row.map((v) => String(v).padStart(width)).join(" ")).join("\n");
}
