export interface Point {
  x: number;
  y: number;
}

/** FNV-1a hash of the matrix content; the layout seed is a pure function of
 * the initial matrix so reloading the same matrix gives the same picture. */
export function layoutSeed(b: number[][]): number {
  const text = JSON.stringify(b);
  let hash = 0x811c9dc5;
  for (let i = 0; i < text.length; i++) {
    hash ^= text.charCodeAt(i);
    hash = Math.imul(hash, 0x01000193);
  }
  return hash >>> 0;
}

export function mulberry32(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) | 0;
    let t = Math.imul(state ^ (state >>> 15), 1 | state);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

/** Deterministic force-directed layout for vertices 1..n.
 *
 * Vertices start on a seeded, jittered circle and relax under pairwise
 * repulsion, spring attraction along edges, and a weak centering pull.
 * Positions are computed once per session and frozen across mutations so
 * arrow reversals stay visually trackable.
 */
export function forceLayout(
  n: number,
  edges: Array<[number, number]>,
  width: number,
  height: number,
  seed: number,
): Point[] {
  const rand = mulberry32(seed);
  const cx = width / 2;
  const cy = height / 2;
  const radius = Math.min(width, height) * 0.32;
  const points: Point[] = [];
  for (let i = 0; i < n; i++) {
    const angle = (2 * Math.PI * i) / Math.max(n, 1) + (rand() - 0.5) * 0.6;
    const r = radius * (0.8 + 0.4 * rand());
    points.push({ x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) });
  }
  if (n <= 1) {
    if (n === 1) points[0] = { x: cx, y: cy };
    return points;
  }

  const springLength = Math.min(width, height) / 2.6;
  const repulsion = springLength * springLength;
  let temperature = springLength;
  const iterations = 300;
  for (let iter = 0; iter < iterations; iter++) {
    const fx = new Array(n).fill(0);
    const fy = new Array(n).fill(0);
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let dx = points[i].x - points[j].x;
        let dy = points[i].y - points[j].y;
        let d2 = dx * dx + dy * dy;
        if (d2 < 1e-6) {
          dx = rand() - 0.5;
          dy = rand() - 0.5;
          d2 = dx * dx + dy * dy;
        }
        const d = Math.sqrt(d2);
        const push = repulsion / d2;
        fx[i] += (dx / d) * push;
        fy[i] += (dy / d) * push;
        fx[j] -= (dx / d) * push;
        fy[j] -= (dy / d) * push;
      }
    }
    for (const [src, dst] of edges) {
      const a = src - 1;
      const b = dst - 1;
      const dx = points[b].x - points[a].x;
      const dy = points[b].y - points[a].y;
      const d = Math.sqrt(dx * dx + dy * dy) || 1;
      const pull = (d - springLength) * 0.08;
      fx[a] += (dx / d) * pull;
      fy[a] += (dy / d) * pull;
      fx[b] -= (dx / d) * pull;
      fy[b] -= (dy / d) * pull;
    }
    for (let i = 0; i < n; i++) {
      fx[i] += (cx - points[i].x) * 0.02;
      fy[i] += (cy - points[i].y) * 0.02;
      const f = Math.sqrt(fx[i] * fx[i] + fy[i] * fy[i]) || 1;
      const step = Math.min(f, temperature);
      points[i].x += (fx[i] / f) * step;
      points[i].y += (fy[i] / f) * step;
    }
    temperature *= 0.97;
  }

  const margin = 36;
  for (const p of points) {
    p.x = Math.max(margin, Math.min(width - margin, p.x));
    p.y = Math.max(margin, Math.min(height - margin, p.y));
  }
  return points;
}

/** Arrow list (src, dst) of positive entries of a principal matrix, 1-based. */
export function arrowsOf(b: number[][]): Array<[number, number]> {
  const edges: Array<[number, number]> = [];
  for (let i = 0; i < b.length; i++) {
    for (let j = 0; j < b.length; j++) {
      if (b[i][j] > 0) edges.push([i + 1, j + 1]);
    }
  }
  return edges;
}
