import { describe, expect, it } from "vitest";

import { arrowsOf, forceLayout, layoutSeed, mulberry32 } from "../src/layout.js";

const CYCLE3 = [
  [0, 1, -1],
  [-1, 0, 1],
  [1, -1, 0],
];

describe("layoutSeed", () => {
  it("is deterministic for equal matrices", () => {
    expect(layoutSeed(CYCLE3)).toBe(layoutSeed(CYCLE3.map((row) => [...row])));
  });

  it("differs for different matrices", () => {
    const other = [
      [0, 2, -2],
      [-2, 0, 2],
      [2, -2, 0],
    ];
    expect(layoutSeed(CYCLE3)).not.toBe(layoutSeed(other));
  });
});

describe("mulberry32", () => {
  it("reproduces the same stream for the same seed", () => {
    const a = mulberry32(42);
    const b = mulberry32(42);
    for (let i = 0; i < 10; i++) expect(a()).toBe(b());
  });

  it("yields values in [0, 1)", () => {
    const r = mulberry32(7);
    for (let i = 0; i < 100; i++) {
      const v = r();
      expect(v).toBeGreaterThanOrEqual(0);
      expect(v).toBeLessThan(1);
    }
  });
});

describe("arrowsOf", () => {
  it("lists positive entries as arrows", () => {
    expect(arrowsOf(CYCLE3)).toEqual([
      [1, 2],
      [2, 3],
      [3, 1],
    ]);
  });

  it("empty for the zero matrix", () => {
    expect(arrowsOf([[0, 0], [0, 0]])).toEqual([]);
  });
});

describe("forceLayout", () => {
  it("is deterministic for the same seed", () => {
    const edges = arrowsOf(CYCLE3);
    const a = forceLayout(3, edges, 640, 420, layoutSeed(CYCLE3));
    const b = forceLayout(3, edges, 640, 420, layoutSeed(CYCLE3));
    expect(a).toEqual(b);
  });

  it("changes with the seed", () => {
    const edges = arrowsOf(CYCLE3);
    const a = forceLayout(3, edges, 640, 420, 1);
    const b = forceLayout(3, edges, 640, 420, 2);
    expect(a).not.toEqual(b);
  });

  it("keeps every vertex inside the viewport", () => {
    const positions = forceLayout(8, [], 640, 420, 99);
    for (const p of positions) {
      expect(p.x).toBeGreaterThanOrEqual(0);
      expect(p.x).toBeLessThanOrEqual(640);
      expect(p.y).toBeGreaterThanOrEqual(0);
      expect(p.y).toBeLessThanOrEqual(420);
    }
  });

  it("separates the vertices", () => {
    const positions = forceLayout(5, arrowsOf(CYCLE3), 640, 420, 5);
    for (let i = 0; i < positions.length; i++) {
      for (let j = i + 1; j < positions.length; j++) {
        const dx = positions[i].x - positions[j].x;
        const dy = positions[i].y - positions[j].y;
        expect(Math.sqrt(dx * dx + dy * dy)).toBeGreaterThan(30);
      }
    }
  });

  it("centers a single vertex", () => {
    expect(forceLayout(1, [], 640, 420, 3)).toEqual([{ x: 320, y: 210 }]);
  });

  it("handles the empty graph", () => {
    expect(forceLayout(0, [], 640, 420, 3)).toEqual([]);
  });
});
