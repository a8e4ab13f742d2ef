export interface Snapshot {
  id: string;
  n: number;
  b: number[][];
  c: number[][];
  history: number[];
  greens: number[];
  reds: number[];
  allRed: boolean;
  isGreenSequenceSoFar: boolean;
  symmetrizer: number[];
}

export interface Decomposition {
  blocks: number[][];
  permutation: number[];
}

export interface SearchResult {
  result: "found" | "exhausted";
  sequence: number[] | null;
  depth: number;
  statesVisited: number;
  elapsed: number;
  budgetExceeded: boolean;
}

export type SearchTarget = "mgs" | "g2r";
