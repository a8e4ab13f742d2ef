import { ExplorerApp } from "./app.js";
import { ExplorerClient } from "./api.js";
import { formatMatrix, renderGraph } from "./graphview.js";
import type { Snapshot } from "./types.js";

const DEFAULT_MATRIX = "0 1 -1\n-1 0 1\n1 -1 0";

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

/** Accept either a JSON array of rows or a whitespace grid. */
export function parseMatrixInput(text: string): number[][] {
  const trimmed = text.trim();
  if (trimmed === "") throw new Error("enter a matrix first");
  if (trimmed.startsWith("[")) {
    const parsed = JSON.parse(trimmed);
    if (!Array.isArray(parsed) || !parsed.every(Array.isArray)) {
      throw new Error("expected an array of rows");
    }
    return parsed as number[][];
  }
  const rows = trimmed
    .split(/[\n/]/)
    .map((line) => line.trim())
    .filter((line) => line !== "")
    .map((line) =>
      line.split(/\s+/).map((token) => {
        const value = Number(token);
        if (!Number.isInteger(value)) throw new Error(`not an integer: ${token}`);
        return value;
      }),
    );
  return rows;
}

function boot(): void {
  const svg = el<HTMLElement>("graph") as unknown as SVGSVGElement;
  const banner = el<HTMLDivElement>("banner");
  const historyPanel = el<HTMLDivElement>("history");
  const matrixPanel = el<HTMLPreElement>("matrices");
  const toast = el<HTMLDivElement>("toast");
  const undoButton = el<HTMLButtonElement>("undo");
  const cancelButton = el<HTMLButtonElement>("cancel-replay");
  const input = el<HTMLTextAreaElement>("matrix-input");
  input.value = DEFAULT_MATRIX;

  let toastTimer: ReturnType<typeof setTimeout> | undefined;
  const showToast = (message: string, kind: "error" | "warning") => {
    toast.textContent = message;
    toast.className = `toast ${kind} visible`;
    clearTimeout(toastTimer);
    toastTimer = setTimeout(() => toast.classList.remove("visible"), 4000);
  };

  const renderSnapshot = (snapshot: Snapshot) => {
    renderGraph(svg, snapshot, app.positions, (v) => void app.clickVertex(v));
    historyPanel.textContent =
      snapshot.history.length === 0 ? "(no mutations yet)" : snapshot.history.join(", ");
    matrixPanel.textContent = `B =\n${formatMatrix(snapshot.b)}\n\nC =\n${formatMatrix(snapshot.c)}`;
    undoButton.disabled = snapshot.history.length === 0;
    if (snapshot.allRed) {
      banner.classList.add("visible");
      banner.textContent = snapshot.isGreenSequenceSoFar
        ? "✓ maximal green sequence: green-to-red reached and every step was green"
        : "✗ green-to-red reached, but the green-sequence property was broken";
      banner.className = `banner visible ${snapshot.isGreenSequenceSoFar ? "good" : "mixed"}`;
    } else {
      banner.className = "banner";
      banner.textContent = "";
    }
  };

  const app = new ExplorerApp(new ExplorerClient(""), {
    onSnapshot: renderSnapshot,
    onBusy: (busy) => document.body.classList.toggle("busy", busy),
    onWarning: (message) => showToast(message, "warning"),
    onError: (message) => showToast(message, "error"),
    onReplayStep: (done, total) => {
      cancelButton.disabled = done >= total;
    },
    onReplayEnd: () => {
      cancelButton.disabled = true;
    },
  });

  el<HTMLButtonElement>("start").addEventListener("click", () => {
    let rows: number[][];
    try {
      rows = parseMatrixInput(input.value);
    } catch (error) {
      showToast(error instanceof Error ? error.message : String(error), "error");
      return;
    }
    void app.newSession(rows);
  });

  undoButton.addEventListener("click", () => void app.undo());

  const depthInput = el<HTMLInputElement>("depth");
  const runSearch = (target: "mgs" | "g2r") => {
    const depth = Number(depthInput.value) || 8;
    cancelButton.disabled = false;
    void app.searchAndReplay(target, depth, 600);
  };
  el<HTMLButtonElement>("find-mgs").addEventListener("click", () => runSearch("mgs"));
  el<HTMLButtonElement>("find-g2r").addEventListener("click", () => runSearch("g2r"));
  cancelButton.addEventListener("click", () => app.cancelReplay());
}

if (typeof document !== "undefined" && document.getElementById("graph")) {
  boot();
}
