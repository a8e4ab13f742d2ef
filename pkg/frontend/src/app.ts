import type { ExplorerClient } from "./api.js";
import { arrowsOf, forceLayout, layoutSeed, type Point } from "./layout.js";
import type { SearchResult, SearchTarget, Snapshot } from "./types.js";

export interface AppEvents {
  onSnapshot(snapshot: Snapshot): void;
  onBusy?(busy: boolean): void;
  onWarning?(message: string): void;
  onError?(message: string): void;
  onReplayStep?(done: number, total: number): void;
  onReplayEnd?(completed: boolean): void;
}

const sleep = (ms: number) => new Promise<void>((resolve) => setTimeout(resolve, ms));

/** Client-side session driver.
 *
 * Never computes mutations locally: every displayed state is a service
 * snapshot. Enforces a single in-flight request per session and freezes the
 * vertex layout at session creation.
 */
export class ExplorerApp {
  snapshot: Snapshot | null = null;
  positions: Point[] = [];
  replaying = false;
  private busy = false;
  private cancelRequested = false;

  constructor(
    private readonly client: ExplorerClient,
    private readonly events: AppEvents,
    private readonly viewSize: { width: number; height: number } = { width: 640, height: 420 },
  ) {}

  get canUndo(): boolean {
    return this.snapshot !== null && this.snapshot.history.length > 0;
  }

  get isBusy(): boolean {
    return this.busy;
  }

  private setBusy(value: boolean): void {
    this.busy = value;
    this.events.onBusy?.(value);
  }

  private accept(snapshot: Snapshot): void {
    this.snapshot = snapshot;
    this.events.onSnapshot(snapshot);
  }

  /** Run one service call under the single-in-flight guard.
   * Returns null when another request is already running. */
  private async guarded<T>(work: () => Promise<T>): Promise<T | null> {
    if (this.busy) return null;
    this.setBusy(true);
    try {
      return await work();
    } catch (error) {
      this.events.onError?.(error instanceof Error ? error.message : String(error));
      return null;
    } finally {
      this.setBusy(false);
    }
  }

  async newSession(b: number[][]): Promise<boolean> {
    const snapshot = await this.guarded(() => this.client.createSession(b));
    if (snapshot === null) return false;
    this.positions = forceLayout(
      snapshot.n,
      arrowsOf(b),
      this.viewSize.width,
      this.viewSize.height,
      layoutSeed(b),
    );
    this.accept(snapshot);
    return true;
  }

  async clickVertex(v: number): Promise<boolean> {
    if (this.snapshot === null || this.replaying) return false;
    const id = this.snapshot.id;
    if (this.snapshot.reds.includes(v)) {
      this.events.onWarning?.(`index ${v} is red: the green-sequence property is now broken`);
    }
    const snapshot = await this.guarded(() => this.client.mutate(id, v));
    if (snapshot === null) return false;
    this.accept(snapshot);
    return true;
  }

  async undo(): Promise<boolean> {
    if (!this.canUndo || this.replaying) return false;
    const id = this.snapshot!.id;
    const snapshot = await this.guarded(() => this.client.undo(id));
    if (snapshot === null) return false;
    this.accept(snapshot);
    return true;
  }

  /** Step through a sequence of mutations with a delay between steps.
   * Cancellable; each applied step is a full service round-trip. */
  async replay(sequence: number[], stepDelayMs = 500): Promise<boolean> {
    if (this.snapshot === null || this.replaying || this.busy) return false;
    this.replaying = true;
    this.cancelRequested = false;
    const id = this.snapshot.id;
    let completed = true;
    try {
      for (let i = 0; i < sequence.length; i++) {
        if (this.cancelRequested) {
          completed = false;
          break;
        }
        const snapshot = await this.client.mutate(id, sequence[i]);
        this.accept(snapshot);
        this.events.onReplayStep?.(i + 1, sequence.length);
        if (i < sequence.length - 1 && stepDelayMs > 0) await sleep(stepDelayMs);
      }
    } catch (error) {
      this.events.onError?.(error instanceof Error ? error.message : String(error));
      completed = false;
    } finally {
      this.replaying = false;
      this.events.onReplayEnd?.(completed);
    }
    return completed;
  }

  cancelReplay(): void {
    if (this.replaying) this.cancelRequested = true;
  }

  /** Search from the session's initial matrix; replay the sequence if found. */
  async searchAndReplay(
    target: SearchTarget,
    maxDepth: number,
    stepDelayMs = 500,
  ): Promise<SearchResult | null> {
    if (this.snapshot === null) return null;
    const id = this.snapshot.id;
    const result = await this.guarded(() => this.client.search(id, target, maxDepth));
    if (result === null) return null;
    if (result.result !== "found" || result.sequence === null) {
      const note = result.budgetExceeded ? " (budget exceeded)" : "";
      this.events.onWarning?.(`no sequence found within depth ${result.depth}${note}`);
      return result;
    }
    // rewind to the initial state so the found sequence replays from its start
    while (this.snapshot !== null && this.snapshot.history.length > 0) {
      const ok = await this.undo();
      if (!ok) return result;
    }
    await this.replay(result.sequence, stepDelayMs);
    return result;
  }
}
