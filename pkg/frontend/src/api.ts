import type { Decomposition, SearchResult, SearchTarget, Snapshot } from "./types.js";

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
    this.name = "ApiError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Thin typed client for the explorer service; all state lives server-side. */
export class ExplorerClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    if (!response.ok) {
      let detail = `${response.status}`;
      try {
        const body = await response.json();
        detail = body.detail ?? body.error ?? detail;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, String(detail));
    }
    return (await response.json()) as T;
  }

  private post<T>(path: string, body?: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: body === undefined ? "{}" : JSON.stringify(body),
    });
  }

  createSession(b: number[][]): Promise<Snapshot> {
    return this.post<Snapshot>("/api/sessions", { b });
  }

  getSession(id: string): Promise<Snapshot> {
    return this.request<Snapshot>(`/api/sessions/${id}`);
  }

  mutate(id: string, k: number): Promise<Snapshot> {
    return this.post<Snapshot>(`/api/sessions/${id}/mutations`, { k });
  }

  undo(id: string): Promise<Snapshot> {
    return this.post<Snapshot>(`/api/sessions/${id}/undo`);
  }

  decomposition(id: string): Promise<Decomposition> {
    return this.request<Decomposition>(`/api/sessions/${id}/decomposition`);
  }

  search(id: string, target: SearchTarget, maxDepth: number): Promise<SearchResult> {
    return this.post<SearchResult>(`/api/sessions/${id}/search`, { target, maxDepth });
  }
}
