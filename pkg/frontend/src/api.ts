/** Typed client for the mutafold session API. All mathematics happens
 * server-side; the UI never mutates locally. */

export interface ServerState {
  session_id: string | null;
  history: number[];
  diagram: string;
  matrix: string | null;
  finite: boolean;
  size: number | null;
  named_type: string | null;
  s_decomposable: boolean;
  decomposition: string | null;
  witness: number[] | null;
  canonical_key: string;
  back_to_start: boolean;
}

export class ApiError extends Error {
  status: number;
  constructor(status: number, detail: string) {
    super(detail);
    this.status = status;
  }
}

async function request(url: string, init?: RequestInit): Promise<ServerState> {
  const resp = await fetch(url, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  const body = await resp.json();
  if (!resp.ok) {
    throw new ApiError(resp.status, body.detail ?? resp.statusText);
  }
  return body as ServerState;
}

export class MutafoldClient {
  constructor(private base: string = "") {}

  createSession(text: string): Promise<ServerState> {
    return request(`${this.base}/session`, {
      method: "POST",
      body: JSON.stringify({ text }),
    });
  }

  getSession(id: string): Promise<ServerState> {
    return request(`${this.base}/session/${id}`);
  }

  mutate(id: string, vertex: number): Promise<ServerState> {
    return request(`${this.base}/session/${id}/mutate`, {
      method: "POST",
      body: JSON.stringify({ vertex }),
    });
  }

  undo(id: string): Promise<ServerState> {
    return request(`${this.base}/session/${id}/undo`, { method: "POST" });
  }
}
