/** View-state reducer: a pure render of server responses.
 *
 * Replaying the same sequence of responses always reproduces the same view
 * state, which is what makes the request log a complete record of a session.
 */

import type { ServerState } from "./api.js";

export interface DiagramEdge {
  tail: number;
  head: number;
  weight: number;
}

export interface ParsedDiagram {
  n: number;
  edges: DiagramEdge[];
}

export interface Badge {
  label: string;
  kind: "finite" | "infinite" | "decomposable" | "named" | "marker";
}

export interface ViewState {
  sessionId: string | null;
  diagram: ParsedDiagram;
  badges: Badge[];
  history: number[];
  pending: boolean;
  backToStart: boolean;
  canonicalKey: string;
  error: string | null;
}

export function parseDiagramText(text: string): ParsedDiagram {
  const lines = text
    .split("\n")
    .map((l) => l.trim())
    .filter((l) => l.length > 0 && !l.startsWith("#"));
  if (lines.length === 0) throw new Error("empty diagram text");
  const head = lines[0].split(/\s+/);
  if (head[0] !== "diagram" || head.length !== 2) {
    throw new Error(`expected 'diagram <n>', got '${lines[0]}'`);
  }
  const n = Number(head[1]);
  const edges: DiagramEdge[] = lines.slice(1).map((line) => {
    const parts = line.split(/\s+/).map(Number);
    if (parts.length !== 3 || parts.some((x) => !Number.isInteger(x))) {
      throw new Error(`bad edge line '${line}'`);
    }
    return { tail: parts[0], head: parts[1], weight: parts[2] };
  });
  return { n, edges };
}

export function badgesOf(state: ServerState): Badge[] {
  const badges: Badge[] = [];
  if (state.finite) {
    const size = state.size === null ? "" : `, ${state.size} diagrams`;
    badges.push({ label: `finite${size}`, kind: "finite" });
  } else {
    badges.push({ label: "mutation-infinite", kind: "infinite" });
  }
  if (state.named_type) {
    badges.push({ label: `${state.named_type}, non-decomposable`, kind: "named" });
  } else if (state.s_decomposable) {
    badges.push({ label: "s-decomposable", kind: "decomposable" });
  } else {
    badges.push({ label: "non-decomposable", kind: "decomposable" });
  }
  if (state.back_to_start) {
    badges.push({ label: "back to start", kind: "marker" });
  }
  return badges;
}

export function emptyView(): ViewState {
  return {
    sessionId: null,
    diagram: { n: 0, edges: [] },
    badges: [],
    history: [],
    pending: false,
    backToStart: false,
    canonicalKey: "",
    error: null,
  };
}

export function applyServerState(view: ViewState, state: ServerState): ViewState {
  return {
    ...view,
    sessionId: state.session_id ?? view.sessionId,
    diagram: parseDiagramText(state.diagram),
    badges: badgesOf(state),
    history: state.history,
    pending: false,
    backToStart: state.back_to_start,
    canonicalKey: state.canonical_key,
    error: null,
  };
}

export function applyError(view: ViewState, message: string): ViewState {
  return { ...view, pending: false, error: message };
}

export function markPending(view: ViewState): ViewState {
  return { ...view, pending: true };
}

/** Replay a recorded log of server responses; the data layer of the final
 * screen state is a pure fold over the log. */
export function replay(log: ServerState[]): ViewState {
  let view = emptyView();
  for (const state of log) {
    view = applyServerState(view, state);
  }
  return view;
}
