/** Wiring: one in-flight request per session, controls disabled while
 * pending, all verdicts straight from the server. */

import { ApiError, MutafoldClient, ServerState } from "./api.js";
import { renderBadges, renderDiagram, renderError, renderHistory } from "./render.js";
import {
  ViewState,
  applyError,
  applyServerState,
  emptyView,
  markPending,
} from "./state.js";

const EXAMPLE = "diagram 3\n1 2 2\n2 3 2\n3 1 4\n";

function start(): void {
  const client = new MutafoldClient("");
  let view: ViewState = emptyView();

  const svg = document.getElementById("diagram") as unknown as SVGSVGElement;
  const badges = document.getElementById("badges") as HTMLElement;
  const historyBox = document.getElementById("history") as HTMLElement;
  const errorBox = document.getElementById("error") as HTMLElement;
  const textBox = document.getElementById("input") as HTMLTextAreaElement;
  const loadButton = document.getElementById("load") as HTMLButtonElement;
  textBox.value = EXAMPLE;

  function draw(): void {
    renderDiagram(svg, view, (v) => act(() => client.mutate(view.sessionId!, v)));
    renderBadges(badges, view);
    renderHistory(historyBox, view, () => act(() => client.undo(view.sessionId!)));
    renderError(errorBox, view);
    loadButton.disabled = view.pending;
  }

  function act(call: () => Promise<ServerState>): void {
    if (view.pending) return;
    view = markPending(view);
    draw();
    call()
      .then((state) => {
        view = applyServerState(view, state);
        draw();
      })
      .catch((err) => {
        const msg = err instanceof ApiError ? err.message : String(err);
        view = applyError(view, msg);
        draw();
      });
  }

  loadButton.addEventListener("click", () => {
    act(() => client.createSession(textBox.value));
  });

  draw();
}

document.addEventListener("DOMContentLoaded", start);
