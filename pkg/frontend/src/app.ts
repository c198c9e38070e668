// Browser wiring: holds the last state received from the service and
// re-renders everything from it. All game facts (turns, allocations,
// labels, statistics) are service-sourced.

import {
  createGame,
  getAnalysis,
  postMove,
  ServiceError,
} from "./api.js";
import { buildBoard, overlayColoring, statsPanel } from "./board.js";
import { renderStatePanels, renderTupleSvg } from "./paths.js";
import type { AnalysisJson, GameStateJson, Player } from "./types.js";

const DEMO_BOARD = [2, 6, 4, 1, 3, 11, 5, 7, 10, 12, 9, 8];

const apiBase = (): string => {
  const fromQuery = new URLSearchParams(location.search).get("api");
  return (fromQuery ?? "http://127.0.0.1:8000").replace(/\/$/, "");
};

interface AppState {
  base: string;
  session: string | null;
  state: GameStateJson | null;
  analysis: AnalysisJson | null;
  overlay: boolean;
}

const app: AppState = {
  base: apiBase(),
  session: null,
  state: null,
  analysis: null,
  overlay: false,
};

const el = <T extends HTMLElement>(id: string): T => {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
};

const toast = (message: string) => {
  const box = el<HTMLDivElement>("toast");
  box.textContent = message;
  box.classList.add("visible");
  setTimeout(() => box.classList.remove("visible"), 4000);
};

const refreshAnalysis = async () => {
  // re-query after every move rather than caching: the overlay must track
  // the current subgame exactly
  if (!app.overlay || !app.session || !app.state || app.state.game_over) {
    app.analysis = null;
    return;
  }
  app.analysis = await getAnalysis(app.base, app.session);
};

const setState = async (state: GameStateJson) => {
  app.state = state;
  await refreshAnalysis().catch((err) => toast(describe(err)));
  render();
};

const describe = (err: unknown): string =>
  err instanceof ServiceError ? `service: ${err.message}` : String(err);

const clickMorsel = async (position: number) => {
  if (!app.session) return;
  try {
    await setState(await postMove(app.base, app.session, position));
  } catch (err) {
    toast(describe(err));
  }
};

const engineStep = async () => {
  if (!app.session) return;
  try {
    await setState(await postMove(app.base, app.session, null));
  } catch (err) {
    toast(describe(err));
  }
};

const render = () => {
  const state = app.state;
  if (!state) return;
  const board = buildBoard(state, app.overlay ? app.analysis : null);
  el<HTMLDivElement>("turn").textContent = board.turnLabel;
  const plate = el<HTMLDivElement>("plate");
  plate.replaceChildren();
  for (const morsel of board.morsels) {
    const button = document.createElement("button");
    button.className = "morsel";
    if (morsel.eatenBy) button.classList.add(`eaten-${morsel.eatenBy}`);
    else if (morsel.predicted) button.classList.add(`predicted-${morsel.predicted}`);
    button.disabled = !morsel.clickable;
    button.innerHTML =
      `<span class="pos">${morsel.position}</span>` +
      `<span class="val">${morsel.value}</span>` +
      (morsel.eatenBy ? `<span class="bite">${morsel.eatenBy}#${morsel.eatenAtMove}</span>` : "");
    button.addEventListener("click", () => void clickMorsel(morsel.position));
    plate.appendChild(button);
  }
  el<HTMLButtonElement>("engine-step").disabled = !board.engineCanMove;

  const panels = state.game_over && state.final
    ? renderTupleSvg(state.final.tuple)
    : renderStatePanels(state.paths);
  el<HTMLDivElement>("panel-pa").innerHTML = `<h3>Alice's path</h3>${panels.pa}`;
  el<HTMLDivElement>("panel-pb").innerHTML = `<h3>Bob's path</h3>${panels.pb}`;

  const statsBox = el<HTMLDivElement>("stats");
  statsBox.replaceChildren();
  if (state.game_over && state.final) {
    const table = document.createElement("table");
    for (const row of statsPanel(state.final)) {
      const tr = document.createElement("tr");
      tr.innerHTML = `<td>${row.label}</td><td>${row.value}</td>`;
      table.appendChild(tr);
    }
    statsBox.appendChild(table);
    const marks = document.createElement("p");
    marks.textContent = `Overlay check: ${
      app.analysis ? overlayColoring(state, app.analysis) : state.final.optimal_marks
    }`;
    statsBox.appendChild(marks);
  }
};

const startGame = async (body: { n?: number; w?: number[]; seed?: number | null }) => {
  const roleInput = el<HTMLSelectElement>("role").value;
  const human_role = roleInput === "none" ? null : (roleInput as Player);
  try {
    const created = await createGame(app.base, { ...body, human_role });
    app.session = created.session;
    await setState(created.state);
  } catch (err) {
    toast(describe(err));
  }
};

export const main = () => {
  el<HTMLButtonElement>("start").addEventListener("click", () => {
    const n = Number(el<HTMLInputElement>("size").value);
    const seedText = el<HTMLInputElement>("seed").value;
    void startGame({ n, seed: seedText === "" ? null : Number(seedText) });
  });
  el<HTMLButtonElement>("start-demo").addEventListener("click", () => {
    void startGame({ w: DEMO_BOARD });
  });
  el<HTMLButtonElement>("engine-step").addEventListener("click", () => void engineStep());
  el<HTMLInputElement>("overlay").addEventListener("change", (event) => {
    app.overlay = (event.target as HTMLInputElement).checked;
    void refreshAnalysis()
      .then(render)
      .catch((err) => toast(describe(err)));
  });
};

main();
