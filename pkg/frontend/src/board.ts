// Pure view-model builders: state JSON (+ optional analysis JSON) in,
// renderable data out. No game rules live here; the predicted eaters come
// from the service's analysis response and the eaten-by facts from the
// move history.

import type { AnalysisJson, FinalSummary, GameStateJson, Player } from "./types.js";

export interface MorselView {
  position: number;
  value: number;
  eatenBy: Player | null;
  eatenAtMove: number | null;
  predicted: Player | null;
  clickable: boolean;
}

export interface BoardView {
  morsels: MorselView[];
  turnLabel: string;
  humanCanMove: boolean;
  engineCanMove: boolean;
}

export const buildBoard = (
  state: GameStateJson,
  analysis: AnalysisJson | null,
): BoardView => {
  const eaten = new Map<number, { player: Player; move: number }>();
  for (const entry of state.history) {
    eaten.set(entry.position, { player: entry.player, move: entry.move });
  }
  const predicted = new Map<number, Player>();
  if (analysis) {
    for (const entry of analysis.analysis) predicted.set(entry.position, entry.eater);
  }
  const humansTurn =
    !state.game_over && (state.human_role === null || state.turn === state.human_role);
  const morsels: MorselView[] = [];
  for (let position = 1; position <= state.n; position++) {
    const bite = eaten.get(position) ?? null;
    morsels.push({
      position,
      value: state.w[position - 1]!,
      eatenBy: bite?.player ?? null,
      eatenAtMove: bite?.move ?? null,
      predicted: predicted.get(position) ?? null,
      clickable: humansTurn && bite === null,
    });
  }
  return {
    morsels,
    turnLabel: state.game_over
      ? "Game over"
      : state.turn === "A"
        ? "Alice to move"
        : "Bob to move",
    humanCanMove: humansTurn,
    engineCanMove:
      !state.game_over && (state.human_role === null || state.turn !== state.human_role),
  };
};

/** One letter per position: who ate it, or who the service predicts will.
 * On a fresh board this is exactly the analysis row. */
export const overlayColoring = (
  state: GameStateJson,
  analysis: AnalysisJson,
): string => {
  const letters: string[] = [];
  const board = buildBoard(state, analysis);
  for (const morsel of board.morsels) {
    letters.push(morsel.eatenBy ?? morsel.predicted ?? "?");
  }
  return letters.join("");
};

export interface StatsRow {
  label: string;
  value: string;
}

export const statsPanel = (final: FinalSummary): StatsRow[] => {
  const rows: StatsRow[] = [
    { label: "AA inversions", value: String(final.stats.aa) },
    { label: "AB inversions", value: String(final.stats.ab) },
    { label: "BA inversions", value: String(final.stats.ba) },
    { label: "BB inversions", value: String(final.stats.bb) },
    { label: "z", value: final.stats.z === null ? "n/a (odd board)" : String(final.stats.z) },
    { label: "inversions", value: String(final.stats.inv) },
    { label: "trade-free", value: final.no_trade ? "yes" : "no" },
    { label: "optimal marks", value: final.optimal_marks },
  ];
  return rows;
};
