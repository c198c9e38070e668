// JSON shapes of the crossout service. The UI is a thin renderer over
// these: it never derives allocations, labels, or statistics itself.

export type Player = "A" | "B";

export interface HistoryEntry {
  move: number;
  player: Player;
  position: number;
  value: number;
}

export interface PathPanel {
  length: number;
  down: number[];
  labels: (number | null)[];
}

export interface PathsView {
  parity: "even" | "odd";
  pa: PathPanel;
  pb: PathPanel;
}

export interface TupleJson {
  pa: string;
  pb: string;
  ell: number[];
  em: number[];
  parity: "even" | "odd";
}

export interface StatsJson {
  aa: number;
  ab: number;
  ba: number;
  bb: number;
  z: number | null;
  inv: number;
}

export interface FinalSummary {
  tuple: TupleJson;
  stats: StatsJson;
  optimal_marks: string;
  no_trade: boolean;
  allocation: Record<string, Player>;
}

export interface GameStateJson {
  n: number;
  w: number[];
  human_role: Player | null;
  turn: Player | null;
  game_over: boolean;
  remaining: number[];
  history: HistoryEntry[];
  paths: PathsView;
  final: FinalSummary | null;
}

export interface CreateResponse {
  session: string;
  state: GameStateJson;
}

export interface AnalysisEntry {
  position: number;
  eater: Player;
}

export interface AnalysisJson {
  analysis: AnalysisEntry[];
}
