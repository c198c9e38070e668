import type { AnalysisJson, CreateResponse, GameStateJson, TupleJson } from "./types.js";

export class ServiceError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

const request = async <T>(base: string, path: string, init?: RequestInit): Promise<T> => {
  const response = await fetch(base + path, {
    headers: { "Content-Type": "application/json" },
    ...init,
  });
  const body = await response.json().catch(() => ({}));
  if (!response.ok) {
    const detail = (body as { error?: string }).error ?? response.statusText;
    throw new ServiceError(response.status, detail);
  }
  return body as T;
};

export interface NewGameRequest {
  n?: number;
  w?: number[];
  human_role?: "A" | "B" | null;
  seed?: number | null;
}

export const createGame = (base: string, body: NewGameRequest) =>
  request<CreateResponse>(base, "/games", { method: "POST", body: JSON.stringify(body) });

export const getState = (base: string, session: string) =>
  request<GameStateJson>(base, `/games/${session}`);

export const postMove = (base: string, session: string, position: number | null, auto = true) =>
  request<GameStateJson>(base, `/games/${session}/moves`, {
    method: "POST",
    body: JSON.stringify(position === null ? { auto } : { position, auto }),
  });

export const getAnalysis = (base: string, session: string) =>
  request<AnalysisJson>(base, `/games/${session}/analysis`);

export const encodePermutation = (base: string, w: number[]) =>
  request<TupleJson>(base, "/encode", { method: "POST", body: JSON.stringify({ w }) });
