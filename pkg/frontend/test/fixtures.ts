import { readFileSync } from "node:fs";

import type { AnalysisJson, CreateResponse, GameStateJson, TupleJson } from "../src/types.js";

export const fixtureBytes = (name: string): string =>
  readFileSync(new URL(`../fixtures/${name}`, import.meta.url), "utf-8");

export const demoInitial = (): CreateResponse =>
  JSON.parse(fixtureBytes("demo_initial.json"));

export const demoAnalysis = (): AnalysisJson =>
  JSON.parse(fixtureBytes("demo_analysis.json"));

export const demoMidgame = (): GameStateJson =>
  JSON.parse(fixtureBytes("demo_midgame.json"));

export const demoFinal = (): GameStateJson =>
  JSON.parse(fixtureBytes("demo_final.json"));

export const demoEncode = (): TupleJson =>
  JSON.parse(fixtureBytes("demo_encode.json"));
