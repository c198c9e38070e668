// Pure SVG builders for the path panels. Two situations arise:
//
//  * a finished tuple from the service carries full step strings plus the
//    ell/em label vectors (the final down step of the longer path carries
//    no label, so the vector can be one shorter than the down-step count);
//  * a live game only reveals down-step positions and labels as morsels
//    are eaten (state.paths), so the in-between steps are still unknown
//    and are drawn as empty slots.
//
// Everything here is a deterministic function of its JSON input.

import type { PathPanel, TupleJson } from "./types.js";

const UNIT = 20;
const PAD = 12;
const LABEL_STRIP = 18;

export const downStepsOf = (steps: string): number[] => {
  const downs: number[] = [];
  for (let i = 0; i < steps.length; i++) {
    if (steps[i] === "D") downs.push(i + 1);
  }
  return downs;
};

export const padLabels = (count: number, labels: (number | null)[]): (number | null)[] => {
  const padded = labels.slice(0, count);
  while (padded.length < count) padded.push(null);
  return padded;
};

const levelsOf = (steps: string): number[] => {
  const levels = [0];
  let level = 0;
  for (const s of steps) {
    level += s === "U" ? 1 : -1;
    levels.push(level);
  }
  return levels;
};

/** Render a fully known path with its down-step labels. */
export const renderPathSvg = (steps: string, labels: (number | null)[]): string => {
  const levels = levelsOf(steps);
  const peak = Math.max(...levels);
  const width = PAD * 2 + steps.length * UNIT;
  const baseline = PAD + peak * UNIT;
  const height = baseline + LABEL_STRIP + PAD;
  const points = levels
    .map((lv, i) => `${PAD + i * UNIT},${baseline - lv * UNIT}`)
    .join(" ");
  const parts = [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}" class="dyck-path">`,
    `<line x1="${PAD}" y1="${baseline}" x2="${width - PAD}" y2="${baseline}" class="axis" stroke="#bbb"/>`,
    `<polyline points="${points}" fill="none" stroke="#333" stroke-width="2"/>`,
  ];
  const padded = padLabels(downStepsOf(steps).length, labels);
  downStepsOf(steps).forEach((pos, i) => {
    const label = padded[i];
    if (label === null || label === undefined) return;
    const x = PAD + (pos - 0.5) * UNIT;
    parts.push(
      `<text x="${x}" y="${baseline + 14}" text-anchor="middle" font-size="11" class="step-label">${label}</text>`,
    );
  });
  parts.push("</svg>");
  return parts.join("");
};

/** Render a partially revealed path: known down steps carry their current
 * labels, everything else is an empty slot. */
export const renderPartialPanelSvg = (panel: PathPanel): string => {
  const width = PAD * 2 + panel.length * UNIT;
  const height = PAD * 2 + UNIT + LABEL_STRIP;
  const byPosition = new Map<number, number | null>();
  panel.down.forEach((pos, i) => byPosition.set(pos, panel.labels[i] ?? null));
  const parts = [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}" class="dyck-partial">`,
  ];
  for (let pos = 1; pos <= panel.length; pos++) {
    const x = PAD + (pos - 1) * UNIT;
    const known = byPosition.has(pos);
    parts.push(
      `<rect x="${x}" y="${PAD}" width="${UNIT}" height="${UNIT}" fill="${known ? "#444" : "none"}" stroke="#bbb"/>`,
    );
    if (known) {
      const label = byPosition.get(pos);
      const text = label === null || label === undefined ? "·" : String(label);
      parts.push(
        `<text x="${x + UNIT / 2}" y="${PAD + UNIT + 14}" text-anchor="middle" font-size="11" class="step-label">${text}</text>`,
      );
    }
  }
  parts.push("</svg>");
  return parts.join("");
};

export interface TuplePanels {
  pa: string;
  pb: string;
}

/** Panels for a finished tuple; the source object is used verbatim. */
export const renderTupleSvg = (t: TupleJson): TuplePanels => ({
  pa: renderPathSvg(t.pa, t.ell),
  pb: renderPathSvg(t.pb, t.em),
});

/** Panels for a live game from the state's revealed-path data. */
export const renderStatePanels = (paths: { pa: PathPanel; pb: PathPanel }): TuplePanels => ({
  pa: renderPartialPanelSvg(paths.pa),
  pb: renderPartialPanelSvg(paths.pb),
});
