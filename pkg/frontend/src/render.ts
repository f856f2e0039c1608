/**
 * SVG heatmap rendering for field snapshots.
 *
 * The output is a deterministic string for fixed input: one rect per
 * grid sample (carrying data-i/data-k indices), axes in nm about the
 * domain centre, and a colourbar.  The colour scale is symmetric about
 * zero; a series shares one scale (the largest |value| across all its
 * snapshots).
 */

import { colorbarStops, valueToColor } from "./colormap.js";
import { Snapshot, absMax } from "./snapshot.js";

export interface RenderOptions {
  /** cell size in nm for axis labels */
  cellNm: number;
  /** symmetric colour-scale maximum; defaults to the snapshot's |max| */
  scaleMax?: number;
  /** pixels per grid cell */
  cellPx?: number;
}

const MARGIN = { left: 70, right: 110, top: 40, bottom: 55 };

function fmt(value: number, digits = 1): string {
  const rounded = value.toFixed(digits);
  return rounded === "-0.0" ? "0.0" : rounded;
}

function fmtScale(value: number): string {
  return value === 0 ? "0" : value.toExponential(3);
}

/** Tick positions in nm: a round step giving 4-8 ticks over the range. */
export function tickStep(rangeNm: number): number {
  const target = rangeNm / 5;
  const power = Math.pow(10, Math.floor(Math.log10(target)));
  for (const mult of [1, 2, 5, 10]) {
    if (mult * power >= target) return mult * power;
  }
  return 10 * power;
}

export function renderSnapshotSvg(snapshot: Snapshot, options: RenderOptions): string {
  const { cellNm } = options;
  const cellPx = options.cellPx ?? 6;
  const scaleMax = options.scaleMax ?? absMax(snapshot);
  const { nx, nz } = snapshot;
  const plotW = nx * cellPx;
  const plotH = nz * cellPx;
  const width = MARGIN.left + plotW + MARGIN.right;
  const height = MARGIN.top + plotH + MARGIN.bottom;
  const xNm = (i: number) => (i - (nx - 1) / 2) * cellNm;
  const zNm = (k: number) => (k - (nz - 1) / 2) * cellNm;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
      `viewBox="0 0 ${width} ${height}" font-family="sans-serif" font-size="11">`
  );
  parts.push(`<rect width="${width}" height="${height}" fill="white"/>`);
  const title =
    `${snapshot.field} (V/m)  step ${snapshot.step}  ` +
    `t = ${(snapshot.time * 1e15).toFixed(3)} fs  plane ${snapshot.plane} j=${snapshot.j}`;
  parts.push(`<text x="${MARGIN.left}" y="24" font-size="13">${title}</text>`);

  // heatmap cells: x to the right, z upward
  for (let i = 0; i < nx; i++) {
    for (let k = 0; k < nz; k++) {
      const color = valueToColor(snapshot.values[i][k], scaleMax);
      const x = MARGIN.left + i * cellPx;
      const y = MARGIN.top + (nz - 1 - k) * cellPx;
      parts.push(
        `<rect data-i="${i}" data-k="${k}" x="${x}" y="${y}" ` +
          `width="${cellPx}" height="${cellPx}" fill="${color}"/>`
      );
    }
  }
  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${plotW}" height="${plotH}" ` +
      `fill="none" stroke="#444" stroke-width="1"/>`
  );

  // x axis ticks (nm about the centre)
  const xStep = tickStep((nx - 1) * cellNm);
  const axisY = MARGIN.top + plotH;
  for (let t = Math.ceil(xNm(0) / xStep) * xStep; t <= xNm(nx - 1); t += xStep) {
    const i = t / cellNm + (nx - 1) / 2;
    const px = MARGIN.left + (i + 0.5) * cellPx;
    parts.push(`<line x1="${px}" y1="${axisY}" x2="${px}" y2="${axisY + 5}" stroke="#444"/>`);
    parts.push(
      `<text x="${px}" y="${axisY + 18}" text-anchor="middle">${fmt(t, 0)}</text>`
    );
  }
  parts.push(
    `<text x="${MARGIN.left + plotW / 2}" y="${axisY + 38}" text-anchor="middle">x (nm)</text>`
  );

  // z axis ticks
  const zStep = tickStep((nz - 1) * cellNm);
  for (let t = Math.ceil(zNm(0) / zStep) * zStep; t <= zNm(nz - 1); t += zStep) {
    const k = t / cellNm + (nz - 1) / 2;
    const py = MARGIN.top + (nz - 1 - k + 0.5) * cellPx;
    parts.push(
      `<line x1="${MARGIN.left - 5}" y1="${py}" x2="${MARGIN.left}" y2="${py}" stroke="#444"/>`
    );
    parts.push(
      `<text x="${MARGIN.left - 8}" y="${py + 4}" text-anchor="end">${fmt(t, 0)}</text>`
    );
  }
  parts.push(
    `<text x="16" y="${MARGIN.top + plotH / 2}" text-anchor="middle" ` +
      `transform="rotate(-90 16 ${MARGIN.top + plotH / 2})">z (nm)</text>`
  );

  // colourbar with the shared symmetric scale
  const barX = MARGIN.left + plotW + 25;
  const barW = 16;
  parts.push(`<defs><linearGradient id="scale" x1="0" y1="1" x2="0" y2="0">`);
  for (const stop of colorbarStops(16)) {
    parts.push(`<stop offset="${(stop.offset * 100).toFixed(2)}%" stop-color="${stop.color}"/>`);
  }
  parts.push(`</linearGradient></defs>`);
  parts.push(
    `<rect x="${barX}" y="${MARGIN.top}" width="${barW}" height="${plotH}" ` +
      `fill="url(#scale)" stroke="#444" stroke-width="1"/>`
  );
  parts.push(
    `<text x="${barX + barW + 4}" y="${MARGIN.top + 10}">+${fmtScale(scaleMax)}</text>`
  );
  parts.push(
    `<text x="${barX + barW + 4}" y="${MARGIN.top + plotH / 2 + 4}">0</text>`
  );
  parts.push(
    `<text x="${barX + barW + 4}" y="${MARGIN.top + plotH}">-${fmtScale(scaleMax)}</text>`
  );
  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
