import { mkdtempSync, readFileSync, writeFileSync } from "fs";
import { tmpdir } from "os";
import path from "path";

import { describe, expect, it } from "vitest";

import { renderManifestSeries, renderSingle } from "../src/cli.js";
import { valueToColor } from "../src/colormap.js";
import { renderSnapshotSvg } from "../src/render.js";
import { parseSnapshot } from "../src/snapshot.js";
import { makeSnapshotText } from "./util.js";

function rectFills(svg: string): { i: number; k: number; fill: string }[] {
  const out: { i: number; k: number; fill: string }[] = [];
  const re = /<rect data-i="(\d+)" data-k="(\d+)"[^>]*fill="(#[0-9a-f]{6})"/g;
  let m: RegExpExecArray | null;
  while ((m = re.exec(svg)) !== null) {
    out.push({ i: Number(m[1]), k: Number(m[2]), fill: m[3] });
  }
  return out;
}

function checkerboard(nx: number, nz: number, peak: number): number[][] {
  const values: number[][] = [];
  for (let i = 0; i < nx; i++) {
    const row: number[] = [];
    for (let k = 0; k < nz; k++) {
      row.push(((i + k) % 2 === 0 ? 1 : -1) * peak * ((i * nz + k + 1) / (nx * nz)));
    }
    values.push(row);
  }
  return values;
}

describe("snapshot rendering", () => {
  it("round-trips checkerboard extrema positions through the image", () => {
    const values = checkerboard(8, 6, 2.5);
    // the most positive and most negative cells are the last two in scan order
    const snap = parseSnapshot(makeSnapshotText(values));
    const svg = renderSnapshotSvg(snap, { cellNm: 10 });
    const rects = rectFills(svg);
    expect(rects.length).toBe(8 * 6);

    let maxCell = { i: -1, k: -1, v: -Infinity };
    let minCell = { i: -1, k: -1, v: Infinity };
    values.forEach((row, i) =>
      row.forEach((v, k) => {
        if (v > maxCell.v) maxCell = { i, k, v };
        if (v < minCell.v) minCell = { i, k, v };
      })
    );
    const scale = Math.max(Math.abs(maxCell.v), Math.abs(minCell.v));
    const reddest = rects.find((r) => r.fill === valueToColor(maxCell.v, scale));
    const bluest = rects.find((r) => r.fill === valueToColor(minCell.v, scale));
    expect(reddest).toBeDefined();
    expect(bluest).toBeDefined();
    expect({ i: reddest!.i, k: reddest!.k }).toEqual({ i: maxCell.i, k: maxCell.k });
    expect({ i: bluest!.i, k: bluest!.k }).toEqual({ i: minCell.i, k: minCell.k });
  });

  it("renders an all-zero snapshot as uniform white cells", () => {
    const snap = parseSnapshot(makeSnapshotText([[0, 0, 0], [0, 0, 0]]));
    const svg = renderSnapshotSvg(snap, { cellNm: 10 });
    for (const rect of rectFills(svg)) {
      expect(rect.fill).toBe("#ffffff");
    }
  });

  it("mirror-symmetric data renders mirror-symmetric cells", () => {
    const values = [
      [0.5, -1, 0.25],
      [2, 0, -2],
      [0.5, -1, 0.25],
    ];
    const snap = parseSnapshot(makeSnapshotText(values));
    const rects = rectFills(renderSnapshotSvg(snap, { cellNm: 10 }));
    const byCell = new Map(rects.map((r) => [`${r.i},${r.k}`, r.fill]));
    for (let k = 0; k < 3; k++) {
      expect(byCell.get(`0,${k}`)).toBe(byCell.get(`2,${k}`));
    }
  });

  it("is deterministic for fixed input", () => {
    const values = checkerboard(5, 7, 1.0);
    const snap = parseSnapshot(makeSnapshotText(values));
    const a = renderSnapshotSvg(snap, { cellNm: 10 });
    const b = renderSnapshotSvg(snap, { cellNm: 10 });
    expect(a).toBe(b);
  });
});

describe("series rendering via manifest", () => {
  function writeRun(dir: string) {
    const small = makeSnapshotText([[0.1, -0.2], [0.3, -0.1]], 20);
    const large = makeSnapshotText([[1.0, -4.0], [2.0, -0.5]], 40);
    writeFileSync(path.join(dir, "snapshot_000020.csv"), small);
    writeFileSync(path.join(dir, "snapshot_000040.csv"), large);
    const manifest = {
      config: { cell_nm: 10 },
      dt: 1.73e-17,
      snapshots: [
        { file: "snapshot_000020.csv", step: 20, time: 20 * 1.73e-17 },
        { file: "snapshot_000040.csv", step: 40, time: 40 * 1.73e-17 },
      ],
      walk_tables: {},
    };
    writeFileSync(path.join(dir, "manifest.json"), JSON.stringify(manifest, null, 2));
  }

  it("uses one shared colour scale across the series", () => {
    const dir = mkdtempSync(path.join(tmpdir(), "qwr-"));
    writeRun(dir);
    const out = path.join(dir, "imgs");
    const written = renderManifestSeries(path.join(dir, "manifest.json"), out);
    expect(written.length).toBe(2);
    const svgSmall = readFileSync(written[0], "utf-8");
    const svgLarge = readFileSync(written[1], "utf-8");
    // shared scale max is 4.0 (from the second snapshot); in the first
    // snapshot 0.3/4.0 is far from the palette end
    const smallRects = rectFills(svgSmall);
    const expected = valueToColor(0.3, 4.0);
    expect(smallRects.find((r) => r.i === 1 && r.k === 0)!.fill).toBe(expected);
    // the global extremum hits the palette end exactly
    const largeRects = rectFills(svgLarge);
    expect(largeRects.find((r) => r.i === 0 && r.k === 1)!.fill).toBe(valueToColor(-4.0, 4.0));
    // both colourbars carry the same scale label
    const label = svgLarge.match(/\+4\.000e\+0/);
    expect(label).not.toBeNull();
    expect(svgSmall.includes("+4.000e+0")).toBe(true);
  });

  it("writes identical bytes on repeat renders", () => {
    const dir = mkdtempSync(path.join(tmpdir(), "qwr-"));
    writeRun(dir);
    const out1 = renderManifestSeries(path.join(dir, "manifest.json"), path.join(dir, "a"));
    const out2 = renderManifestSeries(path.join(dir, "manifest.json"), path.join(dir, "b"));
    for (let i = 0; i < out1.length; i++) {
      expect(readFileSync(out1[i])).toEqual(readFileSync(out2[i]));
    }
  });

  it("reports missing files listed in the manifest", () => {
    const dir = mkdtempSync(path.join(tmpdir(), "qwr-"));
    writeRun(dir);
    const manifestPath = path.join(dir, "manifest.json");
    const manifest = JSON.parse(readFileSync(manifestPath, "utf-8"));
    manifest.snapshots.push({ file: "gone.csv", step: 60, time: 0 });
    writeFileSync(manifestPath, JSON.stringify(manifest));
    expect(() => renderManifestSeries(manifestPath, path.join(dir, "imgs"))).toThrow(/gone.csv/);
  });

  it("renders a single snapshot file directly", () => {
    const dir = mkdtempSync(path.join(tmpdir(), "qwr-"));
    writeRun(dir);
    const out = renderSingle(path.join(dir, "snapshot_000020.csv"), path.join(dir, "one"), 10);
    const svg = readFileSync(out, "utf-8");
    expect(svg.startsWith("<svg ")).toBe(true);
    expect(svg).toContain("x (nm)");
    expect(svg).toContain("z (nm)");
  });
});
