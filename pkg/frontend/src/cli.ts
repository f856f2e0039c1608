#!/usr/bin/env node
/**
 * qwfdtd-render: turn snapshot CSVs and run manifests into SVG heatmaps.
 *
 * Usage:
 *   qwfdtd-render --manifest out/manifest.json --out imgs/
 *   qwfdtd-render --snapshot out/snapshot_000100.csv --out imgs/ [--cell-nm 10]
 *
 * A manifest render shares one colour scale across every snapshot in the
 * series; missing files are reported together before exiting.
 */

import { mkdirSync, readFileSync, writeFileSync, existsSync } from "fs";
import path from "path";

import { cellNm as manifestCellNm, loadManifest, ManifestError } from "./manifest.js";
import { renderSnapshotSvg } from "./render.js";
import { absMax, parseSnapshot, Snapshot, SnapshotFormatError } from "./snapshot.js";

interface Args {
  manifest?: string;
  snapshot?: string;
  out: string;
  cellNm?: number;
}

function parseArgs(argv: string[]): Args {
  const args: Args = { out: "imgs" };
  for (let i = 0; i < argv.length; i++) {
    const flag = argv[i];
    const next = () => {
      i += 1;
      if (i >= argv.length) throw new Error(`missing value for ${flag}`);
      return argv[i];
    };
    switch (flag) {
      case "--manifest":
        args.manifest = next();
        break;
      case "--snapshot":
        args.snapshot = next();
        break;
      case "--out":
        args.out = next();
        break;
      case "--cell-nm":
        args.cellNm = Number(next());
        break;
      case "--help":
      case "-h":
        console.log(
          "usage: qwfdtd-render (--manifest FILE | --snapshot FILE) [--out DIR] [--cell-nm NM]"
        );
        process.exit(0);
        break;
      default:
        throw new Error(`unknown argument ${flag}`);
    }
  }
  if (!args.manifest && !args.snapshot) {
    throw new Error("one of --manifest or --snapshot is required");
  }
  return args;
}

function svgName(snapshotFile: string): string {
  return path.basename(snapshotFile).replace(/\.csv$/, "") + ".svg";
}

export function renderSingle(snapshotPath: string, outDir: string, cell: number): string {
  const snapshot = parseSnapshot(readFileSync(snapshotPath, "utf-8"), snapshotPath);
  const svg = renderSnapshotSvg(snapshot, { cellNm: cell });
  mkdirSync(outDir, { recursive: true });
  const outPath = path.join(outDir, svgName(snapshotPath));
  writeFileSync(outPath, svg);
  return outPath;
}

export function renderManifestSeries(manifestPath: string, outDir: string, cellOverride?: number): string[] {
  const { manifest, dir } = loadManifest(manifestPath);
  const missing = manifest.snapshots
    .map((r) => path.join(dir, r.file))
    .filter((p) => !existsSync(p));
  if (missing.length > 0) {
    throw new ManifestError(`manifest lists missing files:\n  ${missing.join("\n  ")}`);
  }
  const cell = cellOverride ?? manifestCellNm(manifest);
  const snapshots: { record: string; snapshot: Snapshot }[] = manifest.snapshots.map((r) => ({
    record: r.file,
    snapshot: parseSnapshot(readFileSync(path.join(dir, r.file), "utf-8"), r.file),
  }));
  // one colour scale across the whole series
  const scaleMax = snapshots.reduce((m, s) => Math.max(m, absMax(s.snapshot)), 0);
  mkdirSync(outDir, { recursive: true });
  const written: string[] = [];
  for (const { record, snapshot } of snapshots) {
    const svg = renderSnapshotSvg(snapshot, { cellNm: cell, scaleMax });
    const outPath = path.join(outDir, svgName(record));
    writeFileSync(outPath, svg);
    written.push(outPath);
  }
  return written;
}

export function main(argv: string[]): number {
  let args: Args;
  try {
    args = parseArgs(argv);
  } catch (err) {
    console.error(`argument error: ${(err as Error).message}`);
    return 2;
  }
  try {
    if (args.snapshot) {
      const out = renderSingle(args.snapshot, args.out, args.cellNm ?? 10);
      console.log(`wrote ${out}`);
    } else {
      const written = renderManifestSeries(args.manifest!, args.out, args.cellNm);
      console.log(`wrote ${written.length} images to ${args.out}`);
    }
    return 0;
  } catch (err) {
    if (err instanceof SnapshotFormatError || err instanceof ManifestError) {
      console.error(`format error: ${err.message}`);
      return 1;
    }
    console.error(`error: ${(err as Error).message}`);
    return 1;
  }
}

const entry = process.argv[1] ? path.resolve(process.argv[1]) : "";
if (entry && import.meta.url === `file://${entry}`) {
  process.exit(main(process.argv.slice(2)));
}
