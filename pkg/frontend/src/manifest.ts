/** Run manifest: config echo plus the list of snapshot files. */

import { readFileSync } from "fs";
import path from "path";

export interface SnapshotRecord {
  file: string;
  step: number;
  time: number;
}

export interface Manifest {
  config: Record<string, unknown>;
  dt: number;
  snapshots: SnapshotRecord[];
  walk_tables: Record<string, Record<string, string>>;
}

export class ManifestError extends Error {}

export function parseManifest(text: string, name = "<manifest>"): Manifest {
  let data: unknown;
  try {
    data = JSON.parse(text);
  } catch (err) {
    throw new ManifestError(`${name}: not valid JSON: ${(err as Error).message}`);
  }
  const obj = data as Partial<Manifest>;
  if (typeof obj !== "object" || obj === null || !Array.isArray(obj.snapshots)) {
    throw new ManifestError(`${name}: missing snapshots list`);
  }
  for (const record of obj.snapshots) {
    if (typeof record.file !== "string" || typeof record.step !== "number") {
      throw new ManifestError(`${name}: malformed snapshot record ${JSON.stringify(record)}`);
    }
  }
  return {
    config: (obj.config ?? {}) as Record<string, unknown>,
    dt: typeof obj.dt === "number" ? obj.dt : NaN,
    snapshots: obj.snapshots,
    walk_tables: (obj.walk_tables ?? {}) as Record<string, Record<string, string>>,
  };
}

export function loadManifest(manifestPath: string): { manifest: Manifest; dir: string } {
  const text = readFileSync(manifestPath, "utf-8");
  const manifest = parseManifest(text, manifestPath);
  return { manifest, dir: path.dirname(manifestPath) };
}

/** Cell size in nm from the config echo, with the scenario default. */
export function cellNm(manifest: Manifest): number {
  const value = manifest.config["cell_nm"];
  return typeof value === "number" && value > 0 ? value : 10;
}
