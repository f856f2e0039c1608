/**
 * Parser for field snapshot files.
 *
 * Format: one header line
 *   # t=<seconds> step=<n> plane=xz j=<row> nx=<rows> nz=<cols> field=Ez
 * followed by nx lines of nz comma-separated floats (x ascending by row,
 * z ascending by column).
 */

export interface Snapshot {
  time: number;
  step: number;
  plane: string;
  j: number;
  nx: number;
  nz: number;
  field: string;
  /** values[i][k] = field at row i (x), column k (z) */
  values: number[][];
}

export class SnapshotFormatError extends Error {}

export function parseSnapshot(text: string, name = "<snapshot>"): Snapshot {
  const lines = text.split(/\r?\n/).filter((line, idx, all) => !(line === "" && idx === all.length - 1));
  if (lines.length === 0 || !lines[0].startsWith("# ")) {
    throw new SnapshotFormatError(`${name}: missing header line`);
  }
  const fields = new Map<string, string>();
  for (const token of lines[0].slice(2).trim().split(/\s+/)) {
    const eq = token.indexOf("=");
    if (eq < 0) {
      throw new SnapshotFormatError(`${name}: bad header token '${token}'`);
    }
    fields.set(token.slice(0, eq), token.slice(eq + 1));
  }
  for (const key of ["t", "step", "plane", "j", "nx", "nz", "field"]) {
    if (!fields.has(key)) {
      throw new SnapshotFormatError(`${name}: header missing '${key}'`);
    }
  }
  const nx = Number(fields.get("nx"));
  const nz = Number(fields.get("nz"));
  if (!Number.isInteger(nx) || !Number.isInteger(nz) || nx < 1 || nz < 1) {
    throw new SnapshotFormatError(`${name}: bad extents nx=${fields.get("nx")} nz=${fields.get("nz")}`);
  }
  const body = lines.slice(1);
  if (body.length !== nx) {
    throw new SnapshotFormatError(`${name}: header says nx=${nx} but body has ${body.length} rows`);
  }
  const values: number[][] = [];
  for (let i = 0; i < nx; i++) {
    const parts = body[i].split(",");
    if (parts.length !== nz) {
      throw new SnapshotFormatError(`${name}: header says nz=${nz} but row ${i} has ${parts.length} values`);
    }
    const row = parts.map((p) => {
      const v = Number(p);
      if (p.trim() === "" || Number.isNaN(v)) {
        throw new SnapshotFormatError(`${name}: bad float '${p}' in row ${i}`);
      }
      return v;
    });
    values.push(row);
  }
  return {
    time: Number(fields.get("t")),
    step: Number(fields.get("step")),
    plane: fields.get("plane")!,
    j: Number(fields.get("j")),
    nx,
    nz,
    field: fields.get("field")!,
    values,
  };
}

/** Largest |value| in the snapshot. */
export function absMax(snapshot: Snapshot): number {
  let m = 0;
  for (const row of snapshot.values) {
    for (const v of row) {
      const a = Math.abs(v);
      if (a > m) m = a;
    }
  }
  return m;
}
