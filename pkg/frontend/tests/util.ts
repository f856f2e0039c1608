/** Builders for synthetic snapshot files in the producer's format. */

export function makeSnapshotText(values: number[][], step = 40, j = 15): string {
  const nx = values.length;
  const nz = values[0].length;
  const header = `# t=${(step * 1.7332530546730425e-17).toExponential(16)} step=${step} plane=xz j=${j} nx=${nx} nz=${nz} field=Ez`;
  const body = values.map((row) => row.join(","));
  return [header, ...body].join("\n") + "\n";
}
