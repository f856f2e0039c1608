"""Bit-exact snapshot serialization and the run manifest.

Snapshot format: one header line

    # t=<seconds> step=<n> plane=xz j=<row> nx=<rows> nz=<cols> field=Ez

followed by ``nx`` lines of ``nz`` comma-separated floats in their
shortest round-trip decimal form, x ascending by row, z ascending by
column.  Reading a file back reproduces the written values bit for bit.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .engine import FieldSnapshot
from .errors import SnapshotFormatError
from .walk import WalkDistribution


def _format_float(value: float) -> str:
    """Shortest decimal string that parses back to the same float."""
    text = repr(float(value))
    return text[:-2] if text.endswith(".0") else text


def _atomic_write(path: Path, text: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text)
    os.replace(tmp, path)


def write_snapshot(snapshot: FieldSnapshot, path: str | Path) -> None:
    """Write one snapshot; the write is atomic (temp file + rename)."""
    path = Path(path)
    values = snapshot.values
    rows, cols = values.shape
    header = (
        f"# t={snapshot.time:.16e} step={snapshot.step} plane={snapshot.plane} "
        f"j={snapshot.fixed_index} nx={rows} nz={cols} field=Ez"
    )
    lines = [header]
    for row in values:
        lines.append(",".join(_format_float(v) for v in row))
    try:
        _atomic_write(path, "\n".join(lines) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write snapshot to {path}: {exc}") from exc


def read_snapshot(path: str | Path) -> FieldSnapshot:
    """Parse a snapshot file, validating the header against the body."""
    path = Path(path)
    text = path.read_text()
    lines = text.splitlines()
    if not lines or not lines[0].startswith("# "):
        raise SnapshotFormatError(f"{path}: missing header line")
    fields = {}
    for token in lines[0][2:].split():
        if "=" not in token:
            raise SnapshotFormatError(f"{path}: bad header token {token!r}")
        key, _, value = token.partition("=")
        fields[key] = value
    try:
        time = float(fields["t"])
        step = int(fields["step"])
        plane = fields["plane"]
        j = int(fields["j"])
        rows = int(fields["nx"])
        cols = int(fields["nz"])
    except (KeyError, ValueError) as exc:
        raise SnapshotFormatError(f"{path}: incomplete header: {exc}") from exc
    body = lines[1:]
    if len(body) != rows:
        raise SnapshotFormatError(f"{path}: header says nx={rows} but body has {len(body)} rows")
    values = np.empty((rows, cols))
    for r, line in enumerate(body):
        parts = line.split(",")
        if len(parts) != cols:
            raise SnapshotFormatError(
                f"{path}: header says nz={cols} but row {r} has {len(parts)} values"
            )
        try:
            values[r] = [float(p) for p in parts]
        except ValueError as exc:
            raise SnapshotFormatError(f"{path}: bad float in row {r}: {exc}") from exc
    return FieldSnapshot(plane=plane, fixed_index=j, time=time, step=step, values=values)


# ---------------------------------------------------------------------------
# manifest
# ---------------------------------------------------------------------------

def _table_to_json(dist: WalkDistribution) -> dict:
    def order(site):
        return site if isinstance(site, tuple) else (0, site)

    def site_key(site):
        if isinstance(site, tuple):
            return f"L{site[0]}:{site[1]:+d}"
        return f"{site:+d}"

    return {site_key(s): str(dist.probs[s]) for s in sorted(dist.probs, key=order)}


@dataclass(frozen=True)
class RunManifest:
    """Config echo plus the snapshot records and walk tables of one run."""

    config: dict
    dt: float
    snapshots: list[dict]
    walk_tables: dict

    def to_json(self) -> str:
        data = {
            "config": self.config,
            "dt": self.dt,
            "snapshots": self.snapshots,
            "walk_tables": self.walk_tables,
        }
        return json.dumps(data, indent=2) + "\n"


def write_manifest(manifest: RunManifest, path: str | Path) -> None:
    _atomic_write(Path(path), manifest.to_json())


def read_manifest(path: str | Path) -> RunManifest:
    data = json.loads(Path(path).read_text())
    return RunManifest(
        config=data["config"],
        dt=data["dt"],
        snapshots=data["snapshots"],
        walk_tables=data["walk_tables"],
    )


def validate_manifest(manifest: RunManifest, directory: str | Path) -> None:
    """Check every listed snapshot exists and its header matches the record."""
    directory = Path(directory)
    for record in manifest.snapshots:
        path = directory / record["file"]
        if not path.exists():
            raise SnapshotFormatError(f"manifest lists missing file {path}")
        snapshot = read_snapshot(path)
        if snapshot.step != record["step"]:
            raise SnapshotFormatError(
                f"{path}: header step {snapshot.step} != manifest step {record['step']}"
            )


def manifest_tables(tables: dict[int, WalkDistribution]) -> dict:
    return {str(step): _table_to_json(dist) for step, dist in sorted(tables.items())}
