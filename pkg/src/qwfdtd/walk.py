"""Equal-probability walk tables and the timed emission schedule.

Two topologies:

* ``line``     - each occupied site splits its probability 1/2-1/2 to its
  two nearest neighbours.  Sites are integers.
* ``parallel`` - two lines, each site splits 1/3 to its left neighbour,
  1/3 to its right neighbour and 1/3 to the same-x site on the other
  line.  Sites are (line, x) with line in {1, 2}.  Each line's
  probabilities sum to one (one walker per line).

All table arithmetic is exact (fractions.Fraction); floats appear only
when a table is compiled into a schedule of sqrt(probability)-scaled
emission events.

Emission conventions
--------------------
Which table a schedule period emits is a modelling choice, exposed as an
explicit parameter:

* ``reached``  (default) - period k emits the sites holding probability
  after k walk steps (the sites that just absorbed a photon re-radiate).
* ``released`` - period k emits the sites that completed their downward
  transition at the end of period k-1, i.e. the table after k-1 steps.
* ``paired``   - each period covers both photon exchanges, so the walk
  advances two steps per period and period k emits the table after
  2*(k-1) steps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import InvalidParameterError, TopologyError

LINE = "line"
PARALLEL = "parallel"
CONVENTIONS = ("reached", "released", "paired")

Site = Union[int, tuple[int, int]]


@dataclass(frozen=True)
class WalkDistribution:
    """Exact site-probability table after ``step`` walk steps."""

    topology: str
    step: int
    probs: dict[Site, Fraction]

    def total(self) -> Fraction:
        return sum(self.probs.values(), Fraction(0))

    def line_total(self, line: int) -> Fraction:
        return sum((p for (l, _), p in self.probs.items() if l == line), Fraction(0))


def initial_line() -> WalkDistribution:
    """Walker at the origin with probability one."""
    return WalkDistribution(LINE, 0, {0: Fraction(1)})


def initial_parallel() -> WalkDistribution:
    """One walker at the origin of each line."""
    return WalkDistribution(PARALLEL, 0, {(1, 0): Fraction(1), (2, 0): Fraction(1)})


def step_line(dist: WalkDistribution) -> WalkDistribution:
    """Split every site's probability equally onto its two neighbours."""
    if dist.topology != LINE:
        raise TopologyError(f"step_line needs a line distribution, got {dist.topology!r}")
    out: dict[Site, Fraction] = {}
    for x, p in dist.probs.items():
        half = p / 2
        out[x - 1] = out.get(x - 1, Fraction(0)) + half
        out[x + 1] = out.get(x + 1, Fraction(0)) + half
    return WalkDistribution(LINE, dist.step + 1, out)


def step_parallel(dist: WalkDistribution) -> WalkDistribution:
    """Split every site's probability equally onto left, right and the
    same-x site of the other line."""
    if dist.topology != PARALLEL:
        raise TopologyError(f"step_parallel needs a parallel distribution, got {dist.topology!r}")
    out: dict[Site, Fraction] = {}
    for (line, x), p in dist.probs.items():
        third = p / 3
        other = 2 if line == 1 else 1
        for site in ((line, x - 1), (line, x + 1), (other, x)):
            out[site] = out.get(site, Fraction(0)) + third
    return WalkDistribution(PARALLEL, dist.step + 1, out)


def walk_table(topology: str, steps: int) -> WalkDistribution:
    """Table after ``steps`` equal-split steps from the initial state."""
    if steps < 0:
        raise InvalidParameterError(f"steps must be >= 0, got {steps}")
    if topology == LINE:
        dist = initial_line()
        for _ in range(steps):
            dist = step_line(dist)
    elif topology == PARALLEL:
        dist = initial_parallel()
        for _ in range(steps):
            dist = step_parallel(dist)
    else:
        raise TopologyError(f"unknown topology {topology!r}")
    return dist


def published_parallel_step3() -> WalkDistribution:
    """Published step-3 parallel table, kept verbatim for comparison.

    Its probabilities (1/9, 4/27, 2/27, 1/27 per line, mirrored in x) sum
    to 17/27 per line, not 1; normalization is deliberately not enforced
    on this value.
    """
    per_line = {
        0: Fraction(1, 9),
        1: Fraction(4, 27),
        -1: Fraction(4, 27),
        2: Fraction(2, 27),
        -2: Fraction(2, 27),
        3: Fraction(1, 27),
        -3: Fraction(1, 27),
    }
    probs: dict[Site, Fraction] = {}
    for line in (1, 2):
        for x, p in per_line.items():
            probs[(line, x)] = p
    return WalkDistribution(PARALLEL, 3, probs)


def normalization(dist: WalkDistribution) -> Fraction:
    """Exact sum of all probabilities in the table."""
    return dist.total()


@dataclass(frozen=True)
class EmissionEvent:
    """One probability-weighted pulse injection."""

    start_time: float
    site: Site
    probability: Fraction
    amplitude_scale: float


@dataclass(frozen=True)
class EmissionSchedule:
    """Time-ordered emission events; one batch per walk period."""

    topology: str
    events: tuple[EmissionEvent, ...]
    step_period: float
    convention: str


def _site_order_key(site: Site):
    return site if isinstance(site, tuple) else (0, site)


def emit_table_index(convention: str, period: int) -> int:
    """Walk-table index emitted during schedule period ``period`` (1-based)."""
    if convention == "reached":
        return period
    if convention == "released":
        return period - 1
    if convention == "paired":
        return 2 * (period - 1)
    raise InvalidParameterError(f"unknown emission convention {convention!r}")


def compile_schedule(
    topology: str,
    n_steps: int,
    t1: float,
    t2: float,
    convention: str = "reached",
) -> EmissionSchedule:
    """Compile ``n_steps`` walk periods into timed emission events.

    Period k starts at (k-1)*(t1+t2); every site of that period's table
    emits with amplitude_scale = sqrt(probability).
    """
    if n_steps < 1:
        raise InvalidParameterError(f"n_steps must be >= 1, got {n_steps}")
    if t1 <= 0.0 or t2 <= 0.0:
        raise InvalidParameterError(f"t1 and t2 must be > 0, got {(t1, t2)}")
    if convention not in CONVENTIONS:
        raise InvalidParameterError(f"unknown emission convention {convention!r}")

    period = t1 + t2
    tables: dict[int, WalkDistribution] = {}
    events: list[EmissionEvent] = []
    for k in range(1, n_steps + 1):
        index = emit_table_index(convention, k)
        if index not in tables:
            tables[index] = walk_table(topology, index)
        start = (k - 1) * period
        for site in sorted(tables[index].probs, key=_site_order_key):
            p = tables[index].probs[site]
            if p == 0:
                continue
            events.append(
                EmissionEvent(
                    start_time=start,
                    site=site,
                    probability=p,
                    amplitude_scale=math.sqrt(p.numerator / p.denominator),
                )
            )
    return EmissionSchedule(
        topology=topology, events=tuple(events), step_period=period, convention=convention
    )
