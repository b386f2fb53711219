"""
Exact distributions of the lazy random walk on a ball.

At each step the walk multiplies on the right by s_g with probability p[g],
or stays put with probability p_id.  All arithmetic is on integers over a
common denominator: with step weights a_g = p[g] * D, the numerators after n
steps are weighted path counts over D**n.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .cayley import BOUNDARY, Ball
from .core import CoxeterSystem


def frac_str(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class StepDistribution:
    p_id: Fraction
    p: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "p_id", Fraction(self.p_id))
        object.__setattr__(self, "p", tuple(Fraction(x) for x in self.p))
        if self.p_id < 0 or any(x < 0 for x in self.p):
            raise ValueError("step probabilities must be non-negative")
        if self.p_id + sum(self.p) != 1:
            raise ValueError(f"step probabilities sum to {self.p_id + sum(self.p)}, not 1")

    @property
    def theorem2_ok(self) -> bool:
        """Every generator at most as likely as staying put."""
        return all(x <= self.p_id for x in self.p)

    @property
    def theorem2_strict(self) -> bool:
        return all(x < self.p_id for x in self.p)

    @property
    def uniform(self) -> bool:
        return all(x == self.p_id for x in self.p)

    @property
    def denominator(self) -> int:
        return math.lcm(self.p_id.denominator, *(x.denominator for x in self.p))

    def weights(self) -> tuple[int, tuple[int, ...]]:
        d = self.denominator
        return int(self.p_id * d), tuple(int(x * d) for x in self.p)

    def to_json(self, system: CoxeterSystem) -> dict:
        out = {"id": frac_str(self.p_id)}
        out.update({name: frac_str(x) for name, x in zip(system.names, self.p)})
        return out


def uniform_steps(system: CoxeterSystem) -> StepDistribution:
    q = Fraction(1, system.rank + 1)
    return StepDistribution(q, (q,) * system.rank)


def steps_from_mapping(system: CoxeterSystem, probs: Mapping[str, object]) -> StepDistribution:
    """Build from ``{"id": "2/5", "s1": "1/4", ...}``; values are rationals."""
    unknown = set(probs) - {"id", *system.names}
    missing = {"id", *system.names} - set(probs)
    if unknown or missing:
        raise ValueError(f"probability keys: unknown {sorted(unknown)}, missing {sorted(missing)}")
    return StepDistribution(Fraction(str(probs["id"])),
                            tuple(Fraction(str(probs[n])) for n in system.names))


def load_steps(system: CoxeterSystem, path) -> StepDistribution:
    with open(path) as fh:
        return steps_from_mapping(system, json.load(fh))


@dataclass(frozen=True)
class Distribution:
    """P^n over a ball, stored as integer numerators over ``denominator``."""
    ball: Ball = field(repr=False)
    step: int
    counts: tuple[int, ...]
    denominator: int

    def __getitem__(self, v: int) -> Fraction:
        return Fraction(self.counts[v], self.denominator)

    @property
    def mass(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.denominator) for c in self.counts)

    def total(self) -> Fraction:
        return Fraction(sum(self.counts), self.denominator)

    def most_likely(self) -> list[int]:
        top = max(self.counts)
        return [v for v, c in enumerate(self.counts) if c == top]

    def least_likely(self) -> list[int]:
        """Minimisers among states of positive probability."""
        low = min(c for c in self.counts if c > 0)
        return [v for v, c in enumerate(self.counts) if c == low]


def _check_reach(ball: Ball, n: int) -> None:
    if n < 0:
        raise ValueError("step count must be non-negative")
    if not ball.covers_steps(n):
        raise ValueError(f"ball of radius {ball.radius} is incomplete; "
                         f"{n} steps could leave it")


def trajectory(ball: Ball, steps: StepDistribution, n: int) -> list[Distribution]:
    """Distributions after 0, 1, ..., n steps."""
    _check_reach(ball, n)
    a_id, a = steps.weights()
    d = steps.denominator
    adj = ball.adjacency
    counts = [0] * len(ball)
    counts[0] = 1
    out = [Distribution(ball, 0, tuple(counts), 1)]
    for k in range(1, n + 1):
        new = [a_id * c for c in counts]
        for x, row in enumerate(adj):
            acc = 0
            for g, y in enumerate(row):
                if y != BOUNDARY and a[g]:
                    acc += a[g] * counts[y]
            new[x] += acc
        counts = new
        out.append(Distribution(ball, k, tuple(counts), d**k))
    return out


def evolve(ball: Ball, steps: StepDistribution, n: int) -> Distribution:
    return trajectory(ball, steps, n)[-1]


def path_counts(ball: Ball, n: int) -> list[int]:
    """Number of length-n walks over S and the identity ending at each vertex."""
    _check_reach(ball, n)
    counts = [0] * len(ball)
    counts[0] = 1
    for _ in range(n):
        counts = [c + sum(counts[y] for y in row if y != BOUNDARY)
                  for c, row in zip(counts, ball.adjacency)]
    return counts


def distribution_csv(dist: Distribution) -> str:
    ball = dist.ball
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["vertex_index", "length", "word", "mass"])
    for i, (w, q) in enumerate(zip(ball.vertices, dist.mass)):
        out.writerow([i, w.length, ball.system.format_word(w), frac_str(q)])
    return buf.getvalue()
