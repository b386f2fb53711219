"""
Likelihood-order checks.

``check_order`` compares exact probabilities across every covering pair of
the weak order.  ``fold_path`` and ``check_bijection`` run the path-folding
map directly: a walk ending at ws is reflected through the wall after the
last moment it used a wall edge (crossing it, or idling on one of its ends),
which produces a walk ending at w.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .cayley import BOUNDARY, Ball
from .core import Element, ResourceLimitError
from .order import covering_edges
from .walk import StepDistribution, frac_str, trajectory
from .walls import Check, WallData

log = logging.getLogger(__name__)

ID = None  # the idle step


class OffWall(ValueError):
    """The path never crosses or idles on the wall, so it cannot be folded."""


@dataclass(frozen=True)
class WalkPath:
    vertices: tuple[int, ...]  # ball indices a_0 .. a_n, a_0 the identity
    steps: tuple[int | None, ...]  # generator index or ID

    def __len__(self):
        return len(self.steps)

    @property
    def end(self) -> int:
        return self.vertices[-1]


def is_path(ball: Ball, path: WalkPath) -> bool:
    if path.vertices[0] != 0 or len(path.vertices) != len(path.steps) + 1:
        return False
    for j, g in enumerate(path.steps):
        a, b = path.vertices[j], path.vertices[j + 1]
        if (a != b) if g is ID else (ball.adjacency[a][g] != b):
            return False
    return True


# --- likelihood order -----------------------------------------------------

@dataclass
class PairVerdict:
    u: int
    v: int
    g: int
    min_margin: Fraction
    first_violation: int | None
    equal_count: int


@dataclass
class OrderReport:
    n_max: int
    pairs: list[PairVerdict]
    steps: StepDistribution = field(repr=False)
    ball: Ball = field(repr=False)

    @property
    def passed(self) -> bool:
        return all(p.first_violation is None for p in self.pairs)

    @property
    def violations(self) -> list[PairVerdict]:
        return [p for p in self.pairs if p.first_violation is not None]

    @property
    def equality_count(self) -> int:
        return sum(p.equal_count for p in self.pairs)

    def to_json(self) -> dict:
        system = self.ball.system
        fmt = system.format_word

        def pair(p):
            return {"u": p.u, "v": p.v, "u_word": fmt(self.ball.vertices[p.u]),
                    "v_word": fmt(self.ball.vertices[p.v]), "generator": system.names[p.g],
                    "min_margin": frac_str(p.min_margin), "first_violation": p.first_violation,
                    "equal_count": p.equal_count}

        return {
            "passed": self.passed,
            "n_max": self.n_max,
            "vertices": len(self.ball),
            "complete": self.ball.complete,
            "steps": self.steps.to_json(system),
            "theorem2_ok": self.steps.theorem2_ok,
            "theorem2_strict": self.steps.theorem2_strict,
            "pair_count": len(self.pairs),
            "equality_count": self.equality_count,
            "violations": [pair(p) for p in self.violations],
            "pairs": [pair(p) for p in self.pairs],
        }


def check_order(ball: Ball, steps: StepDistribution, n_max: int) -> OrderReport:
    """Check P^n(u) >= P^n(u s) for every cover u < u s and every n <= n_max.

    The inequality tested is the non-strict one; equalities are counted.
    """
    dists = trajectory(ball, steps, n_max)
    verdicts = []
    for u, v, g in covering_edges(ball).covers:
        margin, first, equal = None, None, 0
        for dist in dists:
            diff = dist.counts[u] - dist.counts[v]
            q = Fraction(diff, dist.denominator)
            margin = q if margin is None else min(margin, q)
            if diff == 0:
                equal += 1
            elif diff < 0 and first is None:
                first = dist.step
        verdicts.append(PairVerdict(u, v, g, margin, first, equal))
    report = OrderReport(n_max, verdicts, steps, ball)
    log.info("check_order: %d pairs, n_max=%d, passed=%s", len(verdicts), n_max, report.passed)
    return report


# --- paths and the folding map --------------------------------------------

def enumerate_paths(ball: Ball, n: int, target: Element | int,
                    max_steps: int = 10, max_paths: int | None = None) -> list[WalkPath]:
    """All step sequences of length n (over S and ID) whose walk ends at target.

    Results come in lexicographic order of the step sequence, ID first.
    """
    if n > max_steps:
        raise ResourceLimitError(f"{n} steps exceeds the path cap of {max_steps}")
    k = ball.system.rank
    if max_paths is not None and (k + 1) ** n > max_paths:
        raise ResourceLimitError(f"{(k + 1) ** n} step sequences exceeds max_paths={max_paths}")
    if not ball.covers_steps(n):
        raise ValueError(f"ball of radius {ball.radius} cannot hold {n}-step walks")
    t = target if isinstance(target, int) else ball.index_of[target]
    t_len = ball.vertices[t].length
    adj = ball.adjacency
    lengths = ball.lengths
    out = []
    verts, steps = [0], []

    def walk(x, left):
        if abs(lengths[x] - t_len) > left:
            return
        if left == 0:
            if x == t:
                out.append(WalkPath(tuple(verts), tuple(steps)))
            return
        for g in (ID, *range(k)):
            y = x if g is ID else adj[x][g]
            verts.append(y)
            steps.append(g)
            walk(y, left - 1)
            verts.pop()
            steps.pop()

    walk(0, n)
    return out


def fold_time(wall: WallData, path: WalkPath) -> int:
    """Last step index i (1-based) that crosses a grey edge or idles on one."""
    grey = wall.grey_at()
    last = None
    for j in range(1, len(path.vertices)):
        a, b = path.vertices[j - 1], path.vertices[j]
        if a in grey and (a == b or grey[a][0] == b):
            last = j
    if last is None:
        raise OffWall("path never touches the wall")
    return last


def fold_path(wall: WallData, path: WalkPath) -> WalkPath:
    """Reflect the path through the wall from its last wall contact onward.

    A crossing at the fold time becomes an idle step and an idle step on a
    wall vertex becomes a crossing; later steps keep their labels because
    left multiplication preserves edge labels.
    """
    i = fold_time(wall, path)
    grey = wall.grey_at()
    verts = path.vertices
    a_prev, a_i = verts[i - 1], verts[i]
    # after the last wall contact the walk stays on one side
    if wall.colour[a_i] is not wall.colour[path.end]:
        raise RuntimeError(f"fold vertex {a_i} and endpoint {path.end} differ in colour")
    if a_i not in grey or a_prev not in (a_i, grey[a_i][0]):
        raise RuntimeError("fold vertex is not on the wall edge it was reached by")
    tail = tuple(wall.reflect[x] for x in verts[i:])
    if BOUNDARY in tail:
        raise ValueError("reflected path leaves the ball")
    new_step = ID if path.steps[i - 1] is not ID else grey[a_i][1]
    steps = path.steps[:i - 1] + (new_step,) + path.steps[i:]
    return WalkPath(verts[:i] + tail, steps)


@dataclass
class BijectionReport:
    n: int
    checks: list[Check]
    to_w: int
    to_ws: int

    @property
    def surplus(self) -> int:
        return self.to_w - self.to_ws

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        return next(c for c in self.checks if c.name == name)

    def to_json(self) -> dict:
        return {"passed": self.passed, "n": self.n, "paths_to_w": self.to_w,
                "paths_to_ws": self.to_ws, "surplus": self.surplus,
                "checks": {c.name: c.to_json() for c in self.checks}}


def _show(ball: Ball, path: WalkPath) -> list[str]:
    return ["id" if g is ID else ball.system.names[g] for g in path.steps]


def check_bijection(ball: Ball, wall: WallData, n: int, **caps) -> BijectionReport:
    """Run the folding map on every walk to ws and check it injects into walks to w."""
    w_idx = ball.index_of[wall.w]
    ws_idx = ball.index_of[wall.ws]
    to_ws = enumerate_paths(ball, n, ws_idx, **caps)
    to_w = enumerate_paths(ball, n, w_idx, **caps)
    total, image, invol, inject, count = (Check("total"), Check("image"), Check("involution"),
                                          Check("injective"), Check("counts"))
    images = {}
    for alpha in to_ws:
        total.checked += 1
        try:
            beta = fold_path(wall, alpha)
        except OffWall:
            total.fail(_show(ball, alpha))
            continue
        image.checked += 1
        if not (is_path(ball, beta) and beta.end == w_idx and len(beta) == n):
            image.fail(_show(ball, alpha))
        invol.checked += 1
        try:
            back = fold_path(wall, beta)
        except OffWall:
            back = None
        if back != alpha:
            invol.fail(_show(ball, alpha))
        inject.checked += 1
        if beta in images:
            inject.fail([_show(ball, images[beta]), _show(ball, alpha)])
        images[beta] = alpha
    count.checked = 1
    if len(to_ws) > len(to_w):
        count.fail({"to_w": len(to_w), "to_ws": len(to_ws)})
    return BijectionReport(n, [total, image, invol, inject, count], len(to_w), len(to_ws))
