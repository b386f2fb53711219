"""
Walls of the Cayley graph.

Fix an edge (w, ws) with l(w) < l(ws).  Every vertex is strictly closer to one
end than the other (the graph is bipartite), which splits the vertices into
white (closer to w) and black (closer to ws).  Edges joining the two colours
are grey; together they form the wall fixed by the reflection r = w s w^-1.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field

from .cayley import BOUNDARY, Ball
from .core import CoxeterSystem, Element


class Colour(str, enum.Enum):
    WHITE = "white"
    BLACK = "black"


def colour_vertex(system: CoxeterSystem, w: Element, s: int, x: Element) -> Colour:
    ws = system.right_multiply(w, s)
    if ws.length <= w.length:
        raise ValueError("colouring needs l(w s) > l(w)")
    d_w, d_ws = system.distance(x, w), system.distance(x, ws)
    if d_w == d_ws:
        raise RuntimeError(f"vertex {x.word} equidistant from w and ws: engine bug")
    return Colour.WHITE if d_w < d_ws else Colour.BLACK


@dataclass(frozen=True)
class WallData:
    ball: Ball = field(repr=False)
    w: Element
    s: int
    reflection: Element
    colour: tuple[Colour, ...]
    grey_edges: tuple[tuple[int, int, int], ...]  # (white end, black end, label)
    reflect: tuple[int, ...] = field(repr=False)  # vertex -> index of r*vertex, or BOUNDARY

    @property
    def ws(self) -> Element:
        return self.ball.system.right_multiply(self.w, self.s)

    def whites(self) -> list[int]:
        return [i for i, c in enumerate(self.colour) if c is Colour.WHITE]

    def blacks(self) -> list[int]:
        return [i for i, c in enumerate(self.colour) if c is Colour.BLACK]

    def grey_at(self) -> dict[int, tuple[int, int]]:
        """Map each wall vertex to (other endpoint, edge label)."""
        out = {}
        for a, b, g in self.grey_edges:
            out[a] = (b, g)
            out[b] = (a, g)
        return out

    def to_json(self) -> dict:
        return {
            "w": self.ball.system.format_word(self.w),
            "s": self.ball.system.names[self.s],
            "whites": self.whites(),
            "blacks": self.blacks(),
            "grey_edges": [[a, b] for a, b, _ in self.grey_edges],
            "reflection": self.ball.system.format_word(self.reflection),
        }


def wall_data(ball: Ball, w: Element, s: int) -> WallData:
    system = ball.system
    ws = system.right_multiply(w, s)
    if w not in ball.index_of or ws not in ball.index_of:
        raise ValueError("both ends of the edge must lie in the ball")
    if ws.length != w.length + 1:
        raise ValueError("wall_data needs l(w s) = l(w) + 1")
    colour = tuple(colour_vertex(system, w, s, x) for x in ball.vertices)
    grey = []
    for u, v, g in ball.edges():
        if colour[u] is not colour[v]:
            grey.append((u, v, g) if colour[u] is Colour.WHITE else (v, u, g))
    reflection = system.conjugate(w, s)
    reflect = tuple(ball.index_of.get(system.multiply(reflection, x), BOUNDARY)
                    for x in ball.vertices)
    return WallData(ball, w, s, reflection, colour, tuple(sorted(grey)), reflect)


@dataclass
class Check:
    name: str
    passed: bool = True
    counterexample: object = None
    checked: int = 0

    def fail(self, example) -> None:
        if self.passed:
            self.passed = False
            self.counterexample = example

    def to_json(self) -> dict:
        return {"passed": self.passed, "checked": self.checked,
                "counterexample": self.counterexample}


@dataclass
class WallReport:
    checks: list[Check]
    grey_edge_count: int

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        return next(c for c in self.checks if c.name == name)

    def to_json(self) -> dict:
        return {"passed": self.passed, "grey_edge_count": self.grey_edge_count,
                "checks": {c.name: c.to_json() for c in self.checks}}


def verify_wall(wall: WallData, ball: Ball | None = None) -> WallReport:
    """Check the four wall facts on every grey edge (x, xt), x white.

    greydist:   d(x, w) = d(xt, ws)
    greypath:   w^-1 x = s w^-1 x t
    greyflip:   r x = xt and r xt = x
    uniqueness: no vertex meets two grey edges
    """
    ball = ball or wall.ball
    system = ball.system
    w, ws = wall.w, wall.ws
    w_inv = system.inverse(w)
    s_el = system.reduce([wall.s])
    dist, path, flip, unique = (Check("greydist"), Check("greypath"),
                                Check("greyflip"), Check("uniqueness"))
    for a, b, t in wall.grey_edges:
        x, xt = ball.vertices[a], ball.vertices[b]
        pair = [system.format_word(x), system.format_word(xt)]
        dist.checked += 1
        if system.distance(x, w) != system.distance(xt, ws):
            dist.fail(pair)
        path.checked += 1
        lhs = system.multiply(w_inv, x)
        rhs = system.right_multiply(system.multiply(s_el, lhs), t)
        if lhs != rhs:
            path.fail(pair)
        flip.checked += 1
        if (system.multiply(wall.reflection, x) != xt
                or system.multiply(wall.reflection, xt) != x):
            flip.fail(pair)
    incidence = Counter()
    for a, b, _ in wall.grey_edges:
        incidence[a] += 1
        incidence[b] += 1
    unique.checked = len(ball)
    for v, k in sorted(incidence.items()):
        if k > 1:
            unique.fail(system.format_word(ball.vertices[v]))
    return WallReport([dist, path, flip, unique], len(wall.grey_edges))
