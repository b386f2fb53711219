"""Finite balls of the Cayley graph, with labelled edges and lengths."""

from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass, field

from .core import CoxeterSystem, Element, ResourceLimitError

log = logging.getLogger(__name__)

BOUNDARY = -1
DEFAULT_MAX_VERTICES = 10**6


@dataclass(frozen=True)
class Ball:
    """All elements of length <= radius, indexed by (length, ShortLex).

    ``adjacency[v][g]`` is the index of ``v * s_g`` or ``BOUNDARY`` when that
    neighbour lies outside the ball.  ``complete`` means the whole (finite)
    group was enumerated.
    """
    system: CoxeterSystem
    radius: int
    vertices: tuple[Element, ...]
    adjacency: tuple[tuple[int, ...], ...]
    complete: bool
    index_of: dict[Element, int] = field(repr=False, compare=False)

    def __len__(self):
        return len(self.vertices)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(v.length for v in self.vertices)

    def index(self, w: Element) -> int:
        return self.index_of[w]

    def find(self, word) -> int:
        """Index of the element spelled by ``word`` (names or indices)."""
        if isinstance(word, str):
            word = self.system.parse_word(word)
        return self.index_of[self.system.reduce(word)]

    def edges(self):
        """Yield each in-ball edge once as ``(u, v, g)`` with u shorter."""
        for u, row in enumerate(self.adjacency):
            for g, v in enumerate(row):
                if v != BOUNDARY and self.vertices[v].length > self.vertices[u].length:
                    yield u, v, g

    def shell_sizes(self) -> list[int]:
        sizes = [0] * (max(self.lengths) + 1)
        for v in self.vertices:
            sizes[v.length] += 1
        return sizes

    def covers_steps(self, n: int) -> bool:
        """True if every walk of ``n`` steps stays inside the ball."""
        return self.complete or self.radius >= n


def build_ball(system: CoxeterSystem, radius: int,
               max_vertices: int = DEFAULT_MAX_VERTICES) -> Ball:
    if radius < 0:
        raise ValueError("radius must be non-negative")
    found = {system.identity()}
    frontier = [system.identity()]
    for k in range(radius):
        nxt = []
        for w in frontier:
            for g in system.generators:
                x = system.right_multiply(w, g)
                if x.length > k and x not in found:
                    found.add(x)
                    nxt.append(x)
        if len(found) > max_vertices:
            raise ResourceLimitError(f"ball exceeds max_vertices={max_vertices}")
        if not nxt:
            break
        frontier = nxt
    vertices = tuple(sorted(found, key=Element.sort_key))
    index_of = {w: i for i, w in enumerate(vertices)}
    adjacency = []
    complete = True
    for w in vertices:
        row = []
        for g in system.generators:
            x = system.right_multiply(w, g)
            i = index_of.get(x, BOUNDARY)
            if i == BOUNDARY:
                complete = False
            row.append(i)
        adjacency.append(tuple(row))
    log.debug("ball radius=%d: %d vertices, complete=%s", radius, len(vertices), complete)
    return Ball(system, radius, vertices, tuple(adjacency), complete, index_of)


def right_descents(ball: Ball, v: int) -> set[int]:
    """Generators g with l(v s_g) < l(v)."""
    w = ball.vertices[v]
    out = set()
    for g, u in enumerate(ball.adjacency[v]):
        # a boundary neighbour is never shorter, but ask the engine anyway
        length = (ball.vertices[u].length if u != BOUNDARY
                  else ball.system.right_multiply(w, g).length)
        if length < w.length:
            out.add(g)
    return out


def longest_element(ball: Ball) -> int | None:
    if not ball.complete:
        return None
    top = [v for v in range(len(ball)) if len(right_descents(ball, v)) == ball.system.rank]
    if len(top) != 1:
        raise RuntimeError(f"complete ball has {len(top)} elements with full descent set")
    return top[0]


# --- export ---------------------------------------------------------------

def vertices_csv(ball: Ball) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["index", "length", "word"])
    for i, w in enumerate(ball.vertices):
        out.writerow([i, w.length, ball.system.format_word(w)])
    return buf.getvalue()


def edges_csv(ball: Ball) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["from_index", "to_index", "generator"])
    for u, v, g in ball.edges():
        out.writerow([u, v, ball.system.names[g]])
    return buf.getvalue()


def node_label(ball: Ball, v: int) -> str:
    return ball.system.format_word(ball.vertices[v]) or "e"


def graph_dot(ball: Ball) -> str:
    """Undirected DOT drawing of the labelled ball."""
    lines = ["graph cayley {"]
    for i in range(len(ball)):
        lines.append(f'  v{i} [label="{node_label(ball, i)}"];')
    for u, v, g in ball.edges():
        lines.append(f'  v{u} -- v{v} [label="{ball.system.names[g]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
