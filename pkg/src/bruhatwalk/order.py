"""Right weak order on a ball: covering relations, comparisons, Hasse export."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .cayley import Ball, node_label
from .core import CoxeterSystem, Element


@dataclass(frozen=True)
class WeakOrder:
    ball: Ball
    covers: tuple[tuple[int, int, int], ...]  # (u, v, g) with v = u s_g one longer

    def up(self, u: int) -> list[int]:
        return [v for a, v, _ in self.covers if a == u]

    def minimal(self) -> list[int]:
        has_lower = {v for _, v, _ in self.covers}
        return [i for i in range(len(self.ball)) if i not in has_lower]

    def maximal(self) -> list[int]:
        has_upper = {u for u, _, _ in self.covers}
        return [i for i in range(len(self.ball)) if i not in has_upper]


def covering_edges(ball: Ball) -> WeakOrder:
    return WeakOrder(ball, tuple(sorted(ball.edges())))


def leq_weak(system: CoxeterSystem, u: Element, v: Element) -> bool:
    """u <= v in the right weak order, via l(u) + l(u^-1 v) = l(v)."""
    return u.length + system.distance(u, v) == v.length


def leq_weak_reachable(order: WeakOrder, u: int, v: int) -> bool:
    """Same question answered by a search up the covers digraph.

    Only meaningful when the ball's radius is at least l(v).
    """
    if u == v:
        return True
    target_len = order.ball.vertices[v].length
    adj: dict[int, list[int]] = {}
    for a, b, _ in order.covers:
        adj.setdefault(a, []).append(b)
    stack, seen = [u], {u}
    while stack:
        x = stack.pop()
        for y in adj.get(x, ()):
            if y == v:
                return True
            if y not in seen and order.ball.vertices[y].length < target_len:
                seen.add(y)
                stack.append(y)
    return False


def hasse_dot(order: WeakOrder) -> str:
    ball = order.ball
    names = ball.system.names
    lines = ["digraph weak_order {", "  rankdir=BT;"]
    for i in range(len(ball)):
        lines.append(f'  v{i} [label="{node_label(ball, i)}"];')
    for u, v, g in order.covers:
        lines.append(f'  v{u} -> v{v} [label="{names[g]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def covers_csv(order: WeakOrder) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["u_index", "v_index", "generator"])
    for u, v, g in order.covers:
        out.writerow([u, v, order.ball.system.names[g]])
    return buf.getvalue()
