"""Integer difference constraints ``x_a - x_b >= w``.

The feasible set of such a system is decided by longest paths: it is
nonempty iff the constraint graph has no positive cycle, and the projection
onto any difference x_a - x_b is the integer interval
[LP(a, b), -LP(b, a)] (total unimodularity keeps the endpoints attainable).
"""

from __future__ import annotations

from typing import Hashable, Iterable, Optional, Sequence

NEG_INF = float("-inf")


class Infeasible(Exception):
    pass


class DifferenceSystem:
    def __init__(self, nodes: Iterable[Hashable]):
        self.nodes: list[Hashable] = list(dict.fromkeys(nodes))
        self.index = {v: i for i, v in enumerate(self.nodes)}
        self.edges: list[tuple[int, int, int]] = []
        self._dist: Optional[list[list[float]]] = None

    def add_node(self, v: Hashable) -> None:
        if v not in self.index:
            self.index[v] = len(self.nodes)
            self.nodes.append(v)
            self._dist = None

    def require(self, a: Hashable, b: Hashable, w: int) -> None:
        """Add the constraint x_a - x_b >= w."""
        self.add_node(a)
        self.add_node(b)
        self.edges.append((self.index[a], self.index[b], int(w)))
        self._dist = None

    def fix(self, v: Hashable, anchor: Hashable, value: int) -> None:
        """x_v - x_anchor == value."""
        self.require(v, anchor, value)
        self.require(anchor, v, -value)

    def _closure(self) -> list[list[float]]:
        if self._dist is not None:
            return self._dist
        size = len(self.nodes)
        dist = [[NEG_INF] * size for _ in range(size)]
        for i in range(size):
            dist[i][i] = 0
        for a, b, w in self.edges:
            if w > dist[a][b]:
                dist[a][b] = w
        for k in range(size):
            dk = dist[k]
            for i in range(size):
                dik = dist[i][k]
                if dik == NEG_INF:
                    continue
                di = dist[i]
                for j in range(size):
                    cand = dik + dk[j]
                    if cand > di[j]:
                        di[j] = cand
        self._dist = dist
        return dist

    def feasible(self) -> bool:
        dist = self._closure()
        return all(dist[i][i] <= 0 for i in range(len(self.nodes)))

    def longest(self, a: Hashable, b: Hashable) -> float:
        """Tightest lower bound on x_a - x_b implied by the system."""
        return self._closure()[self.index[a]][self.index[b]]

    def difference_range(self, a: Hashable, b: Hashable) -> tuple[float, float]:
        """Feasible integer interval of x_a - x_b (may be infinite)."""
        if not self.feasible():
            raise Infeasible("constraint system has a positive cycle")
        if a not in self.index or b not in self.index:
            if a == b:
                return (0, 0)
            return (NEG_INF, float("inf"))
        lo = self.longest(a, b)
        hi = -self.longest(b, a)
        return (lo, hi)


def interval_meets(values: Sequence[int], lo: float, hi: float) -> bool:
    return any(lo <= v <= hi for v in values)
