"""Relation sets, their graphs, and admissibility.

A :class:`RelationSet` lives on a triangle of vertices ``(row, col)`` with
``offset < col <= row <= offset + n``.  For gl(m|n) the even triangle uses
offset 0 and rank m, the odd triangle offset m and rank n; vertices are always
stored in the global tableau coordinates.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

import networkx as nx

from .constraints import DifferenceSystem

Vertex = tuple[int, int]
Pair = tuple[Vertex, Vertex]

PLUS, MINUS, ZERO = "plus", "minus", "zero"

# Inequality conventions, as (class -> minimal value of l_from - l_to, sign).
# "gl": the gl(n) definition; "even"/"odd": the two halves of a super pair.
GL, EVEN, ODD = "gl", "even", "odd"


class RelationError(ValueError):
    pass


@dataclass(frozen=True)
class RelationSet:
    n: int
    pairs: frozenset = field(default_factory=frozenset)
    offset: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", frozenset((tuple(a), tuple(b)) for a, b in self.pairs))
        if self.n < 1:
            raise RelationError("rank must be positive")
        for p in self.pairs:
            self.classify(p)

    # -- geometry -------------------------------------------------------------

    @property
    def top(self) -> int:
        return self.offset + self.n

    def in_triangle(self, v: Vertex) -> bool:
        r, c = v
        return self.offset < c <= r <= self.top

    def local(self, v: Vertex) -> Vertex:
        return (v[0] - self.offset, v[1] - self.offset)

    def classify(self, pair: Pair) -> str:
        u, v = pair
        if not (self.in_triangle(u) and self.in_triangle(v)):
            raise RelationError(f"pair {pair} leaves the triangle of rank {self.n} (offset {self.offset})")
        if v[0] == u[0] - 1:
            return PLUS
        if v[0] == u[0] + 1:
            return MINUS
        if u[0] == v[0] == self.top and u[1] != v[1]:
            return ZERO
        raise RelationError(f"pair {pair} is not in R+, R- or R0")

    def universe(self) -> list[Vertex]:
        return [(r, c) for r in range(self.offset + 1, self.top + 1) for c in range(self.offset + 1, r + 1)]

    def of_class(self, cls: str) -> list[Pair]:
        return sorted(p for p in self.pairs if self.classify(p) == cls)

    # -- graph ----------------------------------------------------------------

    @cached_property
    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.universe())
        g.add_edges_from(self.pairs)
        return g

    @cached_property
    def involved(self) -> frozenset:
        return frozenset(v for p in self.pairs for v in p)

    @cached_property
    def component_of(self) -> dict[Vertex, int]:
        """Weak component label of every vertex (isolated vertices are singletons)."""
        comps = sorted(sorted(c) for c in nx.weakly_connected_components(self.graph))
        return {v: idx for idx, comp in enumerate(comps) for v in comp}

    def same_component(self, a: Vertex, b: Vertex) -> bool:
        return self.component_of[a] == self.component_of[b]

    @cached_property
    def _descendants(self) -> dict[Vertex, frozenset]:
        g = self.graph
        out = {}
        for v in g.nodes:
            reach = set()
            for s in g.successors(v):
                reach.add(s)
                reach |= nx.descendants(g, s)
            out[v] = frozenset(reach)
        return out

    def reaches(self, v: Vertex, w: Vertex) -> bool:
        """v >=_C w: a directed path with at least one arrow from v to w."""
        return w in self._descendants.get(tuple(v), frozenset())

    # -- set algebra ----------------------------------------------------------

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[Pair]:
        return iter(sorted(self.pairs))

    def __contains__(self, pair) -> bool:
        return (tuple(pair[0]), tuple(pair[1])) in self.pairs

    def with_pairs(self, pairs: Iterable[Pair]) -> "RelationSet":
        return RelationSet(self.n, frozenset(pairs), self.offset)

    def union(self, pairs: Iterable[Pair]) -> "RelationSet":
        return self.with_pairs(self.pairs | set(pairs))

    def without(self, pairs: Iterable[Pair]) -> "RelationSet":
        return self.with_pairs(self.pairs - set(pairs))

    # -- constraints ----------------------------------------------------------

    def inequalities(self, convention: str) -> list[tuple[Vertex, Vertex, int]]:
        """Constraints ``l_a - l_b >= w`` encoded by the set under a convention."""
        out = []
        for u, v in sorted(self.pairs):
            cls = self.classify((u, v))
            if convention == GL:
                out.append((u, v, 1 if cls == MINUS else 0))
            elif convention == EVEN:
                out.append((u, v, 0 if cls == PLUS else 1))
            elif convention == ODD:
                out.append((v, u, 1 if cls == MINUS else 0))
            else:
                raise ValueError(f"unknown convention {convention!r}")
        return out

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        data = {
            "n": self.n,
            "pairs": [
                {"from": list(u), "to": list(v), "class": self.classify((u, v))} for u, v in sorted(self.pairs)
            ],
        }
        if self.offset:
            data["offset"] = self.offset
        return data

    @classmethod
    def from_json(cls, data: dict) -> "RelationSet":
        try:
            n = int(data["n"])
            offset = int(data.get("offset", 0))
            pairs = []
            for entry in data.get("pairs", []):
                pairs.append((tuple(int(x) for x in entry["from"]), tuple(int(x) for x in entry["to"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise RelationError(f"malformed relation set: {exc}") from exc
        out = cls(n, frozenset(pairs), offset)
        for entry in data.get("pairs", []):
            declared = entry.get("class")
            pair = (tuple(entry["from"]), tuple(entry["to"]))
            if declared is not None and declared != out.classify(pair):
                raise RelationError(f"pair {pair} declared {declared!r} but is {out.classify(pair)!r}")
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def reaches(C: RelationSet, v: Vertex, w: Vertex) -> bool:
    return C.reaches(tuple(v), tuple(w))


# --- gl(n) satisfaction --------------------------------------------------------


def _is_int(x) -> bool:
    return x.denominator == 1


def satisfies_gl(l_rows: Sequence[Sequence], C: RelationSet) -> bool:
    """Does the gl(n) tableau with l-coordinates ``l_rows`` (row 1 first) satisfy C?"""
    if len(l_rows) != C.n or any(len(row) != k for k, row in enumerate(l_rows, 1)):
        raise RelationError(f"tableau rows do not match rank {C.n}")

    def l(v: Vertex):
        r, c = C.local(v)
        return l_rows[r - 1][c - 1]

    for a, b, w in C.inequalities(GL):
        d = l(a) - l(b)
        if not (_is_int(d) and d >= w):
            return False
    for k in range(C.offset + 1, C.top):
        for i, j in combinations(range(C.offset + 1, k + 1), 2):
            integral = _is_int(l((k, i)) - l((k, j)))
            if integral != C.same_component((k, i), (k, j)):
                return False
    return True


# --- structural predicates ------------------------------------------------------


def _difference_system(C: RelationSet, convention: str = GL) -> DifferenceSystem:
    system = DifferenceSystem(C.universe())
    for a, b, w in C.inequalities(convention):
        system.require(a, b, w)
    return system


def feasible(C: RelationSet, convention: str = GL) -> bool:
    return _difference_system(C, convention).feasible()


def critical_pairs(C: RelationSet) -> list[tuple[Vertex, Vertex]]:
    """Same-row pairs below the top row that some satisfying tableau makes equal."""
    system = _difference_system(C)
    if not system.feasible():
        return []
    out = []
    for k in range(C.offset + 1, C.top):
        for i, j in combinations(range(C.offset + 1, k + 1), 2):
            a, b = (k, i), (k, j)
            if not C.same_component(a, b):
                continue
            lo, hi = system.difference_range(a, b)
            if lo <= 0 <= hi:
                out.append((a, b))
    return out


def is_noncritical(C: RelationSet) -> bool:
    return not critical_pairs(C)


def reduced_violations(C: RelationSet) -> list[str]:
    out = []
    for v in C.universe():
        k = v[0]
        for label, rows, outgoing in (
            ("i", k + 1, True),
            ("ii", k + 1, False),
            ("iii", k - 1, True),
            ("iv", k - 1, False),
        ):
            if outgoing:
                hits = [p for p in C.pairs if p[0] == v and p[1][0] == rows]
            else:
                hits = [p for p in C.pairs if p[1] == v and p[0][0] == rows]
            if len(hits) > 1:
                out.append(f"condition ({label}) of reducedness violated at {v}: {sorted(hits)}")
    for p in C.of_class(ZERO):
        if C.without([p]).reaches(*p):
            out.append(f"condition (v) of reducedness violated: top-row relation {p} follows from the others")
    return out


def is_reduced(C: RelationSet) -> bool:
    return not reduced_violations(C)


def indecomposable_components(C: RelationSet) -> list[RelationSet]:
    g = nx.DiGraph()
    g.add_edges_from(C.pairs)
    parts = []
    for comp in nx.weakly_connected_components(g):
        parts.append(C.with_pairs(p for p in C.pairs if p[0] in comp))
    return sorted(parts, key=lambda part: sorted(part.pairs))


def adjoining_pairs(C: RelationSet) -> list[tuple[Vertex, Vertex]]:
    out = []
    for k in range(C.offset + 1, C.top):
        for i, j in combinations(range(C.offset + 1, k + 1), 2):
            a, b = (k, i), (k, j)
            if a not in C.involved or b not in C.involved or not C.same_component(a, b):
                continue
            between = any(
                C.reaches(a, (k, s)) and C.reaches((k, s), b)
                for s in range(C.offset + 1, k + 1)
                if s not in (i, j)
            )
            if not between:
                out.append((a, b))
    return out


def _has_diamond(C: RelationSet, a: Vertex, b: Vertex) -> bool:
    k = a[0]
    ups = [p[1] for p in C.pairs if p[0] == a and p[1][0] == k + 1]
    downs = [p[1] for p in C.pairs if p[0] == a and p[1][0] == k - 1]
    has_c1 = any((u, b) in C.pairs for u in ups) and any((d, b) in C.pairs for d in downs)
    if has_c1:
        return True
    into_b = [p[0] for p in C.pairs if p[1] == b and p[0][0] == k + 1]
    return any(s[1] < t[1] for s in ups for t in into_b)


def F_violations(C: RelationSet) -> list[str]:
    """Reasons an indecomposable set fails to lie in the family F (empty if it does)."""
    if len(indecomposable_components(C)) > 1:
        raise RelationError("F membership is only defined for indecomposable sets")
    out = []
    for a, b in critical_pairs(C):
        out.append(f"condition (i) violated: {a} and {b} can be equal (critical)")
    out.extend(f"condition (i) violated: {msg}" for msg in reduced_violations(C))
    for (a, t), (s, b) in ((p, q) for p in C.pairs for q in C.pairs):
        k = a[0]
        if t[0] == k + 1 and s[0] == k + 1 and b[0] == k and a[1] < b[1] and s[1] < t[1]:
            out.append(f"condition (ii) violated at {(a, t)}, {(s, b)}: cross pattern")
    top = C.top
    for i, j in combinations(range(C.offset + 1, top + 1), 2):
        a, b = (top, i), (top, j)
        if a in C.involved and b in C.involved and C.same_component(a, b):
            if not (C.reaches(a, b) or C.reaches(b, a)):
                out.append(f"condition (iii) violated: top-row vertices {a}, {b} are incomparable")
    for a, b in adjoining_pairs(C):
        if not _has_diamond(C, a, b):
            out.append(f"condition (iv) violated: adjoining pair {a}, {b} has neither pattern")
    return out


def in_F(C: RelationSet) -> bool:
    return not F_violations(C)


def admissibility_report(C: RelationSet) -> list[str]:
    out = []
    for part in indecomposable_components(C):
        out.extend(F_violations(part))
    return out


def is_admissible(C: RelationSet) -> bool:
    return all(in_F(part) for part in indecomposable_components(C))


# --- standard sets ---------------------------------------------------------------


def standard_relations(n: int, offset: int = 0) -> RelationSet:
    """The betweenness set satisfied by finite-dimensional (interlacing) tableaux."""
    pairs = set()
    for k in range(2, n + 1):
        for i in range(1, k):
            r, c = offset + k, offset + i
            pairs.add(((r, c), (r - 1, c)))
            pairs.add(((r - 1, c), (r, c + 1)))
    return RelationSet(n, frozenset(pairs), offset)


# --- super pairs -------------------------------------------------------------------


@dataclass(frozen=True)
class SuperRelationSet:
    m: int
    n: int
    c1: RelationSet
    c2: RelationSet

    def __post_init__(self) -> None:
        if (self.c1.n, self.c1.offset) != (self.m, 0):
            raise RelationError("c1 must live on the gl(m) triangle (rank m, offset 0)")
        if (self.c2.n, self.c2.offset) != (self.n, self.m):
            raise RelationError("c2 must live on the gl(n) triangle (rank n, offset m)")

    @classmethod
    def empty(cls, m: int, n: int) -> "SuperRelationSet":
        return cls(m, n, RelationSet(m), RelationSet(n, offset=m))

    @classmethod
    def standard(cls, m: int, n: int) -> "SuperRelationSet":
        return cls(m, n, standard_relations(m), standard_relations(n, m))

    def part_of(self, v: Vertex) -> str:
        if self.c1.in_triangle(v):
            return "c1"
        if self.c2.in_triangle(v):
            return "c2"
        raise RelationError(f"vertex {v} lies in neither triangle")

    def replace(self, **parts: RelationSet) -> "SuperRelationSet":
        return SuperRelationSet(self.m, self.n, parts.get("c1", self.c1), parts.get("c2", self.c2))

    def __len__(self) -> int:
        return len(self.c1) + len(self.c2)

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "c1": self.c1.to_json(), "c2": self.c2.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "SuperRelationSet":
        try:
            m, n = int(data["m"]), int(data["n"])
            c1 = dict(data["c1"])
            c2 = dict(data["c2"])
        except (KeyError, TypeError, ValueError) as exc:
            raise RelationError(f"malformed super relation set: {exc}") from exc
        c2.setdefault("offset", m)
        return cls(m, n, RelationSet.from_json(c1), RelationSet.from_json(c2))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def is_admissible_super(C: SuperRelationSet) -> bool:
    return is_admissible(C.c1) and is_admissible(C.c2)


# --- relation removal ----------------------------------------------------------------


def is_extremal(C: RelationSet, v: Vertex) -> bool:
    """No incoming arrows (maximal in the gl sense) or no outgoing arrows (minimal)."""
    g = C.graph
    return g.in_degree(v) == 0 or g.out_degree(v) == 0


def rr_remove(C, v: Vertex, check: bool = True):
    """Delete every relation through an extremal vertex ``v``."""
    v = tuple(v)
    if isinstance(C, SuperRelationSet):
        name = C.part_of(v)
        part = rr_remove(getattr(C, name), v, check=check)
        return C.replace(**{name: part})
    if v not in C.involved:
        raise RelationError(f"vertex {v} is not involved in the relation set")
    if not is_extremal(C, v):
        raise RelationError(f"vertex {v} is neither maximal nor minimal")
    out = C.with_pairs(p for p in C.pairs if v not in p)
    if check and not is_admissible(out):
        raise AssertionError(f"relation removal at {v} produced an inadmissible set: {admissibility_report(out)}")
    return out


def extremal_vertices(C: RelationSet) -> list[Vertex]:
    return sorted(v for v in C.involved if is_extremal(C, v))


def all_relations(n: int, offset: int = 0) -> list[Pair]:
    """Every element of R+ u R- u R0 on the triangle."""
    C = RelationSet(n, frozenset(), offset)
    out = []
    for u in C.universe():
        for v in C.universe():
            if u == v:
                continue
            try:
                C.classify((u, v))
            except RelationError:
                continue
            out.append((u, v))
    return sorted(out)


def random_admissible(
    n: int,
    rng: random.Random,
    offset: int = 0,
    steps: Optional[int] = None,
    convention: str = GL,
    allow_zero: bool = True,
) -> RelationSet:
    """Grow an admissible set, satisfiable under ``convention``, one relation at a time."""
    C = RelationSet(n, frozenset(), offset)
    candidates = all_relations(n, offset)
    if not allow_zero:
        candidates = [p for p in candidates if C.classify(p) != ZERO]
    steps = steps if steps is not None else rng.randint(0, len(candidates))
    for _ in range(steps):
        pair = rng.choice(candidates)
        if pair in C.pairs:
            continue
        trial = C.union([pair])
        if is_admissible(trial) and feasible(trial, convention):
            C = trial
    return C


# --- super satisfaction ----------------------------------------------------------------


class Undecided(RuntimeError):
    """The shift-closure condition could not be settled within the search budget."""


HOLDS, FAILS, UNDECIDED = "holds", "fails", "undecided"

# Largest number of theta assignments enumerated exactly (2**(m*n) in general).
THETA_BUDGET = 1 << 16


def _lrows(t) -> tuple:
    return t.l_rows()


def _part_ok(L, C: RelationSet, convention: str, rows: range) -> bool:
    def l(v):
        return L[v[0] - 1][v[1] - 1]

    for a, b, w in C.inequalities(convention):
        d = l(a) - l(b)
        if d.denominator != 1 or d < w:
            return False
    for k in rows:
        for i, j in combinations(range(C.offset + 1, k + 1), 2):
            if ((l((k, i)) - l((k, j))).denominator == 1) != C.same_component((k, i), (k, j)):
                return False
    return True


def ordered_even_pairs(C: SuperRelationSet) -> list[tuple[int, int]]:
    """Columns (i, j) with (m,i) above (m,j) in G(C1); these stay ordered in rows above m."""
    m = C.m
    return [(i, j) for i in range(1, m + 1) for j in range(1, m + 1) if i != j and C.c1.reaches((m, i), (m, j))]


def satisfies_parts(L, C: SuperRelationSet, even_order: bool = True) -> bool:
    """Conditions (1) and (2): both triangles, theta in {0,1}, plus the even ordering rule."""
    m, N = C.m, C.m + C.n
    if not _part_ok(L, C.c1, EVEN, range(1, m + 1)):
        return False
    if not _part_ok(L, C.c2, ODD, range(m + 1, N + 1)):
        return False
    for k in range(m, N):
        for i in range(m):
            if L[k][i] - L[k - 1][i] not in (0, 1):
                return False
    if even_order:
        for i, j in ordered_even_pairs(C):
            for k in range(m + 1, N + 1):
                d = L[k - 1][i - 1] - L[k - 1][j - 1]
                if d.denominator != 1 or d < 1:
                    return False
    return True


def mixed_nonvanishing(L, m: int, N: int) -> bool:
    """Condition (3): even and odd entries of rows m+1..m+n-1 never coincide."""
    for k in range(m + 1, N):
        row = L[k - 1]
        evens = set(row[:m])
        if any(x in evens for x in row[m:]):
            return False
    return True


@dataclass(frozen=True)
class ShiftClass:
    """Everything reachable from a tableau by integer shifts that keep conditions (1)-(2).

    ``even_values[(k, i)]`` is the set of values l'_{ki} for rows k >= m, ``odd_ranges[(k, j)]``
    the interval of l'_{kj}, and ``c1_ranges``/``c2_ranges`` record, per assignment of the
    theta values, the interval of every adjacent-row difference inside a triangle.
    """

    status: str
    even_values: dict
    odd_ranges: dict
    c1_ranges: dict
    c2_ranges: dict
    collisions: tuple


def _integer_shift_system(L, C: RelationSet, convention: str, fixed_rows: Iterable[int], fixed_values: dict):
    anchor = "anchor"
    system = DifferenceSystem([anchor] + C.universe())
    for a, b, w in C.inequalities(convention):
        d = L[a[0] - 1][a[1] - 1] - L[b[0] - 1][b[1] - 1]
        system.require(a, b, w - int(d))
    for k in fixed_rows:
        for c in range(C.offset + 1, k + 1):
            system.fix((k, c), anchor, fixed_values.get((k, c), 0))
    return system, anchor


def _adjacent_pairs(C: RelationSet, L) -> list[tuple[Vertex, Vertex]]:
    """Integral pairs (upper, lower) in adjacent rows of the triangle, plus same-row pairs of its top."""
    out = []
    for k in range(C.offset + 2, C.top + 1):
        for i in range(C.offset + 1, k + 1):
            for j in range(C.offset + 1, k):
                if (L[k - 1][i - 1] - L[k - 2][j - 1]).denominator == 1:
                    out.append(((k, i), (k - 1, j)))
    return out


def shift_class(t, C: SuperRelationSet, even_order: bool = True) -> ShiftClass:
    key = (C, t.rows[-1], tuple(x - (x.numerator // x.denominator) for row in t.rows[:-1] for x in row), even_order)
    hit = _SHIFT_CACHE.get(key)
    if hit is None:
        hit = _shift_class(t, C, even_order)
        if len(_SHIFT_CACHE) > 4096:
            _SHIFT_CACHE.clear()
        _SHIFT_CACHE[key] = hit
    return hit


_SHIFT_CACHE: dict = {}


def _shift_class(t, C: SuperRelationSet, even_order: bool) -> ShiftClass:
    from itertools import product

    m, n, N = C.m, C.n, C.m + C.n
    L = _lrows(t)
    top = L[N - 1]

    # odd side: one system, top row pinned
    odd_sys, anchor = _integer_shift_system(L, C.c2, ODD, [N], {})
    if not odd_sys.feasible():
        return ShiftClass(FAILS, {}, {}, {}, {}, (("odd side infeasible",),))
    odd_ranges = {}
    for k in range(m + 1, N):
        for j in range(m + 1, k + 1):
            lo, hi = odd_sys.difference_range((k, j), anchor)
            odd_ranges[(k, j)] = (L[k - 1][j - 1] + lo if lo != float("-inf") else lo,
                                  L[k - 1][j - 1] + hi if hi != float("inf") else hi)
    c2_ranges = {}
    for a, b in _adjacent_pairs(C.c2, L):
        lo, hi = odd_sys.difference_range(a, b)
        d = L[a[0] - 1][a[1] - 1] - L[b[0] - 1][b[1] - 1]
        c2_ranges[(a, b)] = [(d + lo, d + hi)]

    # even side: enumerate theta assignments
    even_values: dict = {(k, i): set() for k in range(m, N) for i in range(1, m + 1)}
    c1_pairs = _adjacent_pairs(C.c1, L)
    c1_ranges: dict = {p: [] for p in c1_pairs}
    order = ordered_even_pairs(C) if even_order else []
    status = HOLDS
    if 2 ** (m * n) > THETA_BUDGET:
        status = UNDECIDED
        for k in range(m, N):
            for i in range(1, m + 1):
                even_values[(k, i)] = {top[i - 1] - s for s in range(0, N - k + 1)}
    else:
        for bits in product((0, 1), repeat=m * n):
            # theta[k][i] for k = m..N-1
            th = {(m + r, i + 1): bits[r * m + i] for r in range(n) for i in range(m)}
            rows = {}
            for i in range(1, m + 1):
                value = top[i - 1]
                for k in range(N - 1, m - 1, -1):
                    value = value - th[(k, i)]
                    rows[(k, i)] = value
            if any(rows[(k, i)] - rows[(k, j)] < 1 for i, j in order for k in range(m + 1, N)):
                continue
            fixed = {(m, i): int(rows[(m, i)] - L[m - 1][i - 1]) for i in range(1, m + 1)}
            if any((rows[(m, i)] - L[m - 1][i - 1]).denominator != 1 for i in range(1, m + 1)):
                continue
            sys1, _ = _integer_shift_system(L, C.c1, EVEN, [m], fixed)
            if not sys1.feasible():
                continue
            for v, value in rows.items():
                even_values[v].add(value)
            for a, b in c1_pairs:
                lo, hi = sys1.difference_range(a, b)
                d = L[a[0] - 1][a[1] - 1] - L[b[0] - 1][b[1] - 1]
                c1_ranges[(a, b)].append((d + lo, d + hi))
        if not any(even_values.values()):
            return ShiftClass(FAILS, even_values, odd_ranges, c1_ranges, c2_ranges, (("even side infeasible",),))

    collisions = []
    for k in range(m + 1, N):
        for i in range(1, m + 1):
            for j in range(m + 1, k + 1):
                if (L[k - 1][i - 1] - L[k - 1][j - 1]).denominator != 1:
                    continue
                lo, hi = odd_ranges[(k, j)]
                if any(lo <= v <= hi for v in even_values[(k, i)]):
                    collisions.append(((k, i), (k, j)))
    if collisions:
        status = FAILS if status == HOLDS else UNDECIDED
    return ShiftClass(status, even_values, odd_ranges, c1_ranges, c2_ranges, tuple(collisions))


def super_status(t, C: SuperRelationSet, even_order: bool = True) -> tuple[str, list[str]]:
    """Check conditions (1)-(4) and return (status, reasons)."""
    if (t.shape.m, t.shape.n) != (C.m, C.n):
        raise RelationError(f"tableau shape {t.shape} does not match relation set gl({C.m}|{C.n})")
    L = _lrows(t)
    m, N = C.m, C.m + C.n
    if not satisfies_parts(L, C, even_order):
        return FAILS, ["conditions (1)-(2) fail"]
    if not mixed_nonvanishing(L, m, N):
        return FAILS, ["condition (3) fails"]
    sc = shift_class(t, C, even_order)
    if sc.status == HOLDS:
        return HOLDS, []
    reasons = [f"shifts can make {a} and {b} equal" for a, b in sc.collisions]
    return sc.status, reasons or ["no tableau of the class meets the constraints"]


def satisfies_super(t, C: SuperRelationSet, even_order: bool = True) -> bool:
    status, reasons = super_status(t, C, even_order)
    if status == UNDECIDED:
        raise Undecided("; ".join(reasons))
    return status == HOLDS


# --- maximality ------------------------------------------------------------------------


def _sides(ranges: list, split: tuple[int, int]) -> tuple[bool, bool]:
    """Which of the half-lines d <= split[0] and d >= split[1] some assignment reaches."""
    low = any(lo <= split[0] for lo, hi in ranges)
    high = any(hi >= split[1] for lo, hi in ranges)
    return low, high


def unrelated_walls(t, C: SuperRelationSet, even_order: bool = True) -> list[tuple[Vertex, Vertex]]:
    """Integral adjacent-row pairs whose order is not forced within the shift class of t."""
    sc = shift_class(t, C, even_order)
    out = []
    for pair, ranges in sorted(sc.c1_ranges.items()):
        if ranges and all(_sides(ranges, (-1, 0))):
            out.append(pair)
    for pair, ranges in sorted(sc.c2_ranges.items()):
        if ranges and all(_sides(ranges, (0, 1))):
            out.append(pair)
    return out


def _row_top_pairs(L, C: RelationSet) -> list[Pair]:
    """Top-row relations ordering every integral pair of distinct values (strict, descending)."""
    k = C.top
    out = []
    for i, j in combinations(range(C.offset + 1, k + 1), 2):
        d = L[k - 1][i - 1] - L[k - 1][j - 1]
        if d.denominator == 1:
            if d == 0:
                raise RelationError(f"equal entries at ({k},{i}) and ({k},{j}) admit no relation set")
            out.append(((k, i), (k, j)) if d > 0 else ((k, j), (k, i)))
    return out


def _full_relations(L, C: RelationSet, convention: str) -> set:
    out = set()
    for (k, i), (r, j) in _adjacent_pairs(C, L):
        d = L[k - 1][i - 1] - L[r - 1][j - 1]
        if convention == EVEN:
            out.add(((k, i), (r, j)) if d >= 0 else ((r, j), (k, i)))
        else:
            out.add(((k, i), (r, j)) if d <= 0 else ((r, j), (k, i)))
    for a, b in _row_top_pairs(L, C):
        # R0 is strict for C1 (l_a > l_b); for C2 it reads l_a <= l_b.
        out.add((a, b) if convention == EVEN else (b, a))
    return out


def _reduce(C: RelationSet, convention: str) -> RelationSet:
    """Drop relations implied by the others, in a fixed order, until none is."""
    pairs = sorted(C.pairs)
    changed = True
    while changed:
        changed = False
        for p in sorted(pairs, key=lambda q: (C.classify(q) != ZERO, q), reverse=True):
            rest = C.with_pairs(q for q in pairs if q != p)
            system = _difference_system(rest, convention)
            (a, b, w), = C.with_pairs([p]).inequalities(convention)
            if rest.reaches(*p) or (system.longest(a, b) >= w and rest.same_component(*p)):
                pairs.remove(p)
                changed = True
                break
    return C.with_pairs(pairs)


def maximal_relation_set(t, even_order: bool = True) -> SuperRelationSet:
    m, n = t.shape.m, t.shape.n
    N = m + n
    if any(th.value not in (0, 1) for th in t.thetas()):
        raise RelationError("maximal relation sets need every theta in {0, 1}")
    L = _lrows(t)
    c1 = RelationSet(m, frozenset())
    c2 = RelationSet(n, frozenset(), m)
    c1 = _reduce(c1.with_pairs(_full_relations(L, c1, EVEN)), EVEN)
    c2 = _reduce(c2.with_pairs(_full_relations(L, c2, ODD)), ODD)
    C = SuperRelationSet(m, n, c1, c2)
    if not is_admissible_super(C):
        raise RelationError(f"no admissible maximal set for {t}: {admissibility_report(c1) + admissibility_report(c2)}")
    return C


def is_maximal_for(C: SuperRelationSet, t, mode: str = "closure", even_order: bool = True) -> bool:
    """Is C the maximal set of relations satisfied by t?

    ``closure`` asks that every integral adjacent-row pair keeps one order across the
    shift class; ``inclusion`` asks that no single admissible extension is still satisfied.
    """
    if mode == "closure":
        return not unrelated_walls(t, C, even_order)
    if mode == "inclusion":
        for name, part in (("c1", C.c1), ("c2", C.c2)):
            for p in all_relations(part.n, part.offset):
                if p in part.pairs:
                    continue
                bigger = part.union([p])
                if not is_admissible(bigger):
                    continue
                try:
                    if satisfies_super(t, C.replace(**{name: bigger}), even_order):
                        return False
                except Undecided:
                    continue
        return True
    raise ValueError(f"unknown maximality mode {mode!r}")


# --- covariant sets -------------------------------------------------------------------


def covariant_chain(p: int, C: SuperRelationSet) -> list[Pair]:
    N = C.m + C.n
    return [((i, i), (i + 1, i + 1)) for i in range(p, N)]


def covariant_p(C: SuperRelationSet) -> Optional[int]:
    """The chain start p for which C is covariant admissible, or None."""
    if not is_admissible_super(C):
        return None
    m, N = C.m, C.m + C.n
    for p in range(m + 1, N + 1):
        if not all(pair in C.c2 for pair in covariant_chain(p, C)):
            continue
        if any(((p, p) == a and b[0] == p - 1) or ((p, p) == b and a[0] == p - 1) for a, b in C.c2.pairs):
            continue
        comp = C.c2.component_of[(p, p)]
        saturated = all(
            C.c2.component_of[(k, j)] == comp
            for (k, i), c in C.c2.component_of.items()
            if c == comp
            for j in range(i, k + 1)
        )
        if saturated:
            return p
    return None


def is_covariant_admissible(C: SuperRelationSet) -> bool:
    return covariant_p(C) is not None


def covariant_violations(t, C: SuperRelationSet, even_order: bool = True) -> list[str]:
    p = covariant_p(C)
    if p is None:
        raise RelationError("relation set is not covariant admissible")
    m, n = C.m, C.n
    N = m + n
    L = _lrows(t)

    def l(k, i):
        return L[k - 1][i - 1]

    out = []
    if not satisfies_parts(L, C, even_order):
        out.append("conditions (1)-(2) fail")
    comp = C.c2.component_of[(p, p)]
    if (l(N, m) - l(N, N)).denominator != 1:
        out.append("condition (3): top even/odd corner is not integral")
    for k in range(m + 1, N + 1):
        for i in range(1, m + 1):
            for j in range(m + 1, k + 1):
                if C.c2.component_of[(k, j)] != comp and (l(k, i) - l(k, j)).denominator == 1:
                    out.append(f"condition (3): ({k},{i}) and ({k},{j}) differ by an integer")
    base = l(N, N)
    if l(N, m) - base <= 0:
        for k in range(m + 1, N + 1):
            pk = next((q for q in range(m + 1, k + 1) if l(k, q) - base == q - N), None)
            bound = base - N + (pk if pk is not None else k + 1)
            if l(k, m) < bound:
                out.append(f"condition (4): l({k},{m}) = {l(k, m)} below {bound}")
    if l(m + 1, m) - base == 1 - n and l(m + 1, m) - l(m, m) != 0:
        out.append("condition (5): theta(m,m) must vanish")
    return out


def is_C_covariant(t, C: SuperRelationSet, even_order: bool = True) -> bool:
    return not covariant_violations(t, C, even_order)


def shift_membership(C: SuperRelationSet, even_order: bool = True):
    """Fast test of conditions (1)-(3) for integer shifts of a tableau that satisfies C.

    Integrality patterns are invariant under integer shifts, so only the inequalities,
    the theta range, the even ordering and the mixed nonvanishing are rechecked.
    """
    m, N = C.m, C.m + C.n
    checks = []
    for part, conv in ((C.c1, EVEN), (C.c2, ODD)):
        for (r1, c1), (r2, c2), w in part.inequalities(conv):
            checks.append((r1 - 1, c1 - 1, r2 - 1, c2 - 1, w))
    for i, j in (ordered_even_pairs(C) if even_order else []):
        for k in range(m + 1, N):
            checks.append((k - 1, i - 1, k - 1, j - 1, 1))
    thetas = [(k, i) for k in range(m, N) for i in range(m)]
    mixed = range(m + 1, N)

    def member(L) -> bool:
        for a, b, c, d, w in checks:
            if L[a][b] - L[c][d] < w:
                return False
        for k, i in thetas:
            x = L[k][i] - L[k - 1][i]
            if x != 0 and x != 1:
                return False
        for k in mixed:
            row = L[k - 1]
            evens = row[:m]
            for x in row[m:]:
                if x in evens:
                    return False
        return True

    return member
