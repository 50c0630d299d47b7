"""Random admissible relation pairs and random tableaux satisfying them."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .algebra import Shape
from .relations import (
    EVEN,
    HOLDS,
    ODD,
    RelationSet,
    SuperRelationSet,
    random_admissible,
    super_status,
)
from .tableau import Tableau

_DENOMINATORS = (2, 3, 4, 5, 7)


def random_pair(shape: Shape, rng: random.Random, even_zero: bool = False) -> SuperRelationSet:
    """Random admissible pair. Zero-class pairs in the even triangle sit on row m, which is not
    fixed inside a module; they are left out unless ``even_zero`` is set (see ``even_zero_counterexample``)."""
    return SuperRelationSet(
        shape.m,
        shape.n,
        random_admissible(shape.m, rng, convention=EVEN, allow_zero=even_zero),
        random_admissible(shape.n, rng, offset=shape.m, convention=ODD),
    )


def _fractions(count: int, rng: random.Random, integral: bool) -> list[Fraction]:
    if integral:
        return [Fraction(0)] * count
    out: list[Fraction] = []
    while len(out) < count:
        q = rng.choice(_DENOMINATORS)
        f = Fraction(rng.randrange(q), q)
        if f not in out:
            out.append(f)
    return out


def _solve(C: RelationSet, convention: str, rng: random.Random, integral: bool, spread: int) -> Optional[dict]:
    """Random l-values on the triangle of C: one fractional part per component, integer parts relaxed
    until every inequality holds."""
    verts = C.universe()
    comp = C.component_of
    labels = sorted({comp.get(v, ("alone", v)) for v in verts}, key=repr)
    fracs = dict(zip(labels, _fractions(len(labels), rng, integral)))
    z = {v: rng.randint(-spread, spread) for v in verts}
    edges = C.inequalities(convention)
    for _ in range(len(verts) + 2):
        changed = False
        for a, b, w in edges:
            if z[a] - z[b] < w:
                z[a] = z[b] + w
                changed = True
        if not changed:
            return {v: fracs[comp.get(v, ("alone", v))] + z[v] for v in verts}
    return None


def random_seed(
    C: SuperRelationSet,
    rng: random.Random,
    integral: bool = False,
    spread: int = 3,
    attempts: int = 200,
) -> Optional[Tableau]:
    """A tableau satisfying C (status 'holds'), or None if none was hit within ``attempts`` draws."""
    m, n = C.m, C.n
    N = m + n
    shape = Shape(m, n)
    for _ in range(attempts):
        even = _solve(C.c1, EVEN, rng, integral, spread)
        odd = _solve(C.c2, ODD, rng, integral, spread)
        if even is None or odd is None:
            continue
        L = [[None] * k for k in range(1, N + 1)]
        for (k, i), x in even.items():
            L[k - 1][i - 1] = x
        for (k, j), x in odd.items():
            L[k - 1][j - 1] = x
        for k in range(m + 1, N + 1):
            for i in range(m):
                L[k - 1][i] = L[k - 2][i] + rng.randint(0, 1)
        t = Tableau.from_l(shape, L)
        if super_status(t, C)[0] == HOLDS:
            return t
    return None


def even_zero_counterexample() -> tuple[SuperRelationSet, Tableau]:
    """An admissible pair with a zero-class even relation and a seed whose module breaks [e2,f2] = h2 + h3."""
    C = SuperRelationSet.from_json(
        {
            "m": 2,
            "n": 1,
            "c1": {"n": 2, "pairs": [{"class": "minus", "from": [1, 1], "to": [2, 1]}, {"class": "zero", "from": [2, 1], "to": [2, 2]}]},
            "c2": {"n": 1, "offset": 2, "pairs": []},
        }
    )
    t = Tableau.from_json({"m": 2, "n": 1, "rows": [["21/5"], ["16/5", "16/5"], ["16/5", "16/5", "-1"]]})
    return C, t
