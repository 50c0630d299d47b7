"""Tableau modules V_C([l0]): basis enumeration, generator actions and matrices."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from gmpy2 import mpq

from .actions import raw_e, raw_f
from .algebra import BasisElement, Gen, Shape, Weight
from .linalg import SparseMatrix
from .relations import (
    HOLDS,
    RelationError,
    SuperRelationSet,
    covariant_violations,
    shift_membership,
    super_status,
)
from .tableau import Tableau

log = logging.getLogger(__name__)

SparseVector = dict  # Tableau -> Fraction, zeros omitted

TYPICAL, COVARIANT = "quasi-typical", "quasi-covariant"


class ActionError(ArithmeticError):
    """A coefficient is singular although its target tableau is in the basis."""


class InfiniteModule(ValueError):
    pass


def add_into(acc: SparseVector, vec: SparseVector, scale=1) -> None:
    for t, c in vec.items():
        v = acc.get(t, 0) + c * scale
        if v:
            acc[t] = v
        else:
            acc.pop(t, None)


@dataclass
class DropLog:
    zero: int = 0
    nonzero: int = 0
    singular: int = 0
    witnesses: list = field(default_factory=list)

    def record(self, kind: str, source: Tableau, target: Tableau, gen: str) -> None:
        setattr(self, kind, getattr(self, kind) + 1)
        if kind != "zero" and len(self.witnesses) < 10:
            self.witnesses.append({"generator": gen, "source": source.to_json(), "target": target.to_json(), "kind": kind})


class ModuleSpace:
    def __init__(
        self,
        seed: Tableau,
        relations: SuperRelationSet,
        mode: str = TYPICAL,
        even_order: bool = True,
    ):
        if (seed.shape.m, seed.shape.n) != (relations.m, relations.n):
            raise RelationError("seed and relation set have different shapes")
        if mode not in (TYPICAL, COVARIANT):
            raise ValueError(f"unknown mode {mode!r}")
        self.shape: Shape = seed.shape
        self.seed = seed
        self.relations = relations
        self.mode = mode
        self.even_order = even_order
        self.basis: list[Tableau] = []
        self.index: dict[Tableau, int] = {}
        self.finite: Optional[bool] = None
        self.radius: Optional[int] = None
        self.drops = DropLog()
        self._member: dict[Tableau, bool] = {}
        self._actions: dict[tuple[str, int, Tableau], SparseVector] = {}
        # integer handles for fast repeated application
        self._ids: dict[Tableau, int] = {}
        self._tabs: list[Tableau] = []
        self._id_actions: dict[tuple[str, int, int], tuple] = {}
        self._fast_member = shift_membership(relations, even_order)
        if mode == TYPICAL:
            status, reasons = super_status(seed, relations, even_order)
            if status != HOLDS:
                raise RelationError(f"seed does not satisfy the relation set ({status}): {'; '.join(reasons)}")
        else:
            problems = covariant_violations(seed, relations, even_order)
            if problems:
                raise RelationError(f"seed is not C-covariant: {'; '.join(problems)}")

    # -- membership ------------------------------------------------------------

    def contains(self, t: Tableau) -> bool:
        """Is t in B_C([l0])?  Only tableaux differing from the seed by integer shifts qualify."""
        hit = self._member.get(t)
        if hit is None:
            hit = self._contains(t)
            self._member[t] = hit
        return hit

    def _contains(self, t: Tableau) -> bool:
        if t.rows[-1] != self.seed.rows[-1]:
            return False
        for r1, r0 in zip(t.rows, self.seed.rows):
            for a, b in zip(r1, r0):
                if (a - b).denominator != 1:
                    return False
        if self.mode == COVARIANT:
            return not covariant_violations(t, self.relations, self.even_order)
        # condition (4) depends only on the shift class, which the seed already passed
        return self._fast_member(t.l_rows())

    # -- enumeration -----------------------------------------------------------

    def enumerate(self, cap: int = 20000, radius: Optional[int] = None) -> "ModuleSpace":
        """Breadth-first closure of the seed under single shifts.

        With ``radius`` the search stops at that shift distance; otherwise at ``cap`` tableaux.
        """
        if cap <= 0:
            raise ValueError("cap must be positive")
        N = self.shape.total
        seen = {self.seed: 0}
        queue = deque([self.seed])
        complete = True
        while queue:
            t = queue.popleft()
            depth = seen[t]
            for k in range(1, N):
                for i in range(1, k + 1):
                    for delta in (1, -1):
                        s = t.shifted(k, i, delta)
                        if s in seen or not self.contains(s):
                            continue
                        if (radius is not None and depth >= radius) or len(seen) >= cap:
                            complete = False
                            continue
                        seen[s] = depth + 1
                        queue.append(s)
        self.basis = sorted(seen)
        self.index = {t: i for i, t in enumerate(self.basis)}
        self.finite = complete
        self.radius = radius
        return self

    @property
    def dim(self) -> int:
        if not self.finite:
            raise InfiniteModule("module is infinite or not fully enumerated")
        return len(self.basis)

    # -- actions ---------------------------------------------------------------

    def _collect(self, tag: str, t: Tableau, terms) -> SparseVector:
        out: SparseVector = {}
        for target, coef in terms:
            if self.contains(target):
                try:
                    c = coef()
                except ZeroDivisionError as exc:
                    raise ActionError(f"{tag} on {t}: singular coefficient for basis tableau {target}") from exc
                if c:
                    out[target] = out.get(target, 0) + c
            else:
                try:
                    c = coef()
                except ZeroDivisionError:
                    self.drops.record("singular", t, target, tag)
                    continue
                self.drops.record("nonzero" if c else "zero", t, target, tag)
        return {k: v for k, v in out.items() if v}

    def act_e(self, k: int, t: Tableau) -> SparseVector:
        key = ("e", k, t)
        hit = self._actions.get(key)
        if hit is None:
            hit = self._collect(f"e{k}", t, raw_e(k, t))
            self._actions[key] = hit
        return hit

    def act_f(self, k: int, t: Tableau) -> SparseVector:
        key = ("f", k, t)
        hit = self._actions.get(key)
        if hit is None:
            hit = self._collect(f"f{k}", t, raw_f(k, t))
            self._actions[key] = hit
        return hit

    def act_h(self, k: int, t: Tableau) -> SparseVector:
        c = t.h_eigenvalue(k)
        return {t: c} if c else {}

    def act_gen(self, g: Gen, t: Tableau) -> SparseVector:
        if g.kind == "e":
            return self.act_e(g.index, t)
        if g.kind == "f":
            return self.act_f(g.index, t)
        return self.act_h(g.index, t)

    def apply_gen(self, g: Gen, vec: SparseVector) -> SparseVector:
        out: SparseVector = {}
        for t, c in vec.items():
            add_into(out, self.act_gen(g, t), c)
        return out

    def tableau_id(self, t: Tableau) -> int:
        i = self._ids.get(t)
        if i is None:
            i = self._ids[t] = len(self._tabs)
            self._tabs.append(t)
        return i

    def tableau_of(self, i: int) -> Tableau:
        return self._tabs[i]

    def act_id(self, kind: str, k: int, i: int) -> tuple:
        """Generator action on the tableau with handle i, as ((handle, coefficient), ...).

        Coefficients are gmpy2 rationals: exact like Fraction, but much cheaper in bulk.
        """
        key = (kind, k, i)
        hit = self._id_actions.get(key)
        if hit is None:
            t = self._tabs[i]
            vec = self.act_gen(Gen(kind, k), t)
            hit = tuple((self.tableau_id(s), mpq(c.numerator, c.denominator)) for s, c in vec.items())
            self._id_actions[key] = hit
        return hit

    def act_basis_element(self, el: BasisElement, t: Tableau) -> SparseVector:
        return self.apply_element(el, {t: Fraction(1)})

    def apply_element(self, el: BasisElement, vec: SparseVector) -> SparseVector:
        el.check(self.shape)
        i, j = el.i, el.j
        if i == j:
            return self.apply_gen(Gen("h", i), vec)
        if j == i + 1:
            return self.apply_gen(Gen("e", i), vec)
        if i == j + 1:
            return self.apply_gen(Gen("f", j), vec)
        # E_ij = [E_ik, E_kj] with k the pivot next to j
        k = j - 1 if i < j else j + 1
        a, b = BasisElement(i, k), BasisElement(k, j)
        sign = -1 if a.parity(self.shape) and b.parity(self.shape) else 1
        out = self.apply_element(a, self.apply_element(b, vec))
        add_into(out, self.apply_element(b, self.apply_element(a, vec)), -sign)
        return out

    # -- matrices --------------------------------------------------------------

    def matrix_of(self, op) -> SparseMatrix:
        """Matrix of a Gen or BasisElement in the canonical basis (columns are images)."""
        if not self.finite:
            raise InfiniteModule("matrices need a finite, fully enumerated basis")
        size = len(self.basis)
        mat = SparseMatrix(size, size)
        for c, t in enumerate(self.basis):
            image = self.act_gen(op, t) if isinstance(op, Gen) else self.act_basis_element(op, t)
            for target, v in image.items():
                r = self.index.get(target)
                if r is None:
                    raise ActionError(f"image of {t} leaves the enumerated basis at {target}")
                mat.add_entry(r, c, v)
        return mat

    def weights(self) -> list[tuple[Fraction, ...]]:
        return [t.weight_tuple() for t in self.basis]

    def to_json(self, matrices: bool = False) -> dict:
        data = {
            "shape": {"m": self.shape.m, "n": self.shape.n},
            "mode": self.mode,
            "seed": self.seed.to_json(),
            "relations": self.relations.to_json(),
            "finite": self.finite,
            "basis": [t.to_json() for t in self.basis],
        }
        if self.radius is not None:
            data["radius"] = self.radius
        if matrices:
            from .rational import fmt

            mats = {}
            N = self.shape.total
            for k in range(1, N):
                for g in (Gen("e", k), Gen("f", k)):
                    m = self.matrix_of(g)
                    mats[str(g)] = {"rows": m.nrows, "entries": [[r, c, fmt(v)] for r, c, v in m.entries()]}
            for k in range(1, N + 1):
                m = self.matrix_of(Gen("h", k))
                mats[f"h{k}"] = {"rows": m.nrows, "entries": [[r, c, fmt(v)] for r, c, v in m.entries()]}
            data["matrices"] = mats
        return data


def build_module(
    seed: Tableau,
    relations: SuperRelationSet,
    mode: str = TYPICAL,
    cap: int = 20000,
    radius: Optional[int] = None,
    even_order: bool = True,
) -> ModuleSpace:
    return ModuleSpace(seed, relations, mode, even_order).enumerate(cap=cap, radius=radius)


def enumerate_basis(seed: Tableau, C: SuperRelationSet, mode: str = TYPICAL, cap: int = 20000):
    M = build_module(seed, C, mode, cap=cap)
    return M.basis, bool(M.finite)


def standard_module(weight: Weight, shape: Shape, mode: str = TYPICAL, cap: int = 20000) -> ModuleSpace:
    """Module of a dominant weight over the standard relation pair, seeded at the highest tableau."""
    return build_module(Tableau.highest(weight, shape), SuperRelationSet.standard(shape.m, shape.n), mode, cap=cap)


# --- normalization -------------------------------------------------------------------


def generalized_factorial(a) -> Fraction:
    """a! for integers, with a! = 1/((a+1)(a+2)...(-1)) when a < 0."""
    a = Fraction(a)
    if a.denominator != 1:
        raise ValueError(f"factorial argument {a} is not an integer")
    a = int(a)
    out = Fraction(1)
    if a >= 0:
        for x in range(2, a + 1):
            out *= x
    else:
        for x in range(a + 1, 0):
            out /= x
    return out


def normalization_a(t: Tableau) -> Fraction:
    """a(Lambda) = prod_k a_k(Lambda), the rescaling between the formulas and the unnormalized basis."""
    m, N = t.shape.m, t.shape.total
    L = t.l_rows()

    def l(k, i):
        return L[k - 1][i - 1]

    fac = generalized_factorial
    out = Fraction(1)
    for k in range(2, N + 1):
        if k <= m:
            blocks = [range(1, k + 1)]
        else:
            blocks = [range(1, m + 1), range(m + 1, k + 1)]
        for block in blocks:
            for i in block:
                for j in block:
                    if k <= m:
                        if i <= j < k:
                            out *= fac(l(k, i) - l(k - 1, j)) / fac(l(k - 1, i) - l(k - 1, j))
                        if i < j:
                            out *= fac(l(k, i) - l(k, j) - 1) / fac(l(k - 1, i) - l(k, j) - 1)
                    else:
                        if i <= j < k:
                            out *= fac(l(k - 1, j) - l(k, i)) / fac(l(k - 1, j) - l(k - 1, i))
                        if i < j:
                            out *= fac(l(k, j) - l(k, i) - 1) / fac(l(k, j) - l(k - 1, i) - 1)
    return out


def module_from_json(data: dict, cap: int = 20000) -> ModuleSpace:
    """Rebuild a module from its JSON export; a stored basis must agree with the recomputed one."""
    try:
        seed = Tableau.from_json(data["seed"])
        relations = SuperRelationSet.from_json(data["relations"])
        mode = data.get("mode", TYPICAL)
        radius = data.get("radius")
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed module description: {exc}") from exc
    M = build_module(seed, relations, mode, cap=cap, radius=radius)
    if "basis" in data:
        stored = sorted(Tableau.from_json(t) for t in data["basis"])
        if stored != M.basis:
            raise ValueError("stored basis differs from the recomputed closure of the seed")
    return M
