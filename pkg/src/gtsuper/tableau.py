"""Gelfand-Tsetlin tableaux for gl(m|n).

A tableau is stored in lambda-coordinates as ``rows[k-1] = (lam_k1, ..., lam_kk)``
for k = 1..m+n, so ``rows[-1]`` is the top row (the highest weight).  The
l-coordinates and theta-values are derived on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .algebra import Shape, Weight, l_coordinate, lambda_coordinate
from .rational import Q, RationalLike, fmt_all


@dataclass(frozen=True)
class Shift:
    k: int
    i: int
    sign: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("shift sign must be +1 or -1")

    def opposite(self) -> "Shift":
        return Shift(self.k, self.i, -self.sign)


@dataclass(frozen=True)
class ThetaValue:
    k: int
    i: int
    value: Fraction


class Tableau:
    __slots__ = ("shape", "rows", "_hash", "_l")

    def __init__(self, shape: Shape, rows: Sequence[Sequence[RationalLike]]):
        rows_q = tuple(tuple(Q(x) for x in row) for row in rows)
        if len(rows_q) != shape.total:
            raise ValueError(f"{shape} tableau needs {shape.total} rows, got {len(rows_q)}")
        for k, row in enumerate(rows_q, 1):
            if len(row) != k:
                raise ValueError(f"row {k} must have {k} entries, got {len(row)}")
        self.shape = shape
        self.rows = rows_q
        self._hash = hash((shape, rows_q))
        self._l = None

    @classmethod
    def _raw(cls, shape: Shape, rows: tuple[tuple[Fraction, ...], ...]) -> "Tableau":
        t = object.__new__(cls)
        t.shape = shape
        t.rows = rows
        t._hash = hash((shape, rows))
        t._l = None
        return t

    @classmethod
    def from_top_down(cls, shape: Shape, rows: Sequence[Sequence[RationalLike]]) -> "Tableau":
        """Build from rows listed top row first, as the pattern is usually drawn."""
        return cls(shape, list(reversed(list(rows))))

    @classmethod
    def from_l(cls, shape: Shape, lrows: Sequence[Sequence[RationalLike]]) -> "Tableau":
        m = shape.m
        return cls(shape, [[lambda_coordinate(Q(x), i, m) for i, x in enumerate(row, 1)] for row in lrows])

    @classmethod
    def highest(cls, weight: Weight, shape: Shape) -> "Tableau":
        """The tableau of the highest weight vector.

        Every row is the truncation of the weight except that the even entries of
        rows m..m+n-1 copy the weight (all theta = 0)."""
        lam = weight.entries
        rows = []
        for k in range(1, shape.total + 1):
            rows.append([lam[i - 1] for i in range(1, k + 1)])
        return cls(shape, rows)

    # -- views ---------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tableau):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self) -> tuple:
        """Canonical order: top row first, left to right."""
        return tuple(x for row in reversed(self.rows) for x in row)

    def __lt__(self, other: "Tableau") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        body = " / ".join(",".join(fmt_all(row)) for row in reversed(self.rows))
        return f"Tableau({self.shape}: {body})"

    def _check(self, k: int, i: int) -> None:
        if not (1 <= k <= self.shape.total and 1 <= i <= k):
            raise IndexError(f"entry ({k},{i}) out of range for {self.shape}")

    def lam(self, k: int, i: int) -> Fraction:
        self._check(k, i)
        return self.rows[k - 1][i - 1]

    def l(self, k: int, i: int) -> Fraction:
        self._check(k, i)
        return l_coordinate(self.rows[k - 1][i - 1], i, self.shape.m)

    def l_rows(self) -> tuple[tuple[Fraction, ...], ...]:
        if self._l is None:
            m = self.shape.m
            self._l = tuple(tuple(l_coordinate(x, i, m) for i, x in enumerate(row, 1)) for row in self.rows)
        return self._l

    @property
    def top(self) -> tuple[Fraction, ...]:
        return self.rows[-1]

    def weight(self) -> Weight:
        return Weight(self.top)

    def theta(self, k: int, i: int) -> Fraction:
        m, N = self.shape.m, self.shape.total
        if not (m <= k <= N - 1 and 1 <= i <= m):
            raise IndexError(f"theta({k},{i}) needs {m} <= k <= {N - 1} and 1 <= i <= {m}")
        return self.rows[k][i - 1] - self.rows[k - 1][i - 1]

    def thetas(self) -> Iterator[ThetaValue]:
        m, N = self.shape.m, self.shape.total
        for k in range(m, N):
            for i in range(1, m + 1):
                yield ThetaValue(k, i, self.theta(k, i))

    def h_eigenvalue(self, k: int) -> Fraction:
        if not 1 <= k <= self.shape.total:
            raise IndexError(f"h index {k} out of range")
        upper = sum(self.rows[k - 1], Fraction(0))
        lower = sum(self.rows[k - 2], Fraction(0)) if k > 1 else Fraction(0)
        return upper - lower

    def weight_tuple(self) -> tuple[Fraction, ...]:
        return tuple(self.h_eigenvalue(k) for k in range(1, self.shape.total + 1))

    # -- shifts --------------------------------------------------------------

    def shifted(self, k: int, i: int, delta: RationalLike) -> "Tableau":
        """Copy with lam_{ki} replaced by lam_{ki} + delta (top row allowed)."""
        self._check(k, i)
        rows = list(self.rows)
        row = list(rows[k - 1])
        row[i - 1] = row[i - 1] + delta
        rows[k - 1] = tuple(row)
        return Tableau._raw(self.shape, tuple(rows))

    def apply_shift(self, s: Shift) -> "Tableau":
        if s.k >= self.shape.total:
            raise IndexError("the top row is never shifted")
        self._check(s.k, s.i)
        return self.shifted(s.k, s.i, s.sign)

    def with_rows(self, rows: Sequence[Sequence[Fraction]]) -> "Tableau":
        return Tableau(self.shape, rows)

    def to_json(self) -> dict:
        return {"m": self.shape.m, "n": self.shape.n, "rows": [fmt_all(row) for row in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "Tableau":
        return cls(Shape(int(data["m"]), int(data["n"])), data["rows"])


def l_value(t: Tableau, k: int, i: int) -> Fraction:
    return t.l(k, i)


def theta(t: Tableau, k: int, i: int) -> Fraction:
    return t.theta(k, i)


def apply_shift(t: Tableau, s: Shift) -> Tableau:
    return t.apply_shift(s)


def h_eigenvalue(t: Tableau, k: int) -> Fraction:
    return t.h_eigenvalue(k)
