"""Quantum Berezinian: factored eigenvalues on tableaux and the truncated operator series."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .algebra import BasisElement, parity
from .linalg import SparseMatrix
from .rational import fmt
from .tableau import Tableau


@dataclass(frozen=True)
class BerezinianSeries:
    """prod_a (1 + t a) / prod_b (1 + t b), kept factored (multisets sorted)."""

    numerator: tuple[Fraction, ...]
    denominator: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "numerator", tuple(sorted(self.numerator)))
        object.__setattr__(self, "denominator", tuple(sorted(self.denominator)))

    def reduced(self) -> "BerezinianSeries":
        """Cancel common factors, giving a canonical form of the rational function."""
        num = list(self.numerator)
        den = []
        for b in self.denominator:
            if b in num:
                num.remove(b)
            else:
                den.append(b)
        return BerezinianSeries(tuple(num), tuple(den))

    def coefficients(self, order: int) -> list[Fraction]:
        """Taylor coefficients of t^0..t^order."""
        out = [Fraction(1)] + [Fraction(0)] * order
        for a in self.numerator:
            for r in range(order, 0, -1):
                out[r] += a * out[r - 1]
        for b in self.denominator:
            # multiply by 1/(1+tb) = sum (-b t)^r, i.e. out[r] -= b*out[r-1] in place
            for r in range(1, order + 1):
                out[r] -= b * out[r - 1]
        return out

    def __str__(self) -> str:
        num = "".join(f"(1+{fmt(a)}t)" for a in self.numerator) or "1"
        if not self.denominator:
            return num
        den = "".join(f"(1+{fmt(b)}t)" for b in self.denominator)
        return f"{num}/{den}"

    def to_json(self) -> dict:
        return {"numerator": [fmt(a) for a in self.numerator], "denominator": [fmt(b) for b in self.denominator]}


def berezinian_eigenvalue(k: int, t: Tableau) -> BerezinianSeries:
    m, N = t.shape.m, t.shape.total
    if not 1 <= k <= N:
        raise IndexError(f"row {k} out of range")
    row = t.l_rows()[k - 1]
    if k <= m:
        return BerezinianSeries(tuple(row))
    return BerezinianSeries(tuple(row[:m]), tuple(row[m:]))


def eigenvalue_tuple(t: Tableau) -> tuple[BerezinianSeries, ...]:
    return tuple(berezinian_eigenvalue(k, t).reduced() for k in range(1, t.shape.total + 1))


def highest_weight_scalar(weight, shape) -> BerezinianSeries:
    """The scalar by which B(t) acts on L(lambda)."""
    from .algebra import weight_to_l

    x = weight_to_l(weight, shape).entries
    return BerezinianSeries(tuple(x[: shape.m]), tuple(x[shape.m :]))


# --- operator series -------------------------------------------------------------------

Series = list  # list of SparseMatrix, index = power of t


def _mul(a: Series, b: Series, order: int, size: int) -> Series:
    out = [SparseMatrix(size, size) for _ in range(order + 1)]
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b[: order + 1 - i]):
            if not y.is_zero():
                out[i + j] = out[i + j] + x @ y
    return out


def _add(a: Series, b: Series, scale=1) -> Series:
    return [x + y * scale for x, y in zip(a, b)]


def berezinian_operator_truncated(M, order: int, rank: int | None = None) -> list[SparseMatrix]:
    """Coefficient matrices of B(t) mod t^(order+1) on a finite module.

    With ``rank = k`` the Berezinian of the subalgebra on indices 1..k is used
    (gl(k) for k <= m, gl(m|k-m) otherwise), whose eigenvalues are B_k(t).
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    shape = M.shape
    m = shape.m
    k = shape.total if rank is None else rank
    mm, nn = (k, 0) if k <= m else (m, k - m)
    size = len(M.basis)
    ident = SparseMatrix.identity(size)
    zero = SparseMatrix(size, size)
    if order == 0:
        return [ident]
    idx = range(1, mm + nn + 1)

    hat = {}
    for i in idx:
        for j in idx:
            sign = -1 if parity(j, shape) else 1
            hat[(i, j)] = M.matrix_of(BasisElement(i, j)) * sign

    def factor_entry(i: int, j: int, c: int) -> Series:
        """(1 + t(E^ - c))_{ij} as a series."""
        first = hat[(i, j)] - (ident * c if i == j else zero)
        return [ident if i == j else zero, first] + [zero] * (order - 1)

    def inverse_entries(c: int) -> dict:
        """Entries of (1 + t(E^ - c))^{-1} = sum_r (-t)^r X^r, X = E^ - c."""
        X = {(i, j): hat[(i, j)] - (ident * c if i == j else zero) for i in idx for j in idx}
        power = {(i, j): (ident if i == j else zero) for i in idx for j in idx}
        series = {key: [value] + [zero] * order for key, value in power.items()}
        for r in range(1, order + 1):
            power = {
                (i, j): _sum(power[(i, q)] @ X[(q, j)] for q in idx) for i in idx for j in idx
            }
            sign = -1 if r % 2 else 1
            for key, value in power.items():
                series[key][r] = value * sign
        return series

    even_part = [zero] * (order + 1)
    for sigma in permutations(range(1, mm + 1)):
        term = [ident] + [zero] * order
        for a in range(1, mm + 1):
            term = _mul(term, factor_entry(sigma[a - 1], a, a - 1), order, size)
        even_part = _add(even_part, term, _perm_sign(sigma))
    if mm == 0:
        even_part = [ident] + [zero] * order

    if nn == 0:
        return even_part
    odd_part = [zero] * (order + 1)
    inverses = {b: inverse_entries(mm - b) for b in range(1, nn + 1)}
    for tau in permutations(range(1, nn + 1)):
        term = [ident] + [zero] * order
        for b in range(1, nn + 1):
            term = _mul(term, inverses[b][(mm + b, mm + tau[b - 1])], order, size)
        odd_part = _add(odd_part, term, _perm_sign(tau))
    return _mul(even_part, odd_part, order, size)


def _sum(mats) -> SparseMatrix:
    mats = list(mats)
    out = mats[0]
    for x in mats[1:]:
        out = out + x
    return out


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign
