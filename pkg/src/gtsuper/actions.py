"""Closed-form action of the generators e_k, f_k, h_k on tableaux.

Each function returns the raw terms ``[(target, coefficient_thunk)]``.
Coefficients are thunks so that callers can test target membership before
evaluating a possibly singular expression.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .tableau import Tableau

Term = tuple[Tableau, Callable[[], Fraction]]


def _prod(values) -> Fraction:
    out = Fraction(1)
    for v in values:
        out *= v
    return out


def _sign(power: Fraction) -> int:
    return -1 if int(power) % 2 else 1


def raw_e(k: int, t: Tableau) -> list[Term]:
    m, N = t.shape.m, t.shape.total
    if not 1 <= k < N:
        raise IndexError(f"e_{k} undefined for {t.shape}")
    L = t.l_rows()

    def l(a: int, b: int) -> Fraction:
        return L[a - 1][b - 1]

    def th(a: int, b: int) -> Fraction:
        return l(a + 1, b) - l(a, b)

    terms: list[Term] = []
    if k < m:
        for i in range(1, k + 1):
            def coef(i=i):
                num = _prod(l(k + 1, j) - l(k, i) for j in range(1, k + 2))
                den = _prod(l(k, j) - l(k, i) for j in range(1, k + 1) if j != i)
                return -num / den
            terms.append((t.shifted(k, i, 1), coef))
    elif k == m:
        for i in range(1, m + 1):
            if th(m, i) == 0:
                continue

            def coef(i=i):
                sign = _sign(i - 1 + sum(th(m, j) for j in range(1, i)))
                num = _prod(l(m, j) - l(m, i) - 1 for j in range(1, i))
                den = _prod(l(m, j) - l(m, i) for j in range(i + 1, m + 1))
                den *= _prod(l(m + 1, j) - l(m, i) - 1 for j in range(1, m + 1) if j != i)
                return th(m, i) * sign * num / den
            terms.append((t.shifted(m, i, 1), coef))
    else:
        for i in range(1, m + 1):
            if th(k, i) == 0 or th(k - 1, i) == 1:
                continue

            def coef(i=i):
                power = sum(th(k, j) for j in range(1, i)) + sum(th(k - 1, j) for j in range(i + 1, m + 1))
                value = Fraction(_sign(power)) * th(k, i) * (1 - th(k - 1, i))
                for j in range(1, m + 1):
                    if j != i:
                        value *= (l(k, j) - l(k, i) - 1) / (l(k + 1, j) - l(k, i) - 1)
                return value
            terms.append((t.shifted(k, i, 1), coef))
        for i in range(m + 1, k + 1):
            def coef(i=i):
                value = Fraction(-1)
                for j in range(1, m + 1):
                    value *= (l(k, j) - l(k, i)) * (l(k, j) - l(k, i) + 1)
                    value /= (l(k + 1, j) - l(k, i)) * (l(k - 1, j) - l(k, i) + 1)
                value *= _prod(l(k + 1, j) - l(k, i) for j in range(m + 1, k + 2))
                value /= _prod(l(k, j) - l(k, i) for j in range(m + 1, k + 1) if j != i)
                return value
            terms.append((t.shifted(k, i, 1), coef))
    return terms


def raw_f(k: int, t: Tableau) -> list[Term]:
    m, N = t.shape.m, t.shape.total
    if not 1 <= k < N:
        raise IndexError(f"f_{k} undefined for {t.shape}")
    L = t.l_rows()

    def l(a: int, b: int) -> Fraction:
        return L[a - 1][b - 1]

    def th(a: int, b: int) -> Fraction:
        return l(a + 1, b) - l(a, b)

    terms: list[Term] = []
    if k < m:
        for i in range(1, k + 1):
            def coef(i=i):
                num = _prod(l(k - 1, j) - l(k, i) for j in range(1, k))
                den = _prod(l(k, j) - l(k, i) for j in range(1, k + 1) if j != i)
                return num / den
            terms.append((t.shifted(k, i, -1), coef))
    elif k == m:
        for i in range(1, m + 1):
            if th(m, i) == 1:
                continue

            def coef(i=i):
                sign = _sign(i - 1 + sum(th(m, j) for j in range(1, i)))
                num = (l(m, i) - l(m + 1, m + 1))
                num *= _prod(l(m, j) - l(m, i) + 1 for j in range(i + 1, m + 1))
                num *= _prod(l(m - 1, j) - l(m, i) for j in range(1, m))
                den = _prod(l(m, j) - l(m, i) for j in range(1, i))
                return (1 - th(m, i)) * sign * num / den
            terms.append((t.shifted(m, i, -1), coef))
    else:
        for i in range(1, m + 1):
            if th(k - 1, i) == 0 or th(k, i) == 1:
                continue

            def coef(i=i):
                power = sum(th(k, j) for j in range(1, i)) + sum(th(k - 1, j) for j in range(i + 1, m + 1))
                value = Fraction(_sign(power)) * th(k - 1, i) * (1 - th(k, i))
                for j in range(1, m + 1):
                    if j != i:
                        value *= (l(k, j) - l(k, i) + 1) / (l(k - 1, j) - l(k, i) + 1)
                value *= _prod(l(k + 1, j) - l(k, i) for j in range(m + 1, k + 2))
                value *= _prod(l(k - 1, j) - l(k, i) + 1 for j in range(m + 1, k))
                value /= _prod((l(k, j) - l(k, i)) * (l(k, j) - l(k, i) + 1) for j in range(m + 1, k + 1))
                return value
            terms.append((t.shifted(k, i, -1), coef))
        for i in range(m + 1, k + 1):
            def coef(i=i):
                num = _prod(l(k - 1, j) - l(k, i) for j in range(m + 1, k))
                den = _prod(l(k, j) - l(k, i) for j in range(m + 1, k + 1) if j != i)
                return num / den
            terms.append((t.shifted(k, i, -1), coef))
    return terms


def h_value(k: int, t: Tableau) -> Fraction:
    return t.h_eigenvalue(k)
