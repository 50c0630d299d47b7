"""Independent reference enumerations, written directly from the classical basis descriptions."""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import prod


def weyl_dimension(row) -> int:
    """Dimension of the irreducible gl(k)-module with dominant integral highest weight ``row``."""
    k = len(row)
    num = prod(row[i] - row[j] + j - i for i in range(k) for j in range(i + 1, k))
    den = prod(j - i for i in range(k) for j in range(i + 1, k))
    assert num % den == 0
    return num // den


def hook_dimension(partition, k: int) -> int:
    """gl(k) dimension of a partition via the hook-content formula (zero if too many parts)."""
    parts = [p for p in partition if p > 0]
    if len(parts) > k:
        return 0
    cols = [sum(1 for p in parts if p > j) for j in range(parts[0])] if parts else []
    num, den = 1, 1
    for i, p in enumerate(parts):
        for j in range(p):
            num *= k + j - i
            den *= (p - j - 1) + (cols[j] - i - 1) + 1
    return num // den


def _betweenness(upper):
    """All rows x with upper[i] >= x[i] >= upper[i+1] (integral entries)."""
    ranges = [range(int(upper[i + 1]), int(upper[i]) + 1) for i in range(len(upper) - 1)]
    return [tuple(Fraction(v) for v in xs) for xs in product(*ranges)]


def _gl_patterns(top):
    """Classical Gelfand-Tsetlin patterns below an integral dominant row (rows bottom-up, top excluded)."""
    if len(top) == 1:
        return [[]]
    out = []
    for row in _betweenness(top):
        for below in _gl_patterns(row):
            out.append(below + [row])
    return out


def palev_basis(m: int, n: int, lam) -> set:
    """Essentially typical basis: theta in {0,1}, dominant even rows, betweenness elsewhere.

    Returns tableaux as tuples of rows (bottom row first) in lambda coordinates.
    """
    lam = tuple(Fraction(x) for x in lam)
    N = m + n
    out = set()
    for thetas in product((0, 1), repeat=m * n):
        # rows m..N-1 even parts, from the top row down
        evens = {N: lam[:m]}
        for k in range(N - 1, m - 1, -1):
            r = k - m
            evens[k] = tuple(evens[k + 1][i] - thetas[r * m + i] for i in range(m))
        if any(evens[k][i] < evens[k][i + 1] for k in range(m, N) for i in range(m - 1)):
            continue
        low = _gl_patterns(evens[m]) if m else [[]]
        odd_top = lam[m:]
        for odd in _odd_patterns(odd_top):
            for below in low:
                rows = list(below) + [evens[m]]
                for k in range(m + 1, N):
                    rows.append(evens[k] + odd[k - m - 1])
                rows.append(lam)
                out.add(tuple(rows))
    return out


def _odd_patterns(top):
    """Odd parts of rows m+1..N-1: betweenness downward from the fixed odd top entries."""
    n = len(top)
    if n <= 1:
        return [[()] * 0] if n == 1 else [[]]
    out = []
    for pattern in _gl_patterns(top):
        # _gl_patterns gives rows of lengths 1..n-1 bottom-up
        out.append([tuple(r) for r in pattern])
    return out


def classical_covariant_basis(m: int, n: int, lam) -> set:
    """Covariant tensor basis from the six classical conditions, rows bottom-up in lambda coordinates."""
    lam = tuple(Fraction(x) for x in lam)
    N = m + n
    out = set()
    for thetas in product((0, 1), repeat=m * n):
        evens = {N: lam[:m]}
        for k in range(N - 1, m - 1, -1):
            evens[k] = tuple(evens[k + 1][i] - thetas[(k - m) * m + i] for i in range(m))
        # (5) nonincreasing even parts of rows m+1..N-1, and row m dominant for the gl(m) patterns
        if any(evens[k][i] < evens[k][i + 1] for k in range(m, N) for i in range(m - 1)):
            continue
        # (4) if lambda_{m+1,m} = 0 then theta_{mm} = 0
        if m and evens[m + 1][m - 1] == 0 and evens[m + 1][m - 1] != evens[m][m - 1]:
            continue
        low = _gl_patterns(evens[m]) if m else [[]]
        for odd in _odd_patterns(lam[m:]):
            rows_up = {k: evens[k] + odd[k - m - 1] for k in range(m + 1, N)}
            rows_up[N] = lam
            # (3) lambda_{k,m} >= #{positive odd entries in row k}
            if m and any(rows_up[k][m - 1] < sum(1 for x in rows_up[k][m:] if x > 0) for k in range(m + 1, N + 1)):
                continue
            for below in low:
                rows = list(below) + [evens[m]] + [rows_up[k] for k in range(m + 1, N)] + [lam]
                out.add(tuple(rows))
    return out
