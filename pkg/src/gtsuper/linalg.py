"""Exact sparse linear algebra over Q.

Matrices are stored row-wise as ``{row: {col: Fraction}}`` without explicit
zeros.  Subspace computations use fraction-free (integer) elimination.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator, Mapping, Sequence


class SparseMatrix:
    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: dict[int, dict[int, Fraction]] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows: dict[int, dict[int, Fraction]] = rows if rows is not None else {}

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "SparseMatrix":
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, size: int) -> "SparseMatrix":
        return cls(size, size, {i: {i: Fraction(1)} for i in range(size)})

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries: Iterable[tuple[int, int, Fraction]]) -> "SparseMatrix":
        out = cls(nrows, ncols)
        for r, c, v in entries:
            out.add_entry(r, c, v)
        return out

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[Mapping[int, Fraction]]) -> "SparseMatrix":
        out = cls(nrows, len(columns))
        for c, col in enumerate(columns):
            for r, v in col.items():
                out.add_entry(r, c, v)
        return out

    @classmethod
    def diagonal(cls, values: Sequence[Fraction]) -> "SparseMatrix":
        return cls.from_entries(len(values), len(values), ((i, i, v) for i, v in enumerate(values)))

    def add_entry(self, r: int, c: int, v: Fraction) -> None:
        if not v:
            return
        row = self.rows.setdefault(r, {})
        total = row.get(c, 0) + v
        if total:
            row[c] = total
        else:
            del row[c]
            if not row:
                del self.rows[r]

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        r, c = key
        return self.rows.get(r, {}).get(c, Fraction(0))

    def entries(self) -> Iterator[tuple[int, int, Fraction]]:
        for r in sorted(self.rows):
            row = self.rows[r]
            for c in sorted(row):
                yield r, c, row[c]

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self.rows.values())

    def is_zero(self) -> bool:
        return not self.rows

    def copy(self) -> "SparseMatrix":
        return SparseMatrix(self.nrows, self.ncols, {r: dict(row) for r, row in self.rows.items()})

    def _check_same(self, other: "SparseMatrix") -> None:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError(f"shape mismatch {self.nrows}x{self.ncols} vs {other.nrows}x{other.ncols}")

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._check_same(other)
        out = self.copy()
        for r, row in other.rows.items():
            for c, v in row.items():
                out.add_entry(r, c, v)
        return out

    def __neg__(self) -> "SparseMatrix":
        return self * -1

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def __mul__(self, scalar) -> "SparseMatrix":
        if not scalar:
            return SparseMatrix(self.nrows, self.ncols)
        return SparseMatrix(
            self.nrows, self.ncols, {r: {c: v * scalar for c, v in row.items()} for r, row in self.rows.items()}
        )

    __rmul__ = __mul__

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError("inner dimensions differ")
        out: dict[int, dict[int, Fraction]] = {}
        brows = other.rows
        for r, row in self.rows.items():
            acc: dict[int, Fraction] = {}
            for k, a in row.items():
                brow = brows.get(k)
                if not brow:
                    continue
                for c, b in brow.items():
                    acc[c] = acc.get(c, 0) + a * b
            acc = {c: v for c, v in acc.items() if v}
            if acc:
                out[r] = acc
        return SparseMatrix(self.nrows, other.ncols, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.nrows, self.ncols) == (other.nrows, other.ncols) and self.rows == other.rows

    def apply(self, vec: Mapping[int, Fraction]) -> dict[int, Fraction]:
        """Matrix times a sparse column vector."""
        out: dict[int, Fraction] = {}
        cols = self.columns()
        for k, a in vec.items():
            for r, b in cols.get(k, {}).items():
                out[r] = out.get(r, 0) + a * b
        return {r: v for r, v in out.items() if v}

    def columns(self) -> dict[int, dict[int, Fraction]]:
        cols: dict[int, dict[int, Fraction]] = {}
        for r, row in self.rows.items():
            for c, v in row.items():
                cols.setdefault(c, {})[r] = v
        return cols

    def column(self, c: int) -> dict[int, Fraction]:
        return {r: row[c] for r, row in self.rows.items() if c in row}

    def is_diagonal(self) -> bool:
        return all(set(row) == {r} for r, row in self.rows.items())

    def diagonal_values(self) -> list[Fraction]:
        return [self[i, i] for i in range(min(self.nrows, self.ncols))]

    def to_dense(self) -> list[list[Fraction]]:
        dense = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for r, c, v in self.entries():
            dense[r][c] = v
        return dense

    def __repr__(self) -> str:
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz})"


def supercommutator(x: SparseMatrix, y: SparseMatrix, sign: int) -> SparseMatrix:
    """x y - sign * y x."""
    return x @ y - (y @ x) * sign


# --- fraction-free subspace arithmetic --------------------------------------


def _primitive(vec: Mapping[int, Fraction]) -> dict[int, int]:
    """Scale a rational vector to a primitive integer vector with positive pivot."""
    if not vec:
        return {}
    den = 1
    for v in vec.values():
        den = lcm(den, Fraction(v).denominator)
    ints = {k: int(Fraction(v) * den) for k, v in vec.items() if v}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    lead = min(ints)
    if ints[lead] < 0:
        g = -g
    return {k: v // g for k, v in ints.items()}


class Subspace:
    """Row-echelon basis of a subspace of Q^dim, kept as primitive integer rows."""

    def __init__(self, dim: int):
        self.dim = dim
        self.pivots: dict[int, dict[int, int]] = {}

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: Mapping[int, Fraction]) -> dict[int, int]:
        """Fraction-free elimination of ``vec`` against the current basis."""
        v = _primitive(vec)
        while v:
            changed = False
            for p in sorted(v):
                row = self.pivots.get(p)
                if row is None:
                    continue
                a, b = row[p], v[p]
                # v <- a*v - b*row keeps integers; then strip content.
                merged: dict[int, int] = {k: a * x for k, x in v.items()}
                for k, x in row.items():
                    merged[k] = merged.get(k, 0) - b * x
                v = _primitive({k: x for k, x in merged.items() if x})
                changed = True
                break
            if not changed:
                break
        return v

    def add(self, vec: Mapping[int, Fraction]) -> bool:
        v = self.reduce(vec)
        if not v:
            return False
        self.pivots[min(v)] = v
        return True

    def contains(self, vec: Mapping[int, Fraction]) -> bool:
        return not self.reduce(vec)

    def basis(self) -> list[dict[int, int]]:
        return [self.pivots[p] for p in sorted(self.pivots)]


def generated_subspace(start: Iterable[Mapping[int, Fraction]], operators: Sequence[SparseMatrix], dim: int) -> Subspace:
    """Smallest subspace containing ``start`` and stable under ``operators``."""
    space = Subspace(dim)
    queue: list[dict[int, Fraction]] = []
    for vec in start:
        if space.add(vec):
            queue.append(dict(vec))
    cols = [op.columns() for op in operators]
    while queue:
        vec = queue.pop()
        for op_cols in cols:
            image: dict[int, Fraction] = {}
            for k, a in vec.items():
                for r, b in op_cols.get(k, {}).items():
                    image[r] = image.get(r, 0) + a * b
            image = {r: x for r, x in image.items() if x}
            if image and space.add(image):
                queue.append(image)
        if len(space) == dim:
            break
    return space


def rank(vectors: Iterable[Mapping[int, Fraction]], dim: int) -> int:
    space = Subspace(dim)
    for v in vectors:
        space.add(v)
    return len(space)


def joint_kernel(operators: Sequence[SparseMatrix], dim: int) -> list[dict[int, Fraction]]:
    """Basis of the common null space of ``operators`` (exact, reduced echelon)."""
    rows: list[dict[int, Fraction]] = []
    for op in operators:
        rows.extend(dict(row) for row in op.rows.values())
    return nullspace(rows, dim)


def nullspace(rows: list[dict[int, Fraction]], dim: int) -> list[dict[int, Fraction]]:
    """Null space of the matrix whose rows are given (Gauss-Jordan over Q)."""
    pivot_rows: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        v = {k: Fraction(x) for k, x in row.items() if x}
        for p, prow in pivot_rows.items():
            if p in v:
                c = v[p]
                for k, x in prow.items():
                    nv = v.get(k, 0) - c * x
                    if nv:
                        v[k] = nv
                    else:
                        v.pop(k, None)
        if not v:
            continue
        p = min(v)
        c = v[p]
        v = {k: x / c for k, x in v.items()}
        for q, qrow in pivot_rows.items():
            if p in qrow:
                cq = qrow[p]
                for k, x in v.items():
                    nv = qrow.get(k, 0) - cq * x
                    if nv:
                        qrow[k] = nv
                    else:
                        qrow.pop(k, None)
        pivot_rows[p] = v
    free = [c for c in range(dim) if c not in pivot_rows]
    basis = []
    for f in free:
        vec = {f: Fraction(1)}
        for p, prow in pivot_rows.items():
            if f in prow:
                vec[p] = -prow[f]
        basis.append(vec)
    return basis
