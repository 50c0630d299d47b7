"""Structure of the Lie superalgebra gl(m|n).

Indices are 1-based throughout: E_{ij} with 1 <= i, j <= m+n and parity
0 for i <= m, 1 for i > m.  The Chevalley-type generators are e_i = E_{i,i+1},
f_i = E_{i+1,i} (1 <= i < m+n) and h_j = E_{jj}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence, TypeVar, Union

from .rational import Q, RationalLike, fmt, is_integer


@dataclass(frozen=True, order=True)
class Shape:
    m: int
    n: int

    def __post_init__(self) -> None:
        if not (isinstance(self.m, int) and isinstance(self.n, int)):
            raise TypeError("shape components must be integers")
        if self.m < 1 or self.n < 1:
            raise ValueError(f"shape requires m, n >= 1, got ({self.m}, {self.n})")

    @property
    def total(self) -> int:
        return self.m + self.n

    def __str__(self) -> str:
        return f"gl({self.m}|{self.n})"

    @classmethod
    def parse(cls, text: str) -> "Shape":
        parts = [p.strip() for p in text.replace("|", ",").split(",")]
        if len(parts) != 2:
            raise ValueError(f"shape must look like 'm,n', got {text!r}")
        return cls(int(parts[0]), int(parts[1]))


def parity(i: int, shape: Shape) -> int:
    if not 1 <= i <= shape.total:
        raise IndexError(f"index {i} out of range for {shape}")
    return 0 if i <= shape.m else 1


@dataclass(frozen=True, order=True)
class BasisElement:
    i: int
    j: int

    def check(self, shape: Shape) -> "BasisElement":
        parity(self.i, shape)
        parity(self.j, shape)
        return self

    def parity(self, shape: Shape) -> int:
        return parity(self.i, shape) ^ parity(self.j, shape)

    def __str__(self) -> str:
        return f"E{self.i},{self.j}"


E = BasisElement

# A linear combination of basis elements, {E: coefficient}, zeros omitted.
Combination = dict


def bracket(a: BasisElement, b: BasisElement, shape: Shape) -> dict[BasisElement, Fraction]:
    """Super bracket [E_ij, E_kl] = d_kj E_il - (-1)^{|a||b|} d_il E_kj."""
    a.check(shape)
    b.check(shape)
    sign = -1 if a.parity(shape) and b.parity(shape) else 1
    out: dict[BasisElement, Fraction] = {}
    if b.i == a.j:
        key = E(a.i, b.j)
        out[key] = out.get(key, Fraction(0)) + 1
    if a.i == b.j:
        key = E(b.i, a.j)
        out[key] = out.get(key, Fraction(0)) - sign
    return {k: v for k, v in out.items() if v != 0}


def bracket_combination(x: dict, y: dict, shape: Shape) -> dict[BasisElement, Fraction]:
    """Bilinear extension of :func:`bracket` to homogeneous combinations."""
    out: dict[BasisElement, Fraction] = {}
    for a, ca in x.items():
        for b, cb in y.items():
            for c, cc in bracket(a, b, shape).items():
                out[c] = out.get(c, Fraction(0)) + ca * cb * cc
    return {k: v for k, v in out.items() if v != 0}


# --- weights and l-coordinates -------------------------------------------


@dataclass(frozen=True)
class Weight:
    entries: tuple[Fraction, ...]

    def __init__(self, entries: Sequence[RationalLike]):
        object.__setattr__(self, "entries", tuple(Q(x) for x in entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[i]


@dataclass(frozen=True)
class LVector:
    entries: tuple[Fraction, ...]

    def __init__(self, entries: Sequence[RationalLike]):
        object.__setattr__(self, "entries", tuple(Q(x) for x in entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[i]


def weight_to_json(w: Weight, shape: Shape) -> dict:
    return {"m": shape.m, "n": shape.n, "lambda": [fmt(x) for x in w.entries]}


def weight_from_json(data: dict) -> tuple[Weight, Shape]:
    shape = Shape(int(data["m"]), int(data["n"]))
    w = Weight([Q(x) for x in data["lambda"]])
    _check_length(w.entries, shape)
    return w, shape


def _check_length(values: Sequence, shape: Shape) -> None:
    if len(values) != shape.total:
        raise ValueError(f"expected {shape.total} entries for {shape}, got {len(values)}")


def l_coordinate(lam: Fraction, i: int, m: int) -> Fraction:
    """Single-entry conversion; ``i`` is the (1-based) column."""
    return lam - i + 1 if i <= m else -lam + i - 2 * m


def lambda_coordinate(l: Fraction, i: int, m: int) -> Fraction:
    return l + i - 1 if i <= m else -l + i - 2 * m


def weight_to_l(w: Weight, shape: Shape) -> LVector:
    _check_length(w.entries, shape)
    return LVector([l_coordinate(x, i, shape.m) for i, x in enumerate(w.entries, 1)])


def l_to_weight(l: LVector, shape: Shape) -> Weight:
    _check_length(l.entries, shape)
    return Weight([lambda_coordinate(x, i, shape.m) for i, x in enumerate(l.entries, 1)])


def is_typical(w: Weight, shape: Shape) -> bool:
    l = weight_to_l(w, shape).entries
    m = shape.m
    return all(l[i] != l[j] for i in range(m) for j in range(m, shape.total))


def in_step_interval(x: Fraction, a: Fraction, b: Fraction) -> bool:
    """Membership in [a; b] = {a + s : 0 <= s <= b - a, s integer}.

    The interval is empty unless b - a is a nonnegative integer.
    """
    span = b - a
    if not is_integer(span) or span < 0:
        return False
    s = x - a
    return is_integer(s) and 0 <= s <= span


def is_essentially_typical(w: Weight, shape: Shape) -> bool:
    l = weight_to_l(w, shape).entries
    m = shape.m
    lo, hi = l[m], l[-1]
    return not any(in_step_interval(l[i], lo, hi) for i in range(m))


def is_dominant(w: Weight, shape: Shape) -> bool:
    _check_length(w.entries, shape)
    lam = w.entries
    for i in range(1, shape.total):
        if i == shape.m:
            continue
        d = lam[i - 1] - lam[i]
        if not (is_integer(d) and d >= 0):
            return False
    return True


def is_covariant_weight(w: Weight, shape: Shape) -> bool:
    """Highest weights of covariant tensor modules (nonnegative integral, dominant,
    and lambda_m >= #{j > m : lambda_j > 0})."""
    lam = w.entries
    if not all(is_integer(x) and x >= 0 for x in lam):
        return False
    if not is_dominant(w, shape):
        return False
    positive_odd = sum(1 for x in lam[shape.m:] if x > 0)
    return lam[shape.m - 1] >= positive_odd


# --- relation expressions --------------------------------------------------


@dataclass(frozen=True)
class Gen:
    """A Chevalley generator: kind in {'e', 'f', 'h'}."""

    kind: str
    index: int

    def parity(self, shape: Shape) -> int:
        return 1 if self.kind in "ef" and self.index == shape.m else 0

    def element(self) -> BasisElement:
        if self.kind == "e":
            return E(self.index, self.index + 1)
        if self.kind == "f":
            return E(self.index + 1, self.index)
        return E(self.index, self.index)

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


@dataclass(frozen=True)
class Bracket:
    left: "Node"
    right: "Node"

    def parity(self, shape: Shape) -> int:
        return self.left.parity(shape) ^ self.right.parity(shape)

    def __str__(self) -> str:
        return f"[{self.left},{self.right}]"


Node = Union[Gen, Bracket]


@dataclass(frozen=True)
class Relation:
    """A formal linear combination of bracket trees that must vanish."""

    family: str
    terms: tuple[tuple[Fraction, Node], ...]

    def __str__(self) -> str:
        parts = []
        for c, node in self.terms:
            if c == 1:
                parts.append(f"+{node}")
            elif c == -1:
                parts.append(f"-{node}")
            else:
                parts.append(f"{'+' if c > 0 else '-'}{fmt(abs(c))}*{node}")
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text


def parse_node(text: str) -> Node:
    """Inverse of ``str`` on bracket trees, e.g. ``[e1,[e1,e2]]``."""
    node, rest = _parse_node(text.replace(" ", ""))
    if rest:
        raise ValueError(f"trailing text {rest!r} in {text!r}")
    return node


def _parse_node(text: str) -> tuple[Node, str]:
    if text.startswith("["):
        left, rest = _parse_node(text[1:])
        if not rest.startswith(","):
            raise ValueError(f"expected ',' at {rest!r}")
        right, rest = _parse_node(rest[1:])
        if not rest.startswith("]"):
            raise ValueError(f"expected ']' at {rest!r}")
        return Bracket(left, right), rest[1:]
    match = re.match(r"([efh])(\d+)", text)
    if not match:
        raise ValueError(f"expected a generator at {text!r}")
    return Gen(match.group(1), int(match.group(2))), text[match.end():]


def parse_relation(text: str, family: str = "") -> Relation:
    """Inverse of ``str(Relation)``: signed terms ``[+-][coef*]tree``."""
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty relation")
    if text[0] not in "+-":
        text = "+" + text
    terms = []
    while text:
        sign, text = (1 if text[0] == "+" else -1), text[1:]
        coef = Fraction(1)
        match = re.match(r"(\d+(?:/\d+)?)\*", text)
        if match:
            coef = Fraction(match.group(1))
            text = text[match.end():]
        node, text = _parse_node(text)
        terms.append((sign * coef, node))
        if text and text[0] not in "+-":
            raise ValueError(f"expected a sign at {text!r}")
    return Relation(family, tuple(terms))


def relation_to_json(rel: Relation) -> dict:
    return {"family": rel.family, "relation": str(rel)}


def relation_from_json(data: dict) -> Relation:
    return parse_relation(data["relation"], str(data["family"]))


@dataclass(frozen=True)
class LieWord:
    """Ordered product of scaled basis elements in U(g)."""

    factors: tuple[tuple[BasisElement, Fraction], ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise ValueError("a LieWord needs at least one factor")

    @classmethod
    def of(cls, *elements: BasisElement, scalar: RationalLike = 1) -> "LieWord":
        factors = [(el, Fraction(1)) for el in elements]
        factors[0] = (factors[0][0], Q(scalar))
        return cls(tuple(factors))

    @property
    def scalar(self) -> Fraction:
        out = Fraction(1)
        for _, c in self.factors:
            out *= c
        return out


def _rel(family: str, *terms: tuple[RationalLike, Node]) -> Relation:
    return Relation(family, tuple((Q(c), node) for c, node in terms))


def presentation_relations(shape: Shape) -> list[Relation]:
    """Every instance of the ten relation families of the generator presentation."""
    m, N = shape.m, shape.total
    e = lambda i: Gen("e", i)  # noqa: E731
    f = lambda i: Gen("f", i)  # noqa: E731
    h = lambda i: Gen("h", i)  # noqa: E731
    simple = range(1, N)
    out: list[Relation] = []
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            out.append(_rel("cartan", (1, Bracket(h(i), h(j)))))
    for i in range(1, N + 1):
        for j in simple:
            c = int(i == j) - int(i == j + 1)
            if c:
                out.append(_rel("h-e", (1, Bracket(h(i), e(j))), (-c, e(j))))
            else:
                out.append(_rel("h-e", (1, Bracket(h(i), e(j)))))
    for i in range(1, N + 1):
        for j in simple:
            c = int(i == j) - int(i == j + 1)
            if c:
                out.append(_rel("h-f", (1, Bracket(h(i), f(j))), (c, f(j))))
            else:
                out.append(_rel("h-f", (1, Bracket(h(i), f(j)))))
    for i in simple:
        for j in simple:
            if i != j:
                out.append(_rel("e-f", (1, Bracket(e(i), f(j)))))
    for i in simple:
        if i != m:
            out.append(_rel("even-ef", (1, Bracket(e(i), f(i))), (-1, h(i)), (1, h(i + 1))))
    out.append(_rel("odd-ef", (1, Bracket(e(m), f(m))), (-1, h(m)), (-1, h(m + 1))))
    for i in simple:
        for j in simple:
            if abs(i - j) > 1:
                out.append(_rel("distant", (1, Bracket(e(i), e(j)))))
                out.append(_rel("distant", (1, Bracket(f(i), f(j)))))
    out.append(_rel("odd-square", (1, Bracket(e(m), e(m)))))
    out.append(_rel("odd-square", (1, Bracket(f(m), f(m)))))
    for i in simple:
        if i == m:
            continue
        for j in (i - 1, i + 1):
            if 1 <= j < N:
                out.append(_rel("serre", (1, Bracket(e(i), Bracket(e(i), e(j))))))
                out.append(_rel("serre", (1, Bracket(f(i), Bracket(f(i), f(j))))))
    if 1 <= m - 1 and m + 1 < N:
        for a, b in ((m - 1, m + 1), (m + 1, m - 1)):
            out.append(_rel("quartic-serre", (1, Bracket(e(m), Bracket(e(a), Bracket(e(m), e(b)))))))
            out.append(_rel("quartic-serre", (1, Bracket(f(m), Bracket(f(a), Bracket(f(m), f(b)))))))
    return out


T = TypeVar("T")


def evaluate(
    node: Node,
    shape: Shape,
    generator: Callable[[Gen], T],
    combine: Callable[[T, T, int], T],
) -> T:
    """Fold a bracket tree into operators.

    ``combine(x, y, sign)`` must return x*y - sign*y*x.
    """
    if isinstance(node, Gen):
        return generator(node)
    sign = -1 if node.left.parity(shape) and node.right.parity(shape) else 1
    return combine(
        evaluate(node.left, shape, generator, combine),
        evaluate(node.right, shape, generator, combine),
        sign,
    )


def expand_words(node: Node, shape: Shape) -> list[tuple[int, tuple[Gen, ...]]]:
    """Expand a bracket tree into signed words of generators (left acts last)."""
    if isinstance(node, Gen):
        return [(1, (node,))]
    left = expand_words(node.left, shape)
    right = expand_words(node.right, shape)
    sign = -1 if node.left.parity(shape) and node.right.parity(shape) else 1
    out = [(a * b, wa + wb) for a, wa in left for b, wb in right]
    out += [(-sign * a * b, wb + wa) for a, wa in left for b, wb in right]
    return out


def defining_matrix(el: BasisElement, shape: Shape):
    from .linalg import SparseMatrix

    el.check(shape)
    return SparseMatrix.from_entries(shape.total, shape.total, [(el.i - 1, el.j - 1, Fraction(1))])


def relation_in_defining_rep(rel: Relation, shape: Shape):
    """The (m+n)x(m+n) matrix obtained by substituting e_i, f_i, h_j."""
    from .linalg import SparseMatrix

    N = shape.total

    def gen(g: Gen):
        return defining_matrix(g.element(), shape)

    def combine(x, y, sign):
        return x @ y - (y @ x) * sign

    total = SparseMatrix.zeros(N, N)
    for c, node in rel.terms:
        total = total + evaluate(node, shape, gen, combine) * c
    return total


def relation_family_counts(shape: Shape) -> dict[str, int]:
    counts: dict[str, int] = {}
    for r in presentation_relations(shape):
        counts[r.family] = counts.get(r.family, 0) + 1
    return counts


def iter_basis(shape: Shape) -> Iterator[BasisElement]:
    for i in range(1, shape.total + 1):
        for j in range(1, shape.total + 1):
            yield E(i, j)
