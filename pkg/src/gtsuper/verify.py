"""Executable checks of the module constructions."""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from gmpy2 import mpq

from .algebra import BasisElement, Gen, Relation, Shape, expand_words, presentation_relations
from .berezinian import eigenvalue_tuple
from .linalg import SparseMatrix, generated_subspace, joint_kernel
from .module import COVARIANT, TYPICAL, ActionError, ModuleSpace
from .rational import fmt
from .relations import is_maximal_for

PASS, FAIL, UNDECIDED = "pass", "fail", "undecided"


@dataclass
class VerificationReport:
    check: str
    shape: str
    module: str
    status: str
    witnesses: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    seconds: float = 0.0

    def __post_init__(self) -> None:
        if self.status == FAIL and not self.witnesses:
            raise ValueError("a failing report must carry a witness")

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_json(self, timing: bool = False) -> dict:
        data = {
            "check": self.check,
            "shape": self.shape,
            "module": self.module,
            "status": self.status,
            "witnesses": self.witnesses,
            "details": self.details,
        }
        if timing:
            data["seconds"] = round(self.seconds, 3)
        return data

    def dumps(self, timing: bool = False) -> str:
        return json.dumps(self.to_json(timing), sort_keys=True)


def describe(M: ModuleSpace) -> str:
    top = ",".join(fmt(x) for x in M.seed.top)
    return f"{M.mode} top=({top}) |C|={len(M.relations)}"


def _report(check: str, M: ModuleSpace, status: str, start: float, witnesses=None, **details) -> VerificationReport:
    return VerificationReport(
        check, str(M.shape), describe(M), status, witnesses or [], details, time.perf_counter() - start
    )


# --- relations -------------------------------------------------------------------------


@lru_cache(maxsize=None)
def relation_words(shape: Shape) -> tuple:
    """Each relation as a tuple of (coefficient, word) with words merged and zero terms dropped."""
    out = []
    for rel in presentation_relations(shape):
        acc: dict[tuple, Fraction] = {}
        for c, node in rel.terms:
            for sign, word in expand_words(node, shape):
                acc[word] = acc.get(word, 0) + c * sign
        out.append((rel, tuple((c, w) for w, c in sorted(acc.items(), key=lambda kv: str(kv[0])) if c)))
    return tuple(out)


@dataclass(frozen=True)
class WordPlan:
    """Relations compiled to integer-coded words, with every suffix listed shortest first."""

    gens: tuple  # code -> Gen
    suffixes: tuple  # words (tuples of codes), each after its own tail
    relations: tuple  # (Relation, ((mpq coefficient, word), ...))


@lru_cache(maxsize=None)
def word_plan(shape: Shape, selection: Optional[frozenset] = None) -> WordPlan:
    table = relation_words(shape)
    if selection is not None:
        table = tuple(entry for entry in table if str(entry[0]) in selection)
    gens: list[Gen] = []
    code: dict[Gen, int] = {}
    rels = []
    suffixes: set[tuple] = set()
    for rel, terms in table:
        coded = []
        for c, word in terms:
            w = tuple(code.setdefault(g, len(code)) for g in word)
            coded.append((mpq(c.numerator, c.denominator), w))
            for start in range(len(w)):
                suffixes.add(w[start:])
        rels.append((rel, tuple(coded)))
    gens = [None] * len(code)
    for g, i in code.items():
        gens[i] = g
    order = tuple(sorted(suffixes, key=lambda w: (len(w), w)))
    return WordPlan(tuple(gens), order, tuple(rels))


def apply_words(M: ModuleSpace, t, plan: WordPlan) -> dict[tuple, dict]:
    """Vectors w.t for every suffix word (keyed by tableau handles)."""
    vectors: dict[tuple, dict] = {(): {M.tableau_id(t): mpq(1)}}
    act = M.act_id
    gens = plan.gens
    for w in plan.suffixes:
        g = gens[w[0]]
        kind, k = g.kind, g.index
        out: dict = {}
        for i, c in vectors[w[1:]].items():
            for j, a in act(kind, k, i):
                v = out.get(j, 0) + a * c
                if v:
                    out[j] = v
                else:
                    del out[j]
        vectors[w] = out
    return vectors


def relation_residue(rel_words: tuple, vectors: dict) -> dict:
    out: dict = {}
    for c, w in rel_words:
        for j, a in vectors[w].items():
            v = out.get(j, 0) + a * c
            if v:
                out[j] = v
            else:
                del out[j]
    return out


def check_defining_relations(
    M: ModuleSpace,
    sample: Optional[Sequence] = None,
    relations: Optional[Sequence[Relation]] = None,
) -> VerificationReport:
    start = time.perf_counter()
    shape = M.shape
    plan = word_plan(shape, None if relations is None else frozenset(map(str, relations)))
    sample = list(M.basis if sample is None else sample)
    witnesses = []
    for t in sample:
        try:
            vectors = apply_words(M, t, plan)
        except ActionError as exc:
            witnesses.append({"tableau": t.to_json(), "error": str(exc)})
            continue
        for rel, terms in plan.relations:
            residue = relation_residue(terms, vectors)
            if residue:
                target, coef = min(
                    ((M.tableau_of(j), c) for j, c in residue.items()), key=lambda kv: kv[0].sort_key()
                )
                witnesses.append(
                    {"relation": str(rel), "tableau": t.to_json(), "target": target.to_json(), "coefficient": fmt(Fraction(int(coef.numerator), int(coef.denominator)))}
                )
                break
        if len(witnesses) >= 5:
            break
    status = FAIL if witnesses else PASS
    return _report(
        "relations", M, status, start, witnesses, tableaux=len(sample), relations=len(plan.relations),
        dropped_nonzero=M.drops.nonzero, dropped_singular=M.drops.singular,
    )


# --- irreducibility ------------------------------------------------------------------


def irreducibility_criterion(M: ModuleSpace, mode: str = "closure") -> bool:
    """Maximality of C for the seed, plus distinct mixed top-row values in the quasi-typical case."""
    if not is_maximal_for(M.relations, M.seed, mode, M.even_order):
        return False
    if M.mode == COVARIANT:
        return True
    m, N = M.shape.m, M.shape.total
    top = M.seed.l_rows()[-1]
    return all(top[i] != top[j] for i in range(m) for j in range(m, N))


def generator_matrices(M: ModuleSpace) -> list[SparseMatrix]:
    N = M.shape.total
    gens = [Gen(kind, k) for k in range(1, N) for kind in "ef"] + [Gen("h", k) for k in range(1, N + 1)]
    return [M.matrix_of(g) for g in gens]


def submodule_witness(M: ModuleSpace) -> Optional[tuple[int, int]]:
    """A basis tableau generating a proper submodule, as (index, dimension), or None."""
    size = len(M.basis)
    ops = generator_matrices(M)
    for idx in range(size):
        space = generated_subspace([{idx: Fraction(1)}], ops, size)
        if len(space) < size:
            return idx, len(space)
    return None


def brute_force_irreducible(M: ModuleSpace) -> bool:
    """Every basis tableau generates the whole module (tableaux are separated, so this suffices)."""
    return submodule_witness(M) is None


def check_irreducibility(M: ModuleSpace) -> VerificationReport:
    start = time.perf_counter()
    criterion = irreducibility_criterion(M)
    witness = submodule_witness(M)
    oracle = witness is None
    details = {"criterion": criterion, "oracle": oracle, "dim": len(M.basis)}
    if witness is not None:
        details["proper_submodule"] = {"generator": M.basis[witness[0]].to_json(), "dim": witness[1]}
    if criterion == oracle:
        return _report("irreducibility", M, PASS, start, **details)
    return _report("irreducibility", M, FAIL, start, [details], **details)


# --- Kac module structure ----------------------------------------------------------------


def odd_raising(shape: Shape) -> list[BasisElement]:
    m, N = shape.m, shape.total
    return [BasisElement(i, j) for i in range(1, m + 1) for j in range(m + 1, N + 1)]


def theta_zero(t) -> bool:
    return all(th.value == 0 for th in t.thetas())


def g1_invariants(M: ModuleSpace) -> dict:
    size = len(M.basis)
    kernel = joint_kernel([M.matrix_of(el) for el in odd_raising(M.shape)], size)
    zero = [i for i, t in enumerate(M.basis) if theta_zero(t)]
    support = {i for vec in kernel for i in vec}
    return {
        "basis": kernel,
        "dim": len(kernel),
        "theta_zero": zero,
        "equals_theta_zero_span": len(kernel) == len(zero) and support <= set(zero),
    }


def lowering_weights(shape: Shape) -> list[tuple[int, ...]]:
    """Weights of the exterior algebra on the odd lowering part, one per subset of roots."""
    m, N = shape.m, shape.total
    roots = []
    for j in range(m + 1, N + 1):
        for i in range(1, m + 1):
            vec = [0] * N
            vec[j - 1] += 1
            vec[i - 1] -= 1
            roots.append(vec)
    out = []
    for mask in range(1 << len(roots)):
        acc = [0] * N
        for b, r in enumerate(roots):
            if mask >> b & 1:
                acc = [x + y for x, y in zip(acc, r)]
        out.append(tuple(acc))
    return out


def kac_compare(M: ModuleSpace, perturb: bool = False) -> VerificationReport:
    from collections import Counter

    start = time.perf_counter()
    inv = g1_invariants(M)
    W = [M.basis[i] for i in inv["theta_zero"]]
    m, n = M.shape.m, M.shape.n
    witnesses = []
    if not inv["equals_theta_zero_span"]:
        witnesses.append({"reason": "g1-invariants differ from the theta=0 span", "kernel_dim": inv["dim"], "theta_zero": len(W)})
    if len(M.basis) != 2 ** (m * n) * len(W):
        witnesses.append({"reason": "dimension", "dim": len(M.basis), "expected": 2 ** (m * n) * len(W)})
    actual = Counter(M.weights())
    if perturb and M.basis:
        first = min(actual)
        actual[first] -= 1
        actual[tuple(x + (1 if i == 0 else 0) for i, x in enumerate(first))] += 1
    model = Counter()
    shifts = lowering_weights(M.shape)
    for w in (t.weight_tuple() for t in W):
        for s in shifts:
            model[tuple(a + b for a, b in zip(w, s))] += 1
    if +actual != +model:
        diff = sorted((actual - model).items()) + sorted((model - actual).items())
        weight, _ = diff[0]
        witnesses.append({"reason": "weight multiset", "weight": [fmt(x) for x in weight]})
    status = FAIL if witnesses else PASS
    return _report("kac", M, status, start, witnesses, dim=len(M.basis), invariants=inv["dim"])


# --- enveloping algebra identities ------------------------------------------------------


def _mat(M: ModuleSpace, i: int, j: int) -> SparseMatrix:
    return M.matrix_of(BasisElement(i, j))


def check_gl11_identity(M: ModuleSpace) -> VerificationReport:
    if (M.shape.m, M.shape.n) != (1, 1):
        raise ValueError("the identity lives in U(gl(1|1))")
    start = time.perf_counter()
    x = _mat(M, 2, 1) @ _mat(M, 1, 2)
    value = x @ (x - _mat(M, 1, 1) - _mat(M, 2, 2))
    if value.is_zero():
        return _report("gl11-identity", M, PASS, start)
    r, c, v = min(value.entries())
    return _report("gl11-identity", M, FAIL, start, [{"row": r, "col": c, "value": fmt(v)}])


def gl12_sides(M: ModuleSpace) -> tuple[SparseMatrix, SparseMatrix]:
    x = _mat(M, 2, 1) @ _mat(M, 1, 2)
    y = _mat(M, 3, 2) @ _mat(M, 2, 3)
    lhs = x @ y - y @ x
    rhs = _mat(M, 3, 1) @ _mat(M, 2, 3) @ _mat(M, 1, 2) - _mat(M, 2, 1) @ _mat(M, 3, 2) @ _mat(M, 1, 3)
    return lhs, rhs


def check_gl12_commutator(M: ModuleSpace, reverse: bool = False) -> VerificationReport:
    """[x, y] = E31 E23 E12 - E21 E32 E13 on M, with x = E21 E12 and y = E32 E23.

    The identity as usually quoted fails by a sign: in U(gl(1|2)) one has
    [x, y] = E21 E32 E13 - E31 E23 E12. With ``reverse`` the commutator [y, x] is compared
    instead, which is the correct form of the statement.
    """
    if (M.shape.m, M.shape.n) != (1, 2):
        raise ValueError("the identity lives in U(gl(1|2))")
    start = time.perf_counter()
    lhs, rhs = gl12_sides(M)
    if reverse:
        lhs = lhs * -1
    nonzero = not lhs.is_zero()
    if lhs == rhs:
        return _report("gl12-commutator", M, PASS, start, nonzero=nonzero, reverse=reverse)
    diff = lhs - rhs
    r, c, v = min(diff.entries())
    witness = {"row": r, "col": c, "difference": fmt(v), "opposite_sign_holds": lhs == rhs * -1}
    return _report("gl12-commutator", M, FAIL, start, [witness], nonzero=nonzero, reverse=reverse)


def gl12_nonvanishing_witness(modules: Iterable[ModuleSpace], cap: int = 64) -> Optional[ModuleSpace]:
    """First module (by increasing size, at most ``cap``) on which [x, y] is not zero."""
    for M in sorted(modules, key=lambda M: (len(M.basis), describe(M))):
        if len(M.basis) > cap:
            break
        lhs, _ = gl12_sides(M)
        if not lhs.is_zero():
            return M
    return None


# --- Gelfand-Tsetlin characters ------------------------------------------------------


def check_separation(M: ModuleSpace, basis: Optional[Sequence] = None) -> VerificationReport:
    start = time.perf_counter()
    seen: dict = {}
    witnesses = []
    for t in (M.basis if basis is None else basis):
        key = eigenvalue_tuple(t)
        if key in seen:
            witnesses.append({"first": seen[key].to_json(), "second": t.to_json()})
            break
        seen[key] = t
    return _report("separation", M, FAIL if witnesses else PASS, start, witnesses, tableaux=len(seen))


def check_berezinian(M: ModuleSpace, order: int = 2) -> VerificationReport:
    """Truncated B(t) (and the row-wise Berezinians) are diagonal with the factored eigenvalues."""
    from .berezinian import berezinian_eigenvalue, berezinian_operator_truncated, highest_weight_scalar
    from .algebra import Weight

    start = time.perf_counter()
    N = M.shape.total
    witnesses = []
    for k in range(1, N + 1):
        coeffs = berezinian_operator_truncated(M, order, rank=k)
        for power, mat in enumerate(coeffs):
            if not mat.is_diagonal():
                witnesses.append({"row": k, "power": power, "reason": "not diagonal"})
        for idx, t in enumerate(M.basis):
            expected = berezinian_eigenvalue(k, t).coefficients(order)
            got = [mat[idx, idx] for mat in coeffs]
            if got != expected:
                witnesses.append({"row": k, "tableau": t.to_json(), "expected": [fmt(x) for x in expected], "got": [fmt(x) for x in got]})
                break
        if witnesses:
            break
    hc = highest_weight_scalar(Weight(M.seed.top), M.shape).coefficients(order)
    if not witnesses and M.basis and berezinian_eigenvalue(N, M.basis[0]).coefficients(order) != hc:
        witnesses.append({"reason": "highest weight scalar", "expected": [fmt(x) for x in hc]})
    return _report("berezinian", M, FAIL if witnesses else PASS, start, witnesses, order=order)


# --- mutation self-tests -------------------------------------------------------------


def corrupt_coefficient(M: ModuleSpace, kind: str = "e", k: int = 1):
    """Double one coefficient of a generator in the cached action of ``M`` (in place).

    Returns the affected tableau, or None when the generator acts by zero on the whole basis.
    """
    for t in M.basis:
        i = M.tableau_id(t)
        hit = M.act_id(kind, k, i)
        if hit:
            (j, c), rest = hit[0], hit[1:]
            M._id_actions[(kind, k, i)] = ((j, c * 2),) + rest
            return t
    return None


def mutation_selftest(M: ModuleSpace) -> VerificationReport:
    """Corrupt a fresh copy of ``M`` in three ways and require each check to notice."""
    start = time.perf_counter()
    caught = {}
    copy = ModuleSpace(M.seed, M.relations, M.mode, M.even_order).enumerate(cap=max(len(M.basis), 1), radius=M.radius)
    target = None
    for k in range(1, M.shape.total):
        target = corrupt_coefficient(copy, "e", k)
        if target is not None:
            break
    if target is not None:
        caught["relations"] = check_defining_relations(copy).status == FAIL
    if M.basis:
        caught["separation"] = check_separation(M, list(M.basis) + [M.basis[0]]).status == FAIL
    if M.finite and M.basis:
        caught["kac"] = kac_compare(M, perturb=True).status == FAIL
    missed = [name for name, ok in sorted(caught.items()) if not ok]
    witnesses = [{"undetected": name} for name in missed]
    return _report("mutation", M, FAIL if missed else PASS, start, witnesses, detected=sorted(k for k, v in caught.items() if v))


# --- suites ------------------------------------------------------------------------------

SUITES = ("all", "relations", "irreducibility", "kac", "berezinian", "examples")


def _undecided(check: str, M: ModuleSpace, reason: str) -> VerificationReport:
    return _report(check, M, UNDECIDED, time.perf_counter(), reason=reason)


def run_suite(M: ModuleSpace, suite: str = "all", seed: int = 0, sample_size: Optional[int] = None) -> list[VerificationReport]:
    """Run one named suite on a module; reports come back in a fixed order.

    ``seed`` drives the choice of sample tableaux when ``sample_size`` is smaller than the basis.
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    chosen = set(SUITES[1:]) if suite == "all" else {suite}
    reports = []
    if "relations" in chosen:
        sample = None
        if sample_size is not None and sample_size < len(M.basis):
            sample = sorted(random.Random(seed).sample(M.basis, sample_size))
        reports.append(check_defining_relations(M, sample))
    finite = M.finite
    if "irreducibility" in chosen:
        if finite:
            reports.append(check_irreducibility(M))
        else:
            start = time.perf_counter()
            reports.append(_report("irreducibility", M, UNDECIDED, start, criterion=irreducibility_criterion(M), reason="infinite module: no brute-force oracle"))
    if "kac" in chosen:
        if not finite:
            reports.append(_undecided("kac", M, "infinite module"))
        elif M.mode != TYPICAL or not irreducibility_criterion(M):
            reports.append(_undecided("kac", M, "precondition: irreducible quasi-typical module"))
        else:
            reports.append(kac_compare(M))
    if "berezinian" in chosen:
        if finite:
            reports.append(check_berezinian(M))
        else:
            reports.append(_undecided("berezinian", M, "infinite module"))
    if "examples" in chosen:
        reports.append(check_separation(M))
        if finite and (M.shape.m, M.shape.n) == (1, 1):
            reports.append(check_gl11_identity(M))
        if finite and (M.shape.m, M.shape.n) == (1, 2):
            reports.append(check_gl12_commutator(M, reverse=True))
    if suite == "all":
        reports.append(mutation_selftest(M))
    return reports


def dumps_reports(reports: Iterable[VerificationReport], timing: bool = False) -> str:
    """JSON lines, one report per line."""
    return "".join(r.dumps(timing) + "\n" for r in reports)
