"""Finite-dimensional algebras by structure constants, for numeric cross-checks.

An algebra is a basis e_1..e_d with e_i * e_j = sum_k c[i][j][k] e_k over
exact rationals.  Associativity is verified at construction; the builtin
catalogue covers commutative semisimple (diag), commutative nilpotent
(trunc) and noncommutative (m2) cases.
"""

from __future__ import annotations

import random
import re
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import jordan as jd
from .blift import BPolynomial
from .freealg import Mode, Polynomial, Word
from .report import Report

ALGEBRA_FILE_HEADER = "njordan-algebra v1"


class NonAssociativeError(ValueError):
    """Structure constants fail associativity; carries a witness triple."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"non-associative constants: witness basis triple {witness}")


Vector = tuple[Fraction, ...]


def vzero(dim: int) -> Vector:
    return (Fraction(0),) * dim


def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Vector) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in v)


def matvec(mat, v: Vector) -> Vector:
    return tuple(sum((r * x for r, x in zip(row, v)), Fraction(0)) for row in mat)


@dataclass(frozen=True)
class StructureAlgebra:
    name: str
    dim: int
    labels: tuple[str, ...]
    constants: tuple  # constants[i][j][k], all Fractions
    commutative: bool


def build_algebra(constants, name: str = "custom", labels=None) -> StructureAlgebra:
    dim = len(constants)
    for row in constants:
        if len(row) != dim or any(len(cell) != dim for cell in row):
            raise ValueError("structure constant array must be dim x dim x dim")
    table = tuple(
        tuple(tuple(Fraction(c) for c in constants[i][j]) for j in range(dim))
        for i in range(dim))
    alg = StructureAlgebra(name, dim, _labels(labels, dim), table,
                           _is_commutative(table))
    _check_associative(alg)
    return alg


def _labels(labels, dim):
    if labels is None:
        return tuple(f"e{i + 1}" for i in range(dim))
    labels = tuple(labels)
    if len(labels) != dim:
        raise ValueError("label count differs from dimension")
    return labels


def _is_commutative(table) -> bool:
    dim = len(table)
    return all(table[i][j] == table[j][i] for i in range(dim) for j in range(dim))


def basis_vector(dim: int, i: int) -> Vector:
    return tuple(Fraction(1 if k == i else 0) for k in range(dim))


def multiply(alg: StructureAlgebra, u: Vector, v: Vector) -> Vector:
    if len(u) != alg.dim or len(v) != alg.dim:
        raise ValueError("vector dimension mismatch")
    out = [Fraction(0)] * alg.dim
    for i, ui in enumerate(u):
        if not ui:
            continue
        for j, vj in enumerate(v):
            if not vj:
                continue
            coeff = ui * vj
            for k, c in enumerate(alg.constants[i][j]):
                if c:
                    out[k] += coeff * c
    return tuple(out)


def power(alg: StructureAlgebra, u: Vector, n: int) -> Vector:
    if n < 1:
        raise ValueError("power needs n >= 1 (the algebra may be non-unital)")
    out = u
    for _ in range(n - 1):
        out = multiply(alg, out, u)
    return out


def _check_associative(alg: StructureAlgebra) -> None:
    for i, j, k in product(range(alg.dim), repeat=3):
        ei, ej, ek = (basis_vector(alg.dim, t) for t in (i, j, k))
        left = multiply(alg, multiply(alg, ei, ej), ek)
        right = multiply(alg, ei, multiply(alg, ej, ek))
        if left != right:
            raise NonAssociativeError((i + 1, j + 1, k + 1))


# --- builtin catalogue ---------------------------------------------------

def builtin_algebra(name: str) -> StructureAlgebra:
    m = re.fullmatch(r"diag([1-4])", name)
    if m:
        return _diag(int(m.group(1)))
    m = re.fullmatch(r"trunc([2-5])", name)
    if m:
        return _trunc(int(m.group(1)))
    if name == "m2":
        return _m2()
    raise ValueError(f"unknown builtin algebra {name!r} "
                     "(expected diag1..diag4, trunc2..trunc5, m2)")


def _diag(d: int) -> StructureAlgebra:
    constants = [[[Fraction(1 if i == j == k else 0) for k in range(d)]
                  for j in range(d)] for i in range(d)]
    return build_algebra(constants, name=f"diag{d}")


def _trunc(d: int) -> StructureAlgebra:
    # basis 1, t, ..., t^(d-1); t^d = 0
    constants = [[[Fraction(1 if i + j == k else 0) for k in range(d)]
                  for j in range(d)] for i in range(d)]
    return build_algebra(constants, name=f"trunc{d}",
                         labels=tuple(f"t^{i}" for i in range(d)))


def _m2() -> StructureAlgebra:
    # basis E11, E12, E21, E22; E_ab E_cd = delta_bc E_ad
    units = [(1, 1), (1, 2), (2, 1), (2, 2)]
    constants = [[[Fraction(0)] * 4 for _ in range(4)] for _ in range(4)]
    for i, (a, b) in enumerate(units):
        for j, (c, d) in enumerate(units):
            if b == c:
                constants[i][j][units.index((a, d))] = Fraction(1)
    return build_algebra(constants, name="m2",
                         labels=("E11", "E12", "E21", "E22"))


# --- algebra definition files --------------------------------------------

def dump_algebra(alg: StructureAlgebra) -> str:
    lines = [ALGEBRA_FILE_HEADER, str(alg.dim)]
    flat = [str(alg.constants[i][j][k])
            for i in range(alg.dim) for j in range(alg.dim) for k in range(alg.dim)]
    for i in range(0, len(flat), alg.dim):
        lines.append(" ".join(flat[i:i + alg.dim]))
    return "\n".join(lines) + "\n"


def parse_algebra(text: str, name: str = "file") -> StructureAlgebra:
    lines = text.splitlines()
    if not lines or lines[0].strip() != ALGEBRA_FILE_HEADER:
        raise ValueError(f"expected header {ALGEBRA_FILE_HEADER!r}")
    tokens = " ".join(lines[1:]).split()
    if not tokens:
        raise ValueError("missing dimension")
    dim = int(tokens[0])
    values = [Fraction(t) for t in tokens[1:]]
    if len(values) != dim ** 3:
        raise ValueError(f"expected {dim ** 3} structure constants, got {len(values)}")
    constants = [[[values[(i * dim + j) * dim + k] for k in range(dim)]
                  for j in range(dim)] for i in range(dim)]
    return build_algebra(constants, name=name)


def load_algebra(path) -> StructureAlgebra:
    with open(path) as fh:
        return parse_algebra(fh.read(), name=str(path))


def resolve_algebra(spec: str) -> StructureAlgebra:
    """Builtin name first, then a definition file path."""
    try:
        return builtin_algebra(spec)
    except ValueError:
        pass
    return load_algebra(spec)


# --- evaluation of symbolic expressions ----------------------------------

def _eval_word(word: Word, assignment, alg: StructureAlgebra) -> Vector:
    if not word.letters:
        raise ValueError("cannot evaluate the unit word: algebra may be non-unital")
    out = None
    for letter in word.letters:
        if letter not in assignment:
            raise ValueError(f"no assignment for generator x{letter}")
        vec = assignment[letter]
        out = vec if out is None else multiply(alg, out, vec)
    return out


def eval_a_poly(p: Polynomial, assignment, alg: StructureAlgebra) -> Vector:
    if p.mode is Mode.COMMUTATIVE and not alg.commutative:
        raise ValueError("commutative-mode polynomial in a noncommutative algebra")
    out = vzero(alg.dim)
    for word, coeff in p.terms.items():
        out = vadd(out, vscale(coeff, _eval_word(word, assignment, alg)))
    return out


def eval_b_poly(bp: BPolynomial, assignment, hmat,
                alg_a: StructureAlgebra, alg_b: StructureAlgebra) -> Vector:
    if bp.a_mode is Mode.COMMUTATIVE and not alg_a.commutative:
        raise ValueError("commutative domain mode needs a commutative algebra")
    if bp.b_mode is Mode.COMMUTATIVE and not alg_b.commutative:
        raise ValueError("commutative codomain mode needs a commutative algebra")
    if len(hmat) != alg_b.dim or any(len(row) != alg_a.dim for row in hmat):
        raise ValueError("linear map shape mismatch")
    out = vzero(alg_b.dim)
    images: dict[Word, Vector] = {}  # h(w) repeats across terms; cache per call
    for bword, coeff in bp.terms.items():
        if not bword.factors:
            raise ValueError("cannot evaluate the unit term: algebra may be non-unital")
        value = None
        for factor in bword.factors:
            image = images.get(factor.arg)
            if image is None:
                image = matvec(hmat, _eval_word(factor.arg, assignment, alg_a))
                images[factor.arg] = image
            value = image if value is None else multiply(alg_b, value, image)
        out = vadd(out, vscale(coeff, value))
    return out


def jordan_defect_concrete(hmat, alg_a, alg_b, a: Vector, n: int) -> Vector:
    """h(a^n) - (h a)^n for a concrete linear map."""
    return vsub(matvec(hmat, power(alg_a, a, n)),
                power(alg_b, matvec(hmat, a), n))


def hom_defect_concrete(hmat, alg_a, alg_b, elements) -> Vector:
    """h(a1...an) - h(a1)...h(an)."""
    elements = list(elements)
    if not elements:
        raise ValueError("need at least one element")
    prod_a = elements[0]
    for e in elements[1:]:
        prod_a = multiply(alg_a, prod_a, e)
    prod_b = matvec(hmat, elements[0])
    for e in elements[1:]:
        prod_b = multiply(alg_b, prod_b, matvec(hmat, e))
    return vsub(matvec(hmat, prod_a), prod_b)


# --- randomized cross-validation ------------------------------------------

def random_fraction(rng: random.Random) -> Fraction:
    # small numerators over denominators 1..3 keep arithmetic cheap while
    # still exercising cancellation
    return Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3)))


def random_vector(rng: random.Random, dim: int) -> Vector:
    return tuple(random_fraction(rng) for _ in range(dim))


def random_matrix(rng: random.Random, rows: int, cols: int):
    return tuple(tuple(random_fraction(rng) for _ in range(cols))
                 for _ in range(rows))


def default_algebra(mode: Mode) -> StructureAlgebra:
    return builtin_algebra("diag3" if mode is Mode.COMMUTATIVE else "m2")


def cross_validate(cfg: jd.JordanConfig, trials: int, seed: int,
                   alg_a: StructureAlgebra | None = None,
                   alg_b: StructureAlgebra | None = None) -> Report:
    """Numeric oracle: evaluate both sides of the theorem and decomposition
    identities on random assignments and linear maps, expecting exact equality.

    The per-trial RNG stream is split from the seed, so trial results are
    order-independent and reproducible.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    alg_a = alg_a or default_algebra(cfg.a_mode)
    alg_b = alg_b or default_algebra(cfg.b_mode)
    started = time.perf_counter()

    subsets = jd.nonempty_subsets(cfg.full_set())
    phis = jd._phi_table(subsets, cfg)
    memo: dict = {}
    psi_full = jd.psi_recursive(cfg.full_set(), cfg, memo, phis)
    sym = jd.symmetrized_defect(cfg)
    phi_full = phis[cfg.full_set()]
    psi_sum = jd.b_zero(cfg.a_mode, cfg.b_mode)
    for subset in subsets:
        psi_sum = jd.b_add(psi_sum, jd.psi_recursive(subset, cfg, memo, phis))

    checks = (("theorem", psi_full, sym), ("decomposition", phi_full, psi_sum))
    equal = 0
    failure = None
    for trial in range(trials):
        rng = random.Random(f"{seed}:{trial}")
        assignment = {i: random_vector(rng, alg_a.dim)
                      for i in range(1, cfg.n + 1)}
        hmat = random_matrix(rng, alg_b.dim, alg_a.dim)
        ok = True
        for label, lhs, rhs in checks:
            lv = eval_b_poly(lhs, assignment, hmat, alg_a, alg_b)
            rv = eval_b_poly(rhs, assignment, hmat, alg_a, alg_b)
            if lv != rv:
                ok = False
                if failure is None:
                    failure = {
                        "trial": trial,
                        "identity": label,
                        "lhs": [str(x) for x in lv],
                        "rhs": [str(x) for x in rv],
                    }
        if ok:
            equal += 1

    payload = {
        "algebra_a": alg_a.name,
        "algebra_b": alg_b.name,
        "trials": trials,
        "equal_trials": equal,
        "seed": seed,
    }
    if failure is not None:
        payload["first_failure"] = failure
    outcome = "pass" if equal == trials else "fail"
    return Report("cross-validate", cfg.n, cfg.a_mode.value, cfg.b_mode.value,
                  outcome, round((time.perf_counter() - started) * 1000, 3),
                  payload)
