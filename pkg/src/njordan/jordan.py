"""Polarization maps and verifiers for n-Jordan homomorphisms.

Everything here is exact symbolic computation over the free algebras of
freealg/blift.  The central objects:

  phi(S)        defect h((sum_{i in S} x_i)^n) - h(sum_{i in S} x_i)^n
  psi(S)        the part of phi({1..n}) containing exactly the variables S,
                computed three independent ways (recursion, extraction,
                inclusion-exclusion) whose agreement is a tested property
  symmetrized defect    sum over permutations of h(x_s1...x_sn) - h(x_s1)...h(x_sn)

The verifiers return Report objects; failure is an outcome carrying the
exact nonzero difference, never an exception.
"""

from __future__ import annotations

import hashlib
import math
import re
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from . import freealg
from .blift import (
    BPolynomial,
    BWord,
    HSymbol,
    b_add,
    b_exact_varset_component,
    b_power,
    b_scale,
    b_sub,
    b_zero,
    lift,
)
from .freealg import DEFAULT_GENERATOR_CAP, Mode, Polynomial, Word
from .report import Report


@dataclass(frozen=True)
class JordanConfig:
    n: int
    a_mode: Mode = Mode.COMMUTATIVE
    b_mode: Mode = Mode.COMMUTATIVE
    cap: int = DEFAULT_GENERATOR_CAP
    threads: int = 1

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.n > self.cap:
            raise ValueError(f"n={self.n} exceeds generator cap {self.cap}")

    def full_set(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1))


def render_subset(subset) -> str:
    return "{" + ",".join(str(i) for i in sorted(subset)) + "}"


def parse_subset(text: str) -> frozenset[int]:
    m = re.fullmatch(r"\{(\d+(,\d+)*)\}", text.strip())
    if not m:
        raise ValueError(f"bad subset literal {text!r}")
    return frozenset(int(x) for x in m.group(1).split(","))


def nonempty_subsets(members) -> list[frozenset[int]]:
    members = sorted(members)
    out = []
    for k in range(1, len(members) + 1):
        for combo in combinations(members, k):
            out.append(frozenset(combo))
    return out


def jordan_defect(a: Polynomial, cfg: JordanConfig) -> BPolynomial:
    """h(a^n) - h(a)^n with h a formal linear symbol."""
    if a.mode is not cfg.a_mode:
        raise freealg.ModeMismatchError("element mode differs from configured domain mode")
    lifted_power = lift(freealg.power(a, cfg.n), cfg.b_mode)
    power_of_lift = b_power(lift(a, cfg.b_mode), cfg.n)
    return b_sub(lifted_power, power_of_lift)


def phi(subset, cfg: JordanConfig) -> BPolynomial:
    subset = frozenset(subset)
    if not subset:
        raise ValueError("phi needs a nonempty subset")
    if not subset <= cfg.full_set():
        raise ValueError(f"subset {render_subset(subset)} not within 1..{cfg.n}")
    return jordan_defect(freealg.sum_of_generators(subset, cfg.a_mode, cfg.cap), cfg)


def _phi_table(subsets, cfg: JordanConfig) -> dict[frozenset, BPolynomial]:
    subsets = list(subsets)
    if cfg.threads > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            values = list(pool.map(lambda s: phi(s, cfg), subsets))
    else:
        values = [phi(s, cfg) for s in subsets]
    return dict(zip(subsets, values))


def plain_defect(cfg: JordanConfig) -> BPolynomial:
    """h(x1...xn) - h(x1)...h(xn)."""
    word = Word.make(range(1, cfg.n + 1), cfg.a_mode)
    product = BWord.make(
        (HSymbol(Word.make((i,), cfg.a_mode)) for i in range(1, cfg.n + 1)),
        cfg.b_mode)
    terms = {BWord.make((HSymbol(word),), cfg.b_mode): Fraction(1)}
    out = BPolynomial(terms, cfg.a_mode, cfg.b_mode)
    return b_sub(out, BPolynomial({product: Fraction(1)}, cfg.a_mode, cfg.b_mode))


def psi_recursive(subset, cfg: JordanConfig, _memo=None, _phis=None) -> BPolynomial:
    """The exact-subset component by the subtractive recursion.

    psi(S) = phi(S) - sum of psi(T) over nonempty proper subsets T of S.
    """
    subset = frozenset(subset)
    if not subset:
        raise ValueError("psi needs a nonempty subset")
    memo = _memo if _memo is not None else {}
    if subset in memo:
        return memo[subset]
    base = phi(subset, cfg) if _phis is None else _phis[subset]
    acc = dict(base.terms)
    for proper in nonempty_subsets(subset):
        if proper == subset:
            continue
        smaller = psi_recursive(proper, cfg, memo, _phis)
        for bw, coeff in smaller.terms.items():
            new = acc.get(bw, Fraction(0)) - coeff
            if new:
                acc[bw] = new
            else:
                acc.pop(bw, None)
    result = BPolynomial(acc, cfg.a_mode, cfg.b_mode)
    memo[subset] = result
    return result


def psi_extract(subset, cfg: JordanConfig) -> BPolynomial:
    """The exact-subset component read off literally from phi(S)."""
    subset = frozenset(subset)
    if not subset:
        raise ValueError("psi needs a nonempty subset")
    return b_exact_varset_component(phi(subset, cfg), subset)


def mobius_psi(subset, cfg: JordanConfig, _phis=None) -> BPolynomial:
    """Closed form of the recursion: alternating sum of phi over sub-subsets."""
    subset = frozenset(subset)
    if not subset:
        raise ValueError("psi needs a nonempty subset")
    acc = b_zero(cfg.a_mode, cfg.b_mode)
    for sub in nonempty_subsets(subset):
        value = phi(sub, cfg) if _phis is None else _phis[sub]
        sign = (-1) ** (len(subset) - len(sub))
        acc = b_add(acc, b_scale(sign, value))
    return acc


def symmetrized_defect(cfg: JordanConfig) -> BPolynomial:
    """Sum over all permutations of h(x_s1...x_sn) - h(x_s1)...h(x_sn)."""
    acc: dict[BWord, Fraction] = {}
    for perm in permutations(range(1, cfg.n + 1)):
        word_term = BWord.make((HSymbol(Word.make(perm, cfg.a_mode)),), cfg.b_mode)
        prod_term = BWord.make(
            (HSymbol(Word.make((i,), cfg.a_mode)) for i in perm), cfg.b_mode)
        for bw, sign in ((word_term, Fraction(1)), (prod_term, Fraction(-1))):
            new = acc.get(bw, Fraction(0)) + sign
            if new:
                acc[bw] = new
            else:
                acc.pop(bw, None)
    return BPolynomial(acc, cfg.a_mode, cfg.b_mode)


def _report(command: str, cfg: JordanConfig, outcome: str, started: float,
            payload: dict) -> Report:
    return Report(
        command=command,
        n=cfg.n,
        a_mode=cfg.a_mode.value,
        b_mode=cfg.b_mode.value,
        outcome=outcome,
        elapsed_ms=round((time.perf_counter() - started) * 1000, 3),
        payload=payload,
    )


def verify_decomposition(cfg: JordanConfig) -> Report:
    """Check phi({1..n}) = sum of psi(S) over all nonempty S."""
    started = time.perf_counter()
    subsets = nonempty_subsets(cfg.full_set())
    phis = _phi_table(subsets, cfg)
    lhs = phis[cfg.full_set()]
    memo: dict = {}
    rhs = b_zero(cfg.a_mode, cfg.b_mode)
    for subset in subsets:
        rhs = b_add(rhs, psi_recursive(subset, cfg, memo, phis))
    diff = b_sub(lhs, rhs)
    payload = {
        "identity": "phi(full) = sum of psi over nonempty subsets",
        "subsets": len(subsets),
        "lhs_terms": len(lhs),
        "rhs_terms": len(rhs),
        "difference": diff.render() if not diff.is_zero() else "0",
    }
    return _report("decompose", cfg, "pass" if diff.is_zero() else "fail",
                   started, payload)


def verify_theorem(cfg: JordanConfig) -> Report:
    """Check psi({1..n}) equals the symmetrized defect."""
    started = time.perf_counter()
    subsets = nonempty_subsets(cfg.full_set())
    phis = _phi_table(subsets, cfg)
    lhs = psi_recursive(cfg.full_set(), cfg, {}, phis)
    rhs = symmetrized_defect(cfg)
    diff = b_sub(lhs, rhs)
    payload = {
        "identity": "psi(full) = symmetrized defect",
        "lhs_terms": len(lhs),
        "rhs_terms": len(rhs),
        "difference": diff.render() if not diff.is_zero() else "0",
    }
    return _report("verify", cfg, "pass" if diff.is_zero() else "fail",
                   started, payload)


def verify_collapse(cfg: JordanConfig) -> Report:
    """Both modes commutative: symmetrized defect = n! * plain defect."""
    if cfg.a_mode is not Mode.COMMUTATIVE or cfg.b_mode is not Mode.COMMUTATIVE:
        raise ValueError("collapse requires both modes commutative")
    started = time.perf_counter()
    sym = symmetrized_defect(cfg)
    plain = plain_defect(cfg)
    factor = None
    for bw, coeff in plain.terms.items():
        if bw in sym.terms:
            factor = sym.terms[bw] / coeff
            break
    ok = (factor is not None
          and factor.denominator == 1
          and b_sub(sym, b_scale(factor, plain)).is_zero()
          and factor == math.factorial(cfg.n))
    payload = {
        "identity": "symmetrized defect = n! * plain defect",
        "factor": str(factor) if factor is not None else "none",
        "expected_factor": math.factorial(cfg.n),
    }
    return _report("collapse", cfg, "pass" if ok else "fail", started, payload)


def cheshmavar_rhs(cfg: JordanConfig, _phis=None) -> BPolynomial:
    """Right side of the false decomposition formula: phi over all subsets
    of size 2..n-1 plus n! times the plain defect."""
    if cfg.n < 4:
        raise ValueError("the disputed formula requires n >= 4")
    acc = b_scale(math.factorial(cfg.n), plain_defect(cfg))
    for subset in nonempty_subsets(cfg.full_set()):
        if 2 <= len(subset) <= cfg.n - 1:
            value = phi(subset, cfg) if _phis is None else _phis[subset]
            acc = b_add(acc, value)
    return acc


@dataclass
class RefutationReport:
    n: int
    residual: BPolynomial
    multiplicities: dict  # frozenset -> (lhs_count, rhs_count)

    def residual_nonzero(self) -> bool:
        return not self.residual.is_zero()


def refute_cheshmavar(cfg: JordanConfig) -> RefutationReport:
    """Show the formula false: nonzero residual plus the overcounting table.

    For every 2-subset P the table records how many phi instances on each
    side carry a nonzero exact-P component; the right side overcounts.
    """
    if cfg.n < 4:
        raise ValueError("the disputed formula requires n >= 4")
    full = cfg.full_set()
    subsets = nonempty_subsets(full)
    phis = _phi_table(subsets, cfg)
    lhs = phis[full]
    residual = b_sub(lhs, cheshmavar_rhs(cfg, phis))
    rhs_carriers = [s for s in subsets if 2 <= len(s) <= cfg.n - 1]
    multiplicities = {}
    for pair in combinations(sorted(full), 2):
        pair = frozenset(pair)
        lhs_count = 0 if b_exact_varset_component(lhs, pair).is_zero() else 1
        rhs_count = sum(
            1 for s in rhs_carriers
            if not b_exact_varset_component(phis[s], pair).is_zero())
        multiplicities[pair] = (lhs_count, rhs_count)
    return RefutationReport(cfg.n, residual, multiplicities)


@dataclass
class Certificate:
    """Signed combination of phi instances reproducing the symmetrized defect.

    Every phi instance vanishes under an n-Jordan map, so a verified
    certificate is a machine-checkable witness that the symmetrized defect
    vanishes too.
    """

    n: int
    a_mode: Mode
    b_mode: Mode
    entries: list  # (sign, frozenset) pairs
    target_hash: str

    def render(self) -> str:
        lines = [f"{'+1' if sign > 0 else '-1'} phi {render_subset(subset)}"
                 for sign, subset in self.entries]
        lines.append(f"target {self.target_hash}")
        return "\n".join(lines) + "\n"


def target_hash(bp: BPolynomial) -> str:
    return hashlib.sha256(bp.render().encode()).hexdigest()


def evaluate_entries(entries, cfg: JordanConfig) -> BPolynomial:
    acc = b_zero(cfg.a_mode, cfg.b_mode)
    for sign, subset in entries:
        acc = b_add(acc, b_scale(sign, phi(subset, cfg)))
    return acc


def emit_certificate(cfg: JordanConfig) -> Certificate:
    """Inclusion-exclusion certificate, re-verified by evaluation before emission."""
    entries = [((-1) ** (cfg.n - len(subset)), subset)
               for subset in sorted(nonempty_subsets(cfg.full_set()),
                                    key=lambda s: (-len(s), sorted(s)))]
    target = symmetrized_defect(cfg)
    if not b_sub(evaluate_entries(entries, cfg), target).is_zero():
        raise RuntimeError("certificate failed self-verification; engine bug")
    return Certificate(cfg.n, cfg.a_mode, cfg.b_mode, entries, target_hash(target))


def parse_certificate(text: str) -> tuple[list, str]:
    """Read the certificate file format back into (entries, target_hash)."""
    entries = []
    hash_value = None
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("target "):
            hash_value = line.split(None, 1)[1]
            continue
        m = re.fullmatch(r"([+-]1) phi (\{[\d,]+\})", line)
        if not m:
            raise ValueError(f"bad certificate line {line!r}")
        entries.append((int(m.group(1)), parse_subset(m.group(2))))
    if hash_value is None:
        raise ValueError("certificate missing target line")
    return entries, hash_value


def check_certificate(entries, hash_value: str, cfg: JordanConfig) -> bool:
    """Re-verify a parsed certificate by evaluating its signed phi sum."""
    value = evaluate_entries(entries, cfg)
    return target_hash(value) == hash_value and \
        b_sub(value, symmetrized_defect(cfg)).is_zero()
