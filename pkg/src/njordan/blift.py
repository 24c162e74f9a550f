"""Codomain free algebra whose generators are formal images h(w) of domain words.

A linear map h is represented by lifting each domain word w to the formal
symbol h(w); nothing about multiplicativity is assumed, which is exactly
what the verifiers put under test.  The codomain has its own mode, so all
four (domain mode) x (codomain mode) combinations are legal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .freealg import (
    Mode,
    ModeMismatchError,
    Polynomial,
    Word,
    _require_same_mode,
    render_terms,
)


@dataclass(frozen=True)
class HSymbol:
    """Formal image h(w) of a canonical domain word."""

    arg: Word

    def sort_key(self) -> tuple:
        return (self.arg.degree, self.arg.letters)

    def render(self) -> str:
        return f"h({self.arg.render()})"


@dataclass(frozen=True)
class BWord:
    """Product of h-symbols; canonical (sorted) when the codomain is commutative."""

    factors: tuple[HSymbol, ...]
    mode: Mode

    @staticmethod
    def make(factors: Iterable[HSymbol], mode: Mode) -> "BWord":
        factors = tuple(factors)
        if mode is Mode.COMMUTATIVE:
            factors = tuple(sorted(factors, key=HSymbol.sort_key))
        return BWord(factors, mode)

    def varset(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for f in self.factors:
            out |= f.arg.varset()
        return out

    def letter_count(self) -> int:
        return sum(f.arg.degree for f in self.factors)

    def concat(self, other: "BWord") -> "BWord":
        _require_same_mode(self.mode, other.mode)
        return BWord.make(self.factors + other.factors, self.mode)

    def sort_key(self) -> tuple:
        return (self.letter_count(), len(self.factors),
                tuple(f.arg.letters for f in self.factors))

    def render(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f.render() for f in self.factors)


@dataclass(frozen=True)
class BPolynomial:
    """Sparse codomain polynomial, tagged with both algebra modes."""

    terms: Mapping[BWord, Fraction]
    a_mode: Mode
    b_mode: Mode

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def render(self) -> str:
        return render_terms(self.terms)


def _require_compatible(p: BPolynomial, q: BPolynomial) -> None:
    if p.a_mode is not q.a_mode or p.b_mode is not q.b_mode:
        raise ModeMismatchError(
            f"mode tags differ: ({p.a_mode.value},{p.b_mode.value}) vs "
            f"({q.a_mode.value},{q.b_mode.value})")


def b_zero(a_mode: Mode, b_mode: Mode) -> BPolynomial:
    return BPolynomial({}, a_mode, b_mode)


def b_unit(a_mode: Mode, b_mode: Mode) -> BPolynomial:
    return BPolynomial({BWord.make((), b_mode): Fraction(1)}, a_mode, b_mode)


def lift(p: Polynomial, b_mode: Mode) -> BPolynomial:
    """Linear extension of h from domain monomials: c*w -> c*h(w)."""
    terms = {BWord.make((HSymbol(w),), b_mode): c for w, c in p.terms.items()}
    return BPolynomial(terms, p.mode, b_mode)


def b_add(p: BPolynomial, q: BPolynomial) -> BPolynomial:
    _require_compatible(p, q)
    acc = dict(p.terms)
    for bw, coeff in q.terms.items():
        new = acc.get(bw, Fraction(0)) + coeff
        if new:
            acc[bw] = new
        else:
            acc.pop(bw, None)
    return BPolynomial(acc, p.a_mode, p.b_mode)


def b_scale(c, p: BPolynomial) -> BPolynomial:
    c = Fraction(c)
    if not c:
        return b_zero(p.a_mode, p.b_mode)
    return BPolynomial({bw: c * v for bw, v in p.terms.items()}, p.a_mode, p.b_mode)


def b_sub(p: BPolynomial, q: BPolynomial) -> BPolynomial:
    return b_add(p, b_scale(-1, q))


def b_mul(p: BPolynomial, q: BPolynomial) -> BPolynomial:
    _require_compatible(p, q)
    acc: dict[BWord, Fraction] = {}
    for wp, cp in p.terms.items():
        for wq, cq in q.terms.items():
            bw = wp.concat(wq)
            new = acc.get(bw, Fraction(0)) + cp * cq
            if new:
                acc[bw] = new
            else:
                acc.pop(bw, None)
    return BPolynomial(acc, p.a_mode, p.b_mode)


def b_power(p: BPolynomial, n: int) -> BPolynomial:
    if n < 0:
        raise ValueError("negative exponent")
    result = b_unit(p.a_mode, p.b_mode)
    for _ in range(n):
        result = b_mul(result, p)
    return result


def b_varset(bw: BWord) -> frozenset[int]:
    return bw.varset()


def b_exact_varset_component(p: BPolynomial, subset: Iterable[int]) -> BPolynomial:
    """Terms whose underlying variable set is exactly the given subset."""
    subset = frozenset(subset)
    kept = {bw: c for bw, c in p.terms.items() if bw.varset() == subset}
    return BPolynomial(kept, p.a_mode, p.b_mode)
