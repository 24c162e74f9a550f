"""Exact sparse arithmetic in the free associative algebra over x1..xn.

Polynomials are finite maps from canonical words to nonzero rational
coefficients.  Two modes exist: in commutative mode a word is a sorted
multiset of generator indices, in noncommutative mode it is a sequence.
All values are immutable and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping

DEFAULT_GENERATOR_CAP = 8


class Mode(Enum):
    COMMUTATIVE = "com"
    NONCOMMUTATIVE = "noncom"

    @classmethod
    def parse(cls, text: str) -> "Mode":
        for mode in cls:
            if mode.value == text:
                return mode
        raise ValueError(f"unknown mode {text!r} (expected 'com' or 'noncom')")


class ModeMismatchError(ValueError):
    """Operands from different algebra modes were combined."""


def _require_same_mode(a: Mode, b: Mode) -> None:
    if a is not b:
        raise ModeMismatchError(f"mode mismatch: {a.value} vs {b.value}")


@dataclass(frozen=True)
class Word:
    """Canonical monomial: a tuple of generator indices."""

    letters: tuple[int, ...]
    mode: Mode

    @staticmethod
    def make(letters: Iterable[int], mode: Mode) -> "Word":
        letters = tuple(letters)
        if any(not isinstance(i, int) or i < 1 for i in letters):
            raise ValueError(f"generator indices must be integers >= 1, got {letters}")
        if mode is Mode.COMMUTATIVE:
            letters = tuple(sorted(letters))
        return Word(letters, mode)

    @property
    def degree(self) -> int:
        return len(self.letters)

    def varset(self) -> frozenset[int]:
        return frozenset(self.letters)

    def concat(self, other: "Word") -> "Word":
        _require_same_mode(self.mode, other.mode)
        return Word.make(self.letters + other.letters, self.mode)

    def sort_key(self) -> tuple:
        return (len(self.letters), self.letters)

    def render(self) -> str:
        if not self.letters:
            return "1"
        return "*".join(f"x{i}" for i in self.letters)


@dataclass(frozen=True)
class Polynomial:
    """Sparse polynomial: word -> nonzero Fraction."""

    terms: Mapping[Word, Fraction]
    mode: Mode

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def render(self) -> str:
        return render_terms(self.terms)


def render_terms(terms: Mapping, render_one=None) -> str:
    """Shared text form: terms sorted by (degree, word), fractions reduced.

    Used verbatim in reports and golden files, so the ordering and the
    sign/coefficient conventions here are frozen.
    """
    if not terms:
        return "0"
    parts = []
    for key in sorted(terms, key=lambda k: k.sort_key()):
        coeff = terms[key]
        body = key.render()
        mag = abs(coeff)
        if body == "1":
            chunk = str(mag)
        elif mag == 1:
            chunk = body
        else:
            chunk = f"{mag}*{body}"
        if not parts:
            parts.append(chunk if coeff > 0 else f"-{chunk}")
        else:
            parts.append(f"+ {chunk}" if coeff > 0 else f"- {chunk}")
    return " ".join(parts)


def _from_items(items: Iterable[tuple[Word, Fraction]], mode: Mode) -> Polynomial:
    acc: dict[Word, Fraction] = {}
    for word, coeff in items:
        if word.mode is not mode:
            raise ModeMismatchError("word mode differs from polynomial mode")
        new = acc.get(word, Fraction(0)) + coeff
        if new:
            acc[word] = new
        else:
            acc.pop(word, None)
    return Polynomial(acc, mode)


def zero(mode: Mode) -> Polynomial:
    return Polynomial({}, mode)


def unit(mode: Mode) -> Polynomial:
    return Polynomial({Word.make((), mode): Fraction(1)}, mode)


def generator(i: int, mode: Mode, cap: int = DEFAULT_GENERATOR_CAP) -> Polynomial:
    if not isinstance(i, int) or i < 1 or i > cap:
        raise ValueError(f"generator index {i} outside 1..{cap}")
    return Polynomial({Word.make((i,), mode): Fraction(1)}, mode)


def sum_of_generators(indices: Iterable[int], mode: Mode,
                      cap: int = DEFAULT_GENERATOR_CAP) -> Polynomial:
    indices = sorted(set(indices))
    if not indices:
        raise ValueError("sum_of_generators needs a nonempty index set")
    result = zero(mode)
    for i in indices:
        result = add(result, generator(i, mode, cap))
    return result


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    _require_same_mode(p.mode, q.mode)
    acc = dict(p.terms)
    for word, coeff in q.terms.items():
        new = acc.get(word, Fraction(0)) + coeff
        if new:
            acc[word] = new
        else:
            acc.pop(word, None)
    return Polynomial(acc, p.mode)


def scale(c, p: Polynomial) -> Polynomial:
    c = Fraction(c)
    if not c:
        return zero(p.mode)
    return Polynomial({w: c * v for w, v in p.terms.items()}, p.mode)


def sub(p: Polynomial, q: Polynomial) -> Polynomial:
    return add(p, scale(-1, q))


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    _require_same_mode(p.mode, q.mode)
    acc: dict[Word, Fraction] = {}
    for wp, cp in p.terms.items():
        for wq, cq in q.terms.items():
            word = wp.concat(wq)
            new = acc.get(word, Fraction(0)) + cp * cq
            if new:
                acc[word] = new
            else:
                acc.pop(word, None)
    return Polynomial(acc, p.mode)


def power(p: Polynomial, n: int) -> Polynomial:
    if n < 0:
        raise ValueError("negative exponent")
    result = unit(p.mode)
    for _ in range(n):
        result = mul(result, p)
    return result


def varset(w: Word) -> frozenset[int]:
    return w.varset()


def exact_varset_component(p: Polynomial, subset: Iterable[int]) -> Polynomial:
    """Terms whose word contains exactly the given variables."""
    subset = frozenset(subset)
    kept = {w: c for w, c in p.terms.items() if w.varset() == subset}
    return Polynomial(kept, p.mode)


def multilinear_component(p: Polynomial, n: int) -> Polynomial:
    """Terms in which each of x1..xn occurs exactly once."""
    target = tuple(range(1, n + 1))
    kept = {w: c for w, c in p.terms.items() if tuple(sorted(w.letters)) == target}
    return Polynomial(kept, p.mode)
