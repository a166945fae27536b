"""The graded Z_2 polynomial algebra on variables ``v_chi``.

A :class:`Monomial` is the class of a representation that splits into
one-dimensional pieces; an :class:`Element` is a Z_2 combination of such
classes. Coefficients are implicit: a monomial is either present or not.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .characters import (Character, RankError, bits_from_elements, check_rank,
                         elements_from_bits, embed_bits)


def _same_rank(a, b):
    if a.rank != b.rank:
        raise RankError(f"rank mismatch: {a.rank} vs {b.rank}")


@dataclass(frozen=True)
class Monomial:
    """Product ``v_{c1}^{m1} ... v_{ck}^{mk}`` of nontrivial-character variables.

    ``factors`` is the sorted tuple of ``(character_bits, multiplicity)``.
    Build instances through :meth:`from_counts` or :meth:`from_chars`
    unless the tuple is already canonical.
    """

    rank: int
    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        check_rank(self.rank)
        prev = 0
        for bits, mult in self.factors:
            if bits == 0:
                raise ValueError("trivial character in isotropy monomial")
            if bits <= prev or bits >> self.rank:
                raise ValueError(f"non-canonical factor list {self.factors!r}")
            if mult < 1:
                raise ValueError(f"multiplicity {mult} must be positive")
            prev = bits

    @classmethod
    def from_counts(cls, rank: int, counts: Mapping[int, int]) -> Monomial:
        return cls(rank, tuple(sorted((b, m) for b, m in counts.items() if m)))

    @classmethod
    def from_chars(cls, rank: int, chars: Iterable[int]) -> Monomial:
        """Monomial of a direct sum of lines, one per entry of ``chars`` (bitmasks)."""
        return cls.from_counts(rank, Counter(chars))

    @classmethod
    def one(cls, rank: int) -> Monomial:
        return cls(rank)

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.factors)

    def counts(self) -> dict[int, int]:
        return dict(self.factors)

    def chars(self) -> list[int]:
        """Factors expanded with multiplicity, in canonical order."""
        return [b for b, m in self.factors for _ in range(m)]

    def __mul__(self, other: Monomial) -> Monomial:
        _same_rank(self, other)
        counts = Counter(dict(self.factors))
        counts.update(dict(other.factors))
        return Monomial.from_counts(self.rank, counts)

    def square(self) -> Monomial:
        return Monomial(self.rank, tuple((b, 2 * m) for b, m in self.factors))

    def twist(self, chi_bits: int, s: int) -> Monomial:
        """Tensor every factor with the D-character ``chi_bits`` of rank ``s``.

        The result lives on the flattened group ``D x G`` of rank ``s + rank``.
        """
        rank = check_rank(s + self.rank)
        return Monomial.from_counts(
            rank, {embed_bits(chi_bits, b, s): m for b, m in self.factors})

    def widen(self, q: int) -> Monomial:
        """View a D-monomial as a ``D x G`` monomial, ``q`` the rank of G."""
        return Monomial(check_rank(self.rank + q), self.factors)

    def __str__(self):
        if not self.factors:
            return "1"
        parts = []
        for bits, m in self.factors:
            v = "v[" + ",".join(map(str, elements_from_bits(bits))) + "]"
            parts.append(v if m == 1 else f"{v}^{m}")
        return "*".join(parts)

    def to_json(self) -> list:
        return [[elements_from_bits(b), m] for b, m in self.factors]

    @classmethod
    def from_json(cls, data, rank: int) -> Monomial:
        counts: Counter[int] = Counter()
        for entry in data:
            elems, mult = entry
            if not isinstance(mult, int) or mult < 1:
                raise ValueError(f"bad multiplicity {mult!r}")
            counts[bits_from_elements(elems, rank)] += mult
        return cls.from_counts(rank, counts)

    @classmethod
    def parse(cls, text: str, rank: int) -> Monomial:
        text = text.strip()
        if text == "1":
            return cls.one(rank)
        counts: Counter[int] = Counter()
        for piece in text.split("*"):
            match = _VAR.fullmatch(piece.strip())
            if match is None:
                raise ValueError(f"cannot parse factor {piece!r}")
            elems = [int(x) for x in match["elems"].split(",") if x.strip()]
            counts[bits_from_elements(elems, rank)] += int(match["exp"] or 1)
        return cls.from_counts(rank, counts)


_VAR = re.compile(r"v\[(?P<elems>[0-9,\s]*)\](?:\^(?P<exp>[0-9]+))?")


@dataclass(frozen=True)
class Element:
    """A Z_2 combination of monomials, kept in canonical (sorted) order."""

    rank: int
    terms: tuple[Monomial, ...] = ()

    @classmethod
    def from_monomials(cls, rank: int, monomials: Iterable[Monomial]) -> Element:
        """Sum with Z_2 cancellation: a monomial survives iff it occurs an odd number of times."""
        check_rank(rank)
        parity: Counter[Monomial] = Counter()
        for mono in monomials:
            if mono.rank != rank:
                raise RankError(f"rank mismatch: {mono.rank} vs {rank}")
            parity[mono] += 1
        kept = [m for m, c in parity.items() if c & 1]
        return cls(rank, tuple(sorted(kept, key=_mono_key)))

    @classmethod
    def zero(cls, rank: int) -> Element:
        return cls(check_rank(rank))

    @classmethod
    def one(cls, rank: int) -> Element:
        return cls(check_rank(rank), (Monomial.one(rank),))

    @classmethod
    def monomial(cls, mono: Monomial) -> Element:
        return cls(mono.rank, (mono,))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __add__(self, other: Element) -> Element:
        _same_rank(self, other)
        return Element(self.rank, tuple(sorted(set(self.terms) ^ set(other.terms),
                                               key=_mono_key)))

    __sub__ = __add__

    def __mul__(self, other: Element) -> Element:
        _same_rank(self, other)
        return Element.from_monomials(
            self.rank, (a * b for a in self.terms for b in other.terms))

    def square(self) -> Element:
        # Frobenius: cross terms appear twice and cancel.
        return Element(self.rank, tuple(sorted((m.square() for m in self.terms),
                                               key=_mono_key)))

    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self.terms}) <= 1

    def __str__(self):
        return " + ".join(map(str, self.terms)) if self.terms else "0"

    def to_json(self) -> dict:
        return {"rank": self.rank, "terms": [m.to_json() for m in self.terms]}

    @classmethod
    def from_json(cls, data) -> Element:
        rank = check_rank(data["rank"])
        return cls.from_monomials(rank, (Monomial.from_json(t, rank) for t in data["terms"]))

    @classmethod
    def parse(cls, text: str, rank: int) -> Element:
        text = text.strip()
        if text == "0":
            return cls.zero(rank)
        return cls.from_monomials(rank, (Monomial.parse(t, rank) for t in text.split("+")))


def _mono_key(m: Monomial):
    return m.factors


# Functional spellings of the ring operations.

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return a * b


def elem_add(a: Element, b: Element) -> Element:
    return a + b


def elem_mul(a: Element, b: Element) -> Element:
    return a * b


def elem_square(a: Element) -> Element:
    return a.square()


def mono_substitute_twist(m: Monomial, chi: Character) -> Monomial:
    return m.twist(chi.bits, chi.rank)
