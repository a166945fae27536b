"""Characters of elementary abelian 2-groups.

A character of ``G = (Z_2)^q`` is identified with a subset ``alpha`` of
``{1, ..., q}``; it sends the generator ``t_k`` to ``-1`` exactly when
``k`` is in ``alpha``. Subsets are stored as bit vectors: element ``k``
lives in bit ``k - 1``, so the integer order on bit vectors is the
canonical character order used everywhere else in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

MAX_RANK = 30


class RankError(ValueError):
    pass


def check_rank(q: int) -> int:
    if isinstance(q, bool) or not isinstance(q, int):
        raise RankError(f"group rank must be an integer, got {q!r}")
    if not 0 <= q <= MAX_RANK:
        raise RankError(f"group rank {q} outside [0, {MAX_RANK}]")
    return q


def bits_from_elements(elements: Iterable[int], q: int) -> int:
    bits = 0
    for k in elements:
        if isinstance(k, bool) or not isinstance(k, int) or not 1 <= k <= q:
            raise ValueError(f"character element {k!r} not in [1, {q}]")
        if bits >> (k - 1) & 1:
            raise ValueError(f"repeated element {k} in character")
        bits |= 1 << (k - 1)
    return bits


def elements_from_bits(bits: int) -> list[int]:
    out = []
    k = 1
    while bits:
        if bits & 1:
            out.append(k)
        bits >>= 1
        k += 1
    return out


def sign(alpha: int, beta: int) -> int:
    """Value of the character ``y_alpha`` on the group element ``t_beta``.

    ``-1`` iff ``alpha & beta`` has odd cardinality.
    """
    return -1 if (alpha & beta).bit_count() & 1 else 1


@dataclass(frozen=True, order=True)
class Character:
    bits: int
    rank: int

    def __post_init__(self):
        check_rank(self.rank)
        if self.bits < 0 or self.bits >> self.rank:
            raise ValueError(f"bits {self.bits:#b} exceed rank {self.rank}")

    @classmethod
    def of(cls, elements: Iterable[int], rank: int) -> Character:
        check_rank(rank)
        return cls(bits_from_elements(elements, rank), rank)

    @classmethod
    def trivial(cls, rank: int) -> Character:
        return cls(0, rank)

    @property
    def elements(self) -> list[int]:
        return elements_from_bits(self.bits)

    @property
    def is_trivial(self) -> bool:
        return self.bits == 0

    def compose(self, other: Character) -> Character:
        if self.rank != other.rank:
            raise RankError(f"rank mismatch: {self.rank} vs {other.rank}")
        return Character(self.bits ^ other.bits, self.rank)

    __xor__ = compose

    def __call__(self, group_element: Character) -> int:
        if self.rank != group_element.rank:
            raise RankError(f"rank mismatch: {self.rank} vs {group_element.rank}")
        return sign(self.bits, group_element.bits)

    def to_json(self) -> list[int]:
        return self.elements

    @classmethod
    def from_json(cls, data, rank: int) -> Character:
        if not isinstance(data, list):
            raise ValueError(f"character must be a list of integers, got {data!r}")
        return cls.of(data, rank)

    def __str__(self):
        return "{" + ",".join(map(str, self.elements)) + "}"


def char_compose(a: Character, b: Character) -> Character:
    return a.compose(b)


def char_eval(y: Character, t: Character) -> int:
    return y(t)


def embed_bits(d_bits: int, g_bits: int, s: int) -> int:
    """Flatten a character of ``D x G``: D-bits first, then G-bits shifted by ``s``."""
    return d_bits | (g_bits << s)


def char_embed_product(d_char: Character, g_char: Character) -> Character:
    return Character(embed_bits(d_char.bits, g_char.bits, d_char.rank),
                     check_rank(d_char.rank + g_char.rank))


def all_characters(q: int) -> list[Character]:
    check_rank(q)
    return [Character(b, q) for b in range(1 << q)]
