"""Fixed-point models of G-manifolds with finitely many stationary points.

Only the isotropy data at stationary points is modelled: a
:class:`FixedPointModel` is a labelled list of tangent monomials. The
constructors here build those lists for real and complex flag manifolds
with coordinate actions, real projective spaces with diagonal actions,
and generalized Dold manifolds over conjugation spaces.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence, Union

from .characters import RankError, bits_from_elements, check_rank, elements_from_bits
from .repring import Monomial

Partition = tuple[tuple[int, ...], ...]


class ModelError(ValueError):
    pass


@dataclass(frozen=True)
class FixedPointModel:
    rank: int
    points: tuple[tuple[str, Monomial], ...]
    dimension: int

    def __post_init__(self):
        check_rank(self.rank)
        if self.dimension < 0:
            raise ModelError(f"negative dimension {self.dimension}")
        seen = set()
        for label, rep in self.points:
            if label in seen:
                raise ModelError(f"duplicate point label {label!r}")
            seen.add(label)
            if rep.rank != self.rank:
                raise RankError(f"point {label!r} has rank {rep.rank}, model has {self.rank}")
            if rep.degree != self.dimension:
                raise ModelError(f"point {label!r} has degree {rep.degree}, "
                                 f"model dimension is {self.dimension}")

    def __len__(self):
        return len(self.points)

    @property
    def labels(self) -> list[str]:
        return [label for label, _ in self.points]

    def rep(self, label: str) -> Monomial:
        for name, rep in self.points:
            if name == label:
                return rep
        raise KeyError(label)


@dataclass(frozen=True)
class ConjugationModel:
    """Stationary data of the real part ``X_R`` of a conjugation space ``X``.

    The complex side is recovered by :func:`complex_from_real`.
    """

    real_part: FixedPointModel

    @property
    def rank(self) -> int:
        return self.real_part.rank

    @property
    def dimension(self) -> int:
        return self.real_part.dimension

    @property
    def points(self):
        return self.real_part.points

    def __len__(self):
        return len(self.real_part)


Model = Union[FixedPointModel, ConjugationModel]


def as_fixed_point_model(x: Model) -> FixedPointModel:
    return x.real_part if isinstance(x, ConjugationModel) else x


@dataclass(frozen=True)
class FlagSpec:
    """Coordinate action of ``(Z_2)^q`` on the flag manifold of type ``parts``.

    ``S`` holds the distinct characters (bitmasks) spanning ``U``; it is
    stored sorted so enumeration order does not depend on input order.
    """

    q: int
    S: tuple[int, ...]
    parts: tuple[int, ...]

    def __post_init__(self):
        check_rank(self.q)
        S = tuple(sorted(self.S))
        if len(set(S)) != len(S):
            raise ModelError("characters in S must be pairwise distinct "
                             "(stationary set not finite)")
        if any(b < 0 or b >> self.q for b in S):
            raise ModelError(f"character in S exceeds rank {self.q}")
        parts = tuple(self.parts)
        if not parts:
            raise ModelError("parts must be nonempty")
        if any(isinstance(n, bool) or not isinstance(n, int) or n < 1 for n in parts):
            raise ModelError(f"parts must be positive integers, got {parts!r}")
        if sum(parts) != len(S):
            raise ModelError(f"parts sum to {sum(parts)} but |S| = {len(S)}")
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, q: int, S: Sequence[Sequence[int]], parts: Sequence[int]) -> FlagSpec:
        return cls(q, tuple(bits_from_elements(a, q) for a in S), tuple(parts))

    @property
    def n(self) -> int:
        return len(self.S)

    @property
    def real_dimension(self) -> int:
        p = self.parts
        return sum(p[i] * p[j] for i in range(len(p)) for j in range(i + 1, len(p)))


@dataclass(frozen=True)
class ProjSpec:
    """Diagonal action of ``D = (Z_2)^s`` on ``RP^m`` through characters ``chars``."""

    s: int
    chars: tuple[int, ...]

    def __post_init__(self):
        check_rank(self.s)
        chars = tuple(self.chars)
        if not chars:
            raise ModelError("need at least one character (m >= 0)")
        if any(b < 0 or b >> self.s for b in chars):
            raise ModelError(f"character exceeds rank {self.s}")
        if len(set(chars)) != len(chars):
            raise ModelError("duplicate characters: stationary set not finite")
        object.__setattr__(self, "chars", chars)

    @classmethod
    def of(cls, s: int, chars: Sequence[Sequence[int]]) -> ProjSpec:
        return cls(s, tuple(bits_from_elements(c, s) for c in chars))

    @property
    def m(self) -> int:
        return len(self.chars) - 1


def multinomial(parts: Sequence[int]) -> int:
    total, out = 0, 1
    for k in parts:
        total += k
        out *= math.comb(total, k)
    return out


def _chars_json(bits_list) -> list[list[int]]:
    return [elements_from_bits(b) for b in bits_list]


def flag_label(partition: Partition) -> str:
    return json.dumps([_chars_json(block) for block in partition], separators=(",", ":"))


def point_space(q: int) -> ConjugationModel:
    return ConjugationModel(FixedPointModel(check_rank(q), (("pt", Monomial.one(q)),), 0))


def flag_fixed_points(spec: FlagSpec) -> list[Partition]:
    """Ordered partitions of ``S`` with block sizes ``parts``, lexicographically ordered."""
    out: list[Partition] = []

    def rec(remaining: tuple[int, ...], i: int, acc: list[tuple[int, ...]]):
        if i == len(spec.parts):
            out.append(tuple(acc))
            return
        for block in combinations(remaining, spec.parts[i]):
            rest = tuple(x for x in remaining if x not in block)
            acc.append(block)
            rec(rest, i + 1, acc)
            acc.pop()

    rec(spec.S, 0, [])
    return out


def real_flag_tangent(spec: FlagSpec, partition: Partition) -> Monomial:
    """Tangent monomial at a coordinate flag: one line ``a ^ b`` per ``a`` in block i, ``b`` in block j > i."""
    counts: Counter[int] = Counter()
    for i, block_i in enumerate(partition):
        for block_j in partition[i + 1:]:
            for a in block_i:
                for b in block_j:
                    if a == b:
                        raise ModelError("invalid partition: blocks share a character")
                    counts[a ^ b] += 1
    return Monomial.from_counts(spec.q, counts)


def real_flag_space(spec: FlagSpec) -> ConjugationModel:
    points = tuple((flag_label(p), real_flag_tangent(spec, p)) for p in flag_fixed_points(spec))
    return ConjugationModel(FixedPointModel(spec.q, points, spec.real_dimension))


def complex_from_real(x: ConjugationModel) -> FixedPointModel:
    """Stationary data of the complex side, restricted to the real stationary points.

    Complex stationary points off ``X_R`` come in ``sigma``-pairs with equal
    tangent classes and are dropped; each real tangent monomial is squared.
    """
    r = x.real_part
    return FixedPointModel(r.rank, tuple((label, rep.square()) for label, rep in r.points),
                           2 * r.dimension)


def complex_flag_space(spec: FlagSpec) -> FixedPointModel:
    return complex_from_real(real_flag_space(spec))


def proj_tangent(spec: ProjSpec, j: int) -> Monomial:
    """Tangent monomial of ``RP^m`` at ``[e_j]`` (``j`` is 1-based)."""
    cj = spec.chars[j - 1]
    return Monomial.from_chars(spec.s, (ci ^ cj for i, ci in enumerate(spec.chars, 1) if i != j))


def proj_space(spec: ProjSpec) -> FixedPointModel:
    points = tuple((f"[e_{j}]", proj_tangent(spec, j)) for j in range(1, spec.m + 2))
    return FixedPointModel(spec.s, points, spec.m)


def dold_fixed_data(proj: ProjSpec, base: ConjugationModel) -> FixedPointModel:
    """Stationary data of the generalized Dold manifold ``P(m, X)`` under ``D x G``.

    The tangent space at ``[e_j, p]`` splits as the projective tangent
    space, the real tangent space at ``p``, and the latter tensored with
    the line ``E_j``.
    """
    if not isinstance(base, ConjugationModel):
        raise ModelError("Dold base must be a conjugation space (point, real flags, "
                         "or their products and unions)")
    s, q = proj.s, base.rank
    check_rank(s + q)
    points = []
    for j in range(1, proj.m + 2):
        rp = proj_tangent(proj, j).widen(q)
        chi = proj.chars[j - 1]
        for label, f in base.points:
            rep = rp * f.twist(0, s) * f.twist(chi, s)
            points.append((f"[e_{j}, {label}]", rep))
    return FixedPointModel(s + q, tuple(points), proj.m + 2 * base.dimension)


def _product_fpm(a: FixedPointModel, b: FixedPointModel) -> FixedPointModel:
    if a.rank != b.rank:
        raise RankError(f"rank mismatch: {a.rank} vs {b.rank}")
    points = tuple((f"({la}, {lb})", ra * rb) for la, ra in a.points for lb, rb in b.points)
    return FixedPointModel(a.rank, points, a.dimension + b.dimension)


def _union_fpm(a: FixedPointModel, b: FixedPointModel) -> FixedPointModel:
    if a.rank != b.rank:
        raise RankError(f"rank mismatch: {a.rank} vs {b.rank}")
    if a.dimension != b.dimension:
        raise ModelError(f"dimension mismatch: {a.dimension} vs {b.dimension}")
    points = tuple((f"0:{label}", rep) for label, rep in a.points) + \
        tuple((f"1:{label}", rep) for label, rep in b.points)
    return FixedPointModel(a.rank, points, a.dimension)


def product_space(a: Model, b: Model) -> Model:
    """Cartesian product; stays a conjugation space when both factors are."""
    if isinstance(a, ConjugationModel) and isinstance(b, ConjugationModel):
        return ConjugationModel(_product_fpm(a.real_part, b.real_part))
    return _product_fpm(as_fixed_point_model(a), as_fixed_point_model(b))


def disjoint_union(a: Model, b: Model) -> Model:
    """Disjoint union; labels are prefixed ``0:`` / ``1:`` by summand."""
    if isinstance(a, ConjugationModel) and isinstance(b, ConjugationModel):
        return ConjugationModel(_union_fpm(a.real_part, b.real_part))
    return _union_fpm(as_fixed_point_model(a), as_fixed_point_model(b))


def swap_blocks(partition: Partition, i: int, j: int) -> Partition:
    blocks = list(partition)
    blocks[i], blocks[j] = blocks[j], blocks[i]
    return tuple(blocks)


def translate_partition(partition: Partition, gamma: int) -> Partition:
    """Apply ``a -> a ^ gamma`` to every character, keeping blocks sorted."""
    return tuple(tuple(sorted(a ^ gamma for a in block)) for block in partition)

