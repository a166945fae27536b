"""Stong's invariant and vanishing decisions for equivariant cobordism classes.

``eta`` sends a model to the Z_2 sum of its tangent monomials. Since the
invariant is injective on cobordism classes, a model bounds equivariantly
iff that sum is zero, i.e. iff every tangent monomial occurs an even
number of times.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Literal, Sequence

from .characters import Character, char_embed_product
from .repring import Element, Monomial
from .spaces import (ConjugationModel, FlagSpec, Model, ModelError,
                     ProjSpec, as_fixed_point_model, complex_from_real,
                     dold_fixed_data, flag_fixed_points, flag_label, real_flag_space, swap_blocks,
                     translate_partition)


def eta(x: Model) -> Element:
    x = as_fixed_point_model(x)
    return Element.from_monomials(x.rank, (rep for _, rep in x.points))


def is_null_cobordant(x: Model) -> bool:
    return not eta(x)


@dataclass(frozen=True)
class PairingWitness:
    """Matching of stationary points with equal tangent monomials.

    Points left in ``residual`` have no partner; the class vanishes iff
    ``residual`` is empty.
    """

    pairs: tuple[tuple[str, str], ...]
    residual: tuple[str, ...]

    @property
    def complete(self) -> bool:
        return not self.residual

    def to_json(self) -> dict:
        return {"pairs": [list(p) for p in self.pairs], "residual": list(self.residual)}

    def verify(self, x: Model) -> bool:
        """Check the witness is a well-formed certificate for ``x``."""
        x = as_fixed_point_model(x)
        reps = dict(x.points)
        used = [label for pair in self.pairs for label in pair] + list(self.residual)
        if sorted(used) != sorted(reps):
            return False
        return all(a != b and reps[a] == reps[b] for a, b in self.pairs)


def pairing_witness(x: Model) -> PairingWitness:
    x = as_fixed_point_model(x)
    classes: dict[Monomial, list[str]] = defaultdict(list)
    for label, rep in x.points:
        classes[rep].append(label)
    pairs, residual = [], []
    for labels in classes.values():
        labels = sorted(labels)
        if len(labels) & 1:
            residual.append(labels.pop(0))
        pairs.extend(zip(labels[::2], labels[1::2]))
    return PairingWitness(tuple(sorted(pairs)), tuple(sorted(residual)))


def involution_witness(x: Model, image: Callable[[str], str]) -> PairingWitness:
    """Witness built from a label involution; fixed labels land in ``residual``.

    Raises ``ModelError`` if ``image`` is not an involution on the labels
    or does not preserve tangent monomials.
    """
    x = as_fixed_point_model(x)
    reps = dict(x.points)
    pairs, residual = [], []
    for label in reps:
        other = image(label)
        if other not in reps or image(other) != label:
            raise ModelError(f"map is not an involution at {label!r}")
        if reps[other] != reps[label]:
            raise ModelError(f"{label!r} and {other!r} have different tangent monomials")
        if other == label:
            residual.append(label)
        elif label < other:
            pairs.append((label, other))
    return PairingWitness(tuple(pairs), tuple(residual))


def dold_eta_formula(proj: ProjSpec, base: ConjugationModel) -> Element:
    """Stong invariant of ``P(m, X)`` expanded from the real stationary data of ``X``.

    Sums, over real stationary points ``p`` and ``j = 1..m+1``, the product
    of ``chi_i (x) chi_j`` over ``i != j``, the tangent class ``f_p`` pushed
    into ``D x G``, and ``f_p`` with each variable ``y`` replaced by
    ``chi_j (x) y``.
    """
    s, q = proj.s, base.rank
    rank = s + q
    d_chars = [Character(c, s) for c in proj.chars]
    trivial_d = Character.trivial(s)
    trivial_g = Character.trivial(q)
    terms = []
    for _, f in base.points:
        ys = [Character(b, q) for b in f.chars()]
        for j, chi_j in enumerate(d_chars):
            factors = [char_embed_product(chi_i.compose(chi_j), trivial_g)
                       for i, chi_i in enumerate(d_chars) if i != j]
            factors += [char_embed_product(trivial_d, y) for y in ys]
            factors += [char_embed_product(chi_j, y) for y in ys]
            terms.append(Monomial.from_chars(rank, (c.bits for c in factors)))
    return Element.from_monomials(rank, terms)


@dataclass
class DoldReport:
    """Both sides of ``[X, G] = 0 <=> [P(m, X), D x G] = 0`` for one instance."""

    base_dimension: int
    real_null: bool
    complex_null: bool
    dold_null: bool
    formula_agrees: bool
    complex_witness: PairingWitness
    dold_witness: PairingWitness

    @property
    def applicable(self) -> bool:
        # For a zero-dimensional X the Dold space is a copy of RP^m, which
        # can bound while the point does not.
        return self.base_dimension >= 1

    @property
    def equivalent(self) -> bool:
        return self.complex_null == self.dold_null

    @property
    def passed(self) -> bool:
        return self.formula_agrees and (self.equivalent or not self.applicable)

    def to_json(self) -> dict:
        return {
            "base_dimension": self.base_dimension,
            "applicable": self.applicable,
            "real_null": self.real_null,
            "complex_null": self.complex_null,
            "dold_null": self.dold_null,
            "equivalent": self.equivalent,
            "formula_agrees": self.formula_agrees,
            "passed": self.passed,
            "complex_witness": self.complex_witness.to_json(),
            "dold_witness": self.dold_witness.to_json(),
        }


def check_dold_equivalence(proj: ProjSpec, base: ConjugationModel) -> DoldReport:
    cx = complex_from_real(base)
    dold = dold_fixed_data(proj, base)
    dold_eta = eta(dold)
    return DoldReport(
        base_dimension=base.dimension,
        real_null=is_null_cobordant(base),
        complex_null=is_null_cobordant(cx),
        dold_null=not dold_eta,
        formula_agrees=dold_eta == dold_eta_formula(proj, base),
        complex_witness=pairing_witness(cx),
        dold_witness=pairing_witness(dold),
    )


def euler_parity(parts: Sequence[int]) -> Literal["odd", "even"]:
    """Parity of ``n! / (n_1! ... n_r!)`` by counting binary digits (Kummer)."""
    if not parts:
        raise ValueError("parts must be nonempty")
    ones = sum(int(k).bit_count() for k in parts)
    return "odd" if sum(parts).bit_count() == ones else "even"


def rp_nonvanishing_criterion(spec: ProjSpec) -> bool:
    """Decide ``[RP^m, D] != 0`` from the characters alone, without tangent data.

    For ``m >= 2``: nonzero iff some difference ``chi_k ^ chi_i`` (``i != k``)
    is not of the form ``chi_l ^ chi_j`` for any ``l`` and any ``j`` outside
    ``{i, k}``. For ``m <= 1`` that quantifier is empty, so the two small
    cases are settled directly: ``RP^0`` is a point (nonzero) and the two
    stationary points of ``RP^1`` both carry ``chi_1 (x) chi_2`` (zero).
    """
    c = spec.chars
    n = len(c)
    if n == 1:
        return True
    if n == 2:
        return False
    for i in range(n):
        for k in range(n):
            if i == k:
                continue
            diff = c[k] ^ c[i]
            if all(c[l] ^ c[j] != diff for j in range(n) if j not in (i, k) for l in range(n)):
                return True
    return False


@dataclass
class SwapReport:
    """Block-swap involution on the coordinate flags of one spec."""

    spec: FlagSpec
    blocks: tuple[int, int] | None
    fixed_point_free: bool
    rep_preserving: bool
    null: bool
    witness: PairingWitness | None

    @property
    def passed(self) -> bool:
        if self.blocks is None:
            return True
        return self.fixed_point_free and self.rep_preserving and self.null

    def to_json(self) -> dict:
        return {"parts": list(self.spec.parts), "blocks": self.blocks,
                "fixed_point_free": self.fixed_point_free,
                "rep_preserving": self.rep_preserving, "null": self.null,
                "witness": self.witness.to_json() if self.witness else None}


def block_swap_check(spec: FlagSpec) -> SwapReport:
    """Verify that exchanging two blocks of equal size pairs up stationary flags."""
    x = real_flag_space(spec)
    null = is_null_cobordant(x)
    parts = spec.parts
    pair = next(((i, j) for i in range(len(parts)) for j in range(i + 1, len(parts))
                 if parts[i] == parts[j]), None)
    if pair is None:
        return SwapReport(spec, None, False, False, null, None)
    i, j = pair
    reps = dict(x.points)
    fpf, preserving = True, True
    image: dict[str, str] = {}
    for p in flag_fixed_points(spec):
        label, swapped = flag_label(p), flag_label(swap_blocks(p, i, j))
        fpf &= swapped != label and swapped in reps
        preserving &= reps.get(swapped) == reps[label]
        image[label] = swapped
    witness = None
    if fpf and preserving:
        witness = involution_witness(x, image.__getitem__)
    return SwapReport(spec, pair, fpf, preserving, null, witness)


@dataclass
class TranslationReport:
    """Null-cobordance of a flag manifold on ``2^q - 2`` characters."""

    q: int
    gamma: int
    spec: FlagSpec
    null: bool
    first_part_odd: bool
    translation_free: bool
    witness: PairingWitness | None

    @property
    def passed(self) -> bool:
        if not self.first_part_odd:
            return True
        return self.null and self.translation_free and self.witness is not None \
            and self.witness.complete

    def to_json(self) -> dict:
        return {"q": self.q, "gamma": Character(self.gamma, self.q).to_json(),
                "parts": list(self.spec.parts), "points": len(flag_fixed_points(self.spec)),
                "null": self.null, "first_part_odd": self.first_part_odd,
                "translation_free": self.translation_free, "passed": self.passed,
                "witness": self.witness.to_json() if self.witness else None}


def translation_family(q: int, gamma: Character | int, parts: Sequence[int]) -> TranslationReport:
    """Flags on all nonempty characters but ``gamma``, paired by ``E -> E ^ gamma``."""
    gbits = gamma.bits if isinstance(gamma, Character) else gamma
    if gbits == 0 or gbits >> q:
        raise ValueError("gamma must be a nonempty subset of [q]")
    if sum(parts) != 2 ** q - 2:
        raise ValueError(f"parts must sum to 2^q - 2 = {2 ** q - 2}, got {sum(parts)}")
    S = tuple(b for b in range(1, 1 << q) if b != gbits)
    spec = FlagSpec(q, S, tuple(parts))
    x = real_flag_space(spec)
    flags = flag_fixed_points(spec)
    labels = {p: flag_label(p) for p in flags}
    image = {labels[p]: labels.get(translate_partition(p, gbits), "") for p in flags}
    try:
        witness = involution_witness(x, lambda lab: image.get(lab, ""))
        translation_free = witness.complete
    except ModelError:
        witness, translation_free = None, False
    return TranslationReport(q, gbits, spec, is_null_cobordant(x), parts[0] % 2 == 1,
                             translation_free, witness)
