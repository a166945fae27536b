import pytest
from hypothesis import given, settings, strategies as st

from eqcobord.characters import Character
from eqcobord.cobordism import (block_swap_check, check_dold_equivalence, dold_eta_formula, eta,
                                euler_parity, translation_family, involution_witness,
                                is_null_cobordant, pairing_witness, rp_nonvanishing_criterion)
from eqcobord.repring import Element, Monomial
from eqcobord.spaces import (FlagSpec, ModelError, ProjSpec, complex_from_real,
                             disjoint_union, dold_fixed_data, multinomial, point_space,
                             product_space, proj_space, real_flag_space)
from eqcobord.suites import random_conjugation_model

from conftest import flag_specs, proj_specs

RP1 = ProjSpec.of(2, [[1], [2]])
RP2 = ProjSpec.of(3, [[1], [2], [3]])
FLAG_11 = FlagSpec.of(2, [[1], [2]], [1, 1])
FLAG_12 = FlagSpec.of(2, [[1], [2], [1, 2]], [1, 2])


def test_eta_examples():
    assert eta(proj_space(RP1)) == Element.zero(2)
    value = eta(proj_space(RP2))
    assert len(value) == 3
    x = real_flag_space(FLAG_12)
    assert eta(disjoint_union(x, x)) == Element.zero(2)
    assert eta(point_space(2)) == Element.one(2)


def test_null_examples():
    assert is_null_cobordant(real_flag_space(FLAG_11))
    assert not is_null_cobordant(proj_space(RP2))


def test_pairing_examples():
    w = pairing_witness(real_flag_space(FLAG_11))
    assert len(w.pairs) == 1 and w.complete
    w = pairing_witness(proj_space(RP2))
    assert not w.pairs and w.residual == ("[e_1]", "[e_2]", "[e_3]")


def test_pairing_residual_is_odd_classes():
    x = real_flag_space(FlagSpec.of(3, [[1], [2], [3], [1, 2]], [1, 1, 2]))
    w = pairing_witness(x)
    assert w.verify(x)
    counts = {}
    for _, rep in x.points:
        counts[rep] = counts.get(rep, 0) + 1
    assert len(w.residual) == sum(c % 2 for c in counts.values())


def test_involution_witness_rejects_bad_maps():
    x = proj_space(RP2)
    with pytest.raises(ModelError):
        involution_witness(x, {"[e_1]": "[e_2]", "[e_2]": "[e_1]", "[e_3]": "[e_3]"}.get)


def test_dold_formula_examples():
    base = real_flag_space(FLAG_11)
    assert dold_eta_formula(RP1, base) == Element.zero(4)
    assert dold_eta_formula(RP1, base) == eta(dold_fixed_data(RP1, base))
    for proj in (RP1, RP2, ProjSpec.of(2, [[1], [2], [1, 2]])):
        widened = Element.from_monomials(proj.s + 2, (r.widen(2) for _, r in proj_space(proj).points))
        assert dold_eta_formula(proj, point_space(2)) == widened


@settings(max_examples=40, deadline=None)
@given(proj_specs(m_max=3), flag_specs(q_max=3, n_max=5))
def test_dold_formula_matches_assembly(proj, spec):
    base = real_flag_space(spec)
    assert dold_eta_formula(proj, base) == eta(dold_fixed_data(proj, base))


def test_dold_equivalence_null_base():
    base = real_flag_space(FlagSpec.of(3, [[1], [2], [3], [1, 2]], [2, 2]))
    report = check_dold_equivalence(RP2, base)
    assert report.complex_null and report.dold_null and report.passed
    assert report.dold_witness.complete


def test_dold_equivalence_nonnull_base():
    base = real_flag_space(FLAG_12)
    assert euler_parity(FLAG_12.parts) == "odd"
    report = check_dold_equivalence(RP1, base)
    assert not report.complex_null and not report.dold_null and report.passed


def test_dold_equivalence_needs_positive_dimension():
    # X a point: [X, G] != 0 but P(1, X) = RP^1 bounds.
    report = check_dold_equivalence(RP1, point_space(2))
    assert not report.complex_null and report.dold_null
    assert not report.applicable and not report.equivalent
    assert report.formula_agrees


def test_euler_parity_examples():
    assert euler_parity([1, 2]) == "odd"
    assert euler_parity([1, 3]) == "even"
    assert euler_parity([1, 2, 3]) == "even"
    with pytest.raises(ValueError):
        euler_parity([])


@given(st.lists(st.integers(1, 40), min_size=1, max_size=6))
def test_euler_parity_matches_multinomial(parts):
    assert (euler_parity(parts) == "odd") == (multinomial(parts) % 2 == 1)


def test_rp_criterion_examples():
    assert rp_nonvanishing_criterion(RP1) is False
    assert rp_nonvanishing_criterion(RP2) is True
    assert rp_nonvanishing_criterion(ProjSpec.of(2, [[1]])) is True


@given(proj_specs(m_max=5))
def test_rp_criterion_agrees_with_eta(spec):
    assert rp_nonvanishing_criterion(spec) == (not is_null_cobordant(proj_space(spec)))


def test_translation_family_instances():
    r = translation_family(3, Character.of([1, 2, 3], 3), [1, 2, 3])
    assert r.null and r.passed and len(r.witness.pairs) == 30
    for a, b in r.witness.pairs:
        assert a != b
    assert translation_family(3, Character.of([1], 3), [1, 5]).passed
    r = translation_family(2, Character.of([1, 2], 2), [1, 1])
    assert r.null and r.passed and len(r.witness.pairs) == 1


def test_translation_family_even_first_part_has_no_claim():
    r = translation_family(3, 0b001, [2, 4])
    assert not r.first_part_odd and r.passed


def test_translation_family_arity():
    with pytest.raises(ValueError, match="2\\^q - 2"):
        translation_family(3, 0b111, [1, 2])
    with pytest.raises(ValueError, match="nonempty"):
        translation_family(3, 0, [1, 5])


def test_block_swap_check():
    r = block_swap_check(FlagSpec.of(3, [[1], [2], [3], [1, 2]], [1, 2, 1]))
    assert r.blocks == (0, 2) and r.passed and r.witness.complete
    r = block_swap_check(FLAG_12)
    assert r.blocks is None


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_eta_is_a_ring_homomorphism(seed):
    import random
    rng = random.Random(seed)
    a = random_conjugation_model(rng, q=2)
    b = random_conjugation_model(rng, q=2)
    assert eta(product_space(a, b)) == eta(a) * eta(b)
    if a.dimension == b.dimension:
        assert eta(disjoint_union(a, b)) == eta(a) + eta(b)
    assert eta(complex_from_real(a)) == eta(a).square()
    assert is_null_cobordant(complex_from_real(a)) == is_null_cobordant(a)


@settings(max_examples=60, deadline=None)
@given(flag_specs(n_max=6))
def test_null_iff_witness_complete(spec):
    x = real_flag_space(spec)
    w = pairing_witness(x)
    assert w.verify(x)
    assert w.complete == is_null_cobordant(x)
    if euler_parity(spec.parts) == "odd":
        assert not is_null_cobordant(x)
    if len(set(spec.parts)) < len(spec.parts):
        assert is_null_cobordant(x)


def test_monomial_classes_even_iff_null():
    x = real_flag_space(FlagSpec.of(3, [[1], [2], [3], [1, 2], [2, 3]], [1, 4]))
    counts = {}
    for _, rep in x.points:
        counts[rep] = counts.get(rep, 0) + 1
    assert is_null_cobordant(x) == all(c % 2 == 0 for c in counts.values())
    assert isinstance(next(iter(counts)), Monomial)
