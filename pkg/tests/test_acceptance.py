"""Exit criteria. Every check is exact equality over Z_2; each test prints one line."""

import json
import random

from eqcobord.characters import Character
from eqcobord.cobordism import (eta, translation_family, is_null_cobordant,
                                pairing_witness)
from eqcobord.oracle import oracle_proj_rep
from eqcobord.repring import Element
from eqcobord.spaces import (ProjSpec, flag_fixed_points, proj_space,
                             proj_tangent, translate_partition, flag_label)
from eqcobord.suites import (random_element, suite_euler, suite_flag_pairings,
                             suite_complex_square, suite_oracle, suite_rp_criterion,
                             suite_dold_equivalence)


def emit(report, number, title, ok, detail=""):
    report(f"\ncriterion {number} [{'PASS' if ok else 'FAIL'}] {title}" + (f": {detail}" if detail else ""))


def test_criterion_1_rp_decisions(report):
    rp1, rp2 = ProjSpec.of(2, [[1], [2]]), ProjSpec.of(3, [[1], [2], [3]])
    x1, x2 = proj_space(rp1), proj_space(rp2)
    w2 = pairing_witness(x2)
    oracle_ok = all(oracle_proj_rep(spec, j) == proj_tangent(spec, j)
                    for spec in (rp1, rp2) for j in range(1, spec.m + 2))
    sweep = suite_rp_criterion(s_max=3, m_max=5)
    ok = (eta(x1) == Element.zero(2) and is_null_cobordant(x1)
          and bool(eta(x2)) and len(w2.residual) == 3
          and oracle_ok and sweep.passed)
    emit(report, 1, "RP^m decisions and criterion sweep", ok, f"{sweep.cases} sweep checks")
    assert ok, sweep.failures[:5]


def test_criterion_2_complex_square(report):
    res = suite_complex_square(seed=0, cases=200)
    ok = res.passed and res.cases == 200
    emit(report, 2, "complex side is the square of the real part", ok,
         f"{res.cases} models, {len(res.failures)} failures")
    assert ok, res.failures[:5]


def test_criterion_3_dold_equivalence(report):
    res = suite_dold_equivalence(seed=0, cases=200)
    # two checks per instance: equivalence and formula agreement
    ok = res.passed and res.cases == 400
    emit(report, 3, "base null <=> Dold null, with formula agreement", ok,
         f"200 pairs, bases {res.info['bases']}, {len(res.failures)} failures")
    assert ok, res.failures[:5]


def test_criterion_4_translation_family(report):
    big = translation_family(3, Character.of([1, 2, 3], 3), [1, 2, 3])
    flags = flag_fixed_points(big.spec)
    image = {flag_label(p): flag_label(translate_partition(p, big.gamma)) for p in flags}
    pairs_are_translates = all(image[a] == b for a, b in big.witness.pairs)
    grass = translation_family(3, Character.of([1], 3), [1, 5])
    small = translation_family(2, Character.of([1, 2], 2), [1, 1])
    ok = (len(flags) == 60 and big.null and big.passed and len(big.witness.pairs) == 30
          and pairs_are_translates and grass.null and grass.passed
          and small.null and small.passed)
    emit(report, 4, "flags on 2^q - 2 characters bound", ok,
         f"60 flags -> {len(big.witness.pairs)} translation pairs")
    assert ok, json.dumps(big.to_json())[:500]


def test_criterion_5_block_swap(report):
    res = suite_flag_pairings(q_max=3, n_max=6)
    ok = res.passed and res.info["repeated_part_specs"] > 0
    emit(report, 5, "repeated part sizes bound via block swap", ok,
         f"{res.info['repeated_part_specs']} specs")
    assert ok, res.failures[:5]


def test_criterion_6_euler_parity(report):
    res = suite_euler(n_max=20, q_max=3, flag_n_max=6)
    ok = res.passed and res.info["odd_parity_flags"] > 0
    emit(report, 6, "Euler parity rule and odd-parity non-vanishing", ok,
         f"{res.cases} checks, {res.info['odd_parity_flags']} odd-parity flags")
    assert ok, res.failures[:5]


def test_criterion_7_oracle_equivalence(report):
    res = suite_oracle(q_max=3, n_max=5)
    ok = res.passed and all(res.info["negative_controls"].values())
    emit(report, 7, "fast paths equal sign-action oracles", ok,
         f"{res.info['flags_compared']} flags, controls {res.info['negative_controls']}")
    assert ok, res.failures[:5]


def test_criterion_8_algebra_properties(report):
    rng = random.Random(8)
    failures = []
    for case in range(1000):
        rank = rng.randint(1, 4)
        a, b, c = (random_element(rng, rank) for _ in range(3))
        zero, one = Element.zero(rank), Element.one(rank)
        checks = {
            "add_assoc": (a + b) + c == a + (b + c),
            "add_comm": a + b == b + a,
            "add_identity": a + zero == a,
            "char_2": a + a == zero,
            "mul_assoc": (a * b) * c == a * (b * c),
            "mul_comm": a * b == b * a,
            "mul_identity": a * one == a,
            "mul_zero": a * zero == zero,
            "distributive": a * (b + c) == a * b + a * c,
            "frobenius": a.square() == a * a and (a + b).square() == a.square() + b.square(),
            "text_round_trip": Element.parse(str(a), rank) == a,
            "json_round_trip": Element.from_json(json.loads(json.dumps(a.to_json()))) == a,
        }
        ma, mb = a.terms[:1], b.terms[:1]
        if ma and mb:
            prod = Element.monomial(ma[0]) * Element.monomial(mb[0])
            checks["grading"] = all(t.degree == ma[0].degree + mb[0].degree for t in prod)
        failures += [f"case {case}: {name}" for name, ok in checks.items() if not ok]
    ok = not failures
    emit(report, 8, "ring axioms, Frobenius, grading, round trip", ok,
         f"1000 cases, {len(failures)} failures")
    assert ok, failures[:5]
