"""Verification suites: randomized and exhaustive sweeps over small models.

Each suite returns a :class:`SuiteResult`; the CLI ``check`` command and
the acceptance tests both drive these.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator

from .cobordism import (block_swap_check, check_dold_equivalence, eta, euler_parity,
                        translation_family, is_null_cobordant, rp_nonvanishing_criterion)
from .oracle import (oracle_dold_consistency, oracle_flag_fixed_points,
                     oracle_mixed_lines_moved, oracle_proj_rep, oracle_tangent_rep)
from .repring import Element, Monomial
from .spaces import (ConjugationModel, FlagSpec, ProjSpec, complex_from_real,
                     disjoint_union, flag_fixed_points, multinomial, product_space,
                     proj_space, proj_tangent, real_flag_space, real_flag_tangent)


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.cases > 0 and not self.failures

    def check(self, ok: bool, what: Callable[[], str]):
        self.cases += 1
        if not ok:
            self.failures.append(what())

    def to_json(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "cases": self.cases,
                "failures": self.failures[:20], "info": self.info}


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """All ordered tuples of positive integers summing to ``n``."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def flag_universe(q_max: int, n_max: int, n_min: int = 1) -> Iterator[FlagSpec]:
    """Every flag spec with ``1 <= q <= q_max`` and ``n_min <= |S| <= n_max``."""
    for q in range(1, q_max + 1):
        for n in range(n_min, min(n_max, 1 << q) + 1):
            for S in combinations(range(1 << q), n):
                for parts in compositions(n):
                    yield FlagSpec(q, S, parts)


# -- random models ---------------------------------------------------------

def random_composition(rng: random.Random, n: int, min_blocks: int = 1) -> tuple[int, ...]:
    while True:
        cuts = sorted(rng.sample(range(1, n), rng.randint(0, n - 1))) if n > 1 else []
        bounds = [0] + cuts + [n]
        parts = tuple(b - a for a, b in zip(bounds, bounds[1:]))
        if len(parts) >= min_blocks:
            return parts


def random_flag_spec(rng: random.Random, q: int, n_max: int = 6, n_min: int = 1,
                     min_blocks: int = 1, parts: tuple[int, ...] | None = None) -> FlagSpec:
    if parts is None:
        n = rng.randint(max(n_min, min_blocks), min(n_max, 1 << q))
        parts = random_composition(rng, n, min_blocks)
    S = rng.sample(range(1 << q), sum(parts))
    return FlagSpec(q, tuple(S), parts)


def random_conjugation_model(rng: random.Random, q: int | None = None,
                             positive_dim: bool = False) -> ConjugationModel:
    """A real flag, a product of two flags, or a union of two same-type flags."""
    q = q if q is not None else rng.randint(2, 3)
    blocks = 2 if positive_dim else 1
    kind = rng.choice(("flag", "flag", "product", "union"))
    if kind == "flag":
        return real_flag_space(random_flag_spec(rng, q, 6, min_blocks=blocks))
    if kind == "product":
        a = real_flag_space(random_flag_spec(rng, q, 4, min_blocks=blocks))
        b = real_flag_space(random_flag_spec(rng, q, 3))
        return product_space(a, b)
    first = random_flag_spec(rng, q, 5, min_blocks=blocks)
    second = random_flag_spec(rng, q, parts=first.parts)
    return disjoint_union(real_flag_space(first), real_flag_space(second))


def random_proj_spec(rng: random.Random, s_max: int = 3, m_max: int = 4) -> ProjSpec:
    s = rng.randint(1, s_max)
    m = rng.randint(1, min(m_max, (1 << s) - 1))
    return ProjSpec(s, tuple(rng.sample(range(1 << s), m + 1)))


def random_element(rng: random.Random, rank: int, max_terms: int = 4,
                   max_factors: int = 3, max_mult: int = 3) -> Element:
    monos = []
    for _ in range(rng.randint(0, max_terms)):
        counts = {rng.randrange(1, 1 << rank): rng.randint(1, max_mult)
                  for _ in range(rng.randint(0, max_factors))}
        monos.append(Monomial.from_counts(rank, counts))
    return Element.from_monomials(rank, monos)


# -- suites ----------------------------------------------------------------

def suite_complex_square(seed: int = 0, cases: int = 200) -> SuiteResult:
    """Complex side equals the square of the real part, on random conjugation spaces."""
    rng = random.Random(seed)
    res = SuiteResult("complex-square")
    for _ in range(cases):
        x = random_conjugation_model(rng)
        lhs, rhs = eta(complex_from_real(x)), eta(x).square()
        res.check(lhs == rhs, lambda: f"mismatch on model with {len(x)} points")
    return res


def suite_dold_equivalence(seed: int = 0, cases: int = 200) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("dold-equivalence")
    tally = {"null": 0, "non_null": 0}
    for _ in range(cases):
        proj = random_proj_spec(rng)
        base = random_conjugation_model(rng, positive_dim=True)
        report = check_dold_equivalence(proj, base)
        tally["null" if report.complex_null else "non_null"] += 1
        res.check(report.applicable and report.passed and report.equivalent,
                  lambda: f"s={proj.s} chars={proj.chars} base points={len(base)}: "
                          f"{report.to_json()}")
        res.check(oracle_dold_consistency(proj, base),
                  lambda: f"formula disagreement for s={proj.s} chars={proj.chars}")
    res.info["bases"] = tally
    return res


def suite_rp_criterion(s_max: int = 3, m_max: int = 5) -> SuiteResult:
    res = SuiteResult("rp-criterion")
    for s in range(1, s_max + 1):
        for k in range(1, min(m_max + 1, 1 << s) + 1):
            for chars in combinations(range(1 << s), k):
                spec = ProjSpec(s, chars)
                direct = not is_null_cobordant(proj_space(spec))
                res.check(rp_nonvanishing_criterion(spec) == direct,
                          lambda: f"criterion disagrees for s={s} chars={chars}")
                for j in range(1, k + 1):
                    res.check(oracle_proj_rep(spec, j) == proj_tangent(spec, j),
                              lambda: f"oracle disagrees at [e_{j}] for s={s} chars={chars}")
    return res


def suite_euler(n_max: int = 20, q_max: int = 3, flag_n_max: int = 6) -> SuiteResult:
    res = SuiteResult("euler")
    for n in range(1, n_max + 1):
        for parts in compositions(n):
            expected = "odd" if multinomial(parts) % 2 else "even"
            res.check(euler_parity(parts) == expected,
                      lambda: f"parity wrong for {parts}")
    odd = 0
    for spec in flag_universe(q_max, flag_n_max):
        if euler_parity(spec.parts) == "odd":
            odd += 1
            res.check(not is_null_cobordant(real_flag_space(spec)),
                      lambda: f"odd Euler characteristic but null: {spec}")
    res.info["odd_parity_flags"] = odd
    return res


TRANSLATION_INSTANCES = ((3, 0b111, (1, 2, 3)), (3, 0b001, (1, 5)), (2, 0b11, (1, 1)))


def suite_flag_pairings(q_max: int = 3, n_max: int = 6) -> SuiteResult:
    res = SuiteResult("flag-pairings")
    witnesses = []
    for q, gamma, parts in TRANSLATION_INSTANCES:
        report = translation_family(q, gamma, parts)
        res.check(report.passed and report.null,
                  lambda: f"translation family failed: {report.to_json()}")
        witnesses.append(report.to_json())
    swaps = 0
    for spec in flag_universe(q_max, n_max, n_min=2):
        if len(set(spec.parts)) == len(spec.parts):
            continue
        swaps += 1
        report = block_swap_check(spec)
        res.check(report.passed, lambda: f"block swap failed: {report.to_json()}")
    res.info["translation_families"] = witnesses
    res.info["repeated_part_specs"] = swaps
    return res


def suite_oracle(q_max: int = 3, n_max: int = 5) -> SuiteResult:
    res = SuiteResult("oracle")
    flags = 0
    for spec in flag_universe(q_max, n_max):
        fast = flag_fixed_points(spec)
        res.check(sorted(fast) == oracle_flag_fixed_points(spec)
                  and len(fast) == multinomial(spec.parts),
                  lambda: f"fixed flags differ for {spec}")
        for p in fast:
            flags += 1
            res.check(real_flag_tangent(spec, p) == oracle_tangent_rep(spec, p),
                      lambda: f"tangent differs at {p} for {spec}")
    for q in range(1, q_max + 1):
        for n in range(2, min(n_max, 1 << q) + 1):
            spec = FlagSpec(q, tuple(range(n)), (n,))
            res.check(oracle_mixed_lines_moved(spec),
                      lambda: f"a non-coordinate line is stable for {spec}")
    res.info["flags_compared"] = flags
    res.info["negative_controls"] = negative_controls()
    res.check(all(res.info["negative_controls"].values()),
              lambda: f"negative control not detected: {res.info['negative_controls']}")
    return res


def _misaligned_twist_formula(proj: ProjSpec, base: ConjugationModel) -> Element:
    """Dold invariant with each fibre twisted by the next line's character (wrong on purpose)."""
    shifted = proj.chars[1:] + proj.chars[:1]
    terms = []
    for j in range(1, proj.m + 2):
        rp = proj_tangent(proj, j).widen(base.rank)
        for _, f in base.points:
            terms.append(rp * f.twist(0, proj.s) * f.twist(shifted[j - 1], proj.s))
    return Element.from_monomials(proj.s + base.rank, terms)


def negative_controls() -> dict[str, bool]:
    """Each entry is True when a deliberately corrupted computation is caught."""
    spec = FlagSpec.of(2, [[1], [2], [1, 2]], [1, 2])
    p = flag_fixed_points(spec)[0]
    good = real_flag_tangent(spec, p)
    # replace one tangent line by a different nontrivial character
    chars = good.chars()
    chars[0] = next(c for c in range(1, 4) if c != chars[0])
    corrupted = Monomial.from_chars(spec.q, chars)

    proj = ProjSpec.of(2, [[1], [2], [1, 2]])
    base = real_flag_space(spec)
    return {
        "tangent": corrupted != oracle_tangent_rep(spec, p),
        "dold_twist": not oracle_dold_consistency(proj, base,
                                                  formula=_misaligned_twist_formula),
    }


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "dold-equivalence": suite_dold_equivalence,
    "complex-square": suite_complex_square,
    "rp-criterion": suite_rp_criterion,
    "euler": suite_euler,
    "flag-pairings": suite_flag_pairings,
    "oracle": suite_oracle,
}

SEEDED = {"dold-equivalence", "complex-square"}


def run_suite(name: str, seed: int = 0) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name](seed=seed) if name in SEEDED else SUITES[name]()
