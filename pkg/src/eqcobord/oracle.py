"""Brute-force cross-checks from explicit sign actions.

These recompute stationary flags and tangent characters by letting the
generators ``t_1, ..., t_q`` act as diagonal sign matrices on coordinates
and reading characters back off the resulting sign vectors. They share
nothing with the combinatorial constructors beyond :func:`char_eval`, and
are capped at desk scale.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product

import numpy as np

from .characters import Character, char_eval
from .cobordism import dold_eta_formula, eta
from .repring import Monomial
from .spaces import ConjugationModel, FlagSpec, Partition, ProjSpec, dold_fixed_data

MAX_FLAG_RANK = 3
MAX_FLAG_N = 6
MAX_PROJ_RANK = 3
MAX_PROJ_M = 6


class ScaleError(ValueError):
    pass


def _generators(q: int) -> list[Character]:
    return [Character(1 << k, q) for k in range(q)]


def sign_matrix(chars: list[int], q: int, t: Character) -> np.ndarray:
    """Diagonal action of ``t`` on the coordinate lines with characters ``chars``."""
    return np.diag([char_eval(Character(a, q), t) for a in chars]).astype(np.int64)


def character_from_signs(signs) -> int:
    """The unique character taking value ``signs[k]`` on ``t_{k+1}``."""
    bits = 0
    for k, s in enumerate(signs):
        if s == -1:
            bits |= 1 << k
        elif s != 1:
            raise ValueError(f"not a sign: {s!r}")
    return bits


def _check_flag_scale(spec: FlagSpec):
    if spec.q > MAX_FLAG_RANK or spec.n > MAX_FLAG_N:
        raise ScaleError(f"oracle limited to q <= {MAX_FLAG_RANK}, n <= {MAX_FLAG_N}")


def _invariant(coords: list[int], action: np.ndarray) -> bool:
    """Whether ``action`` maps the span of the coordinate vectors ``coords`` into itself."""
    outside = np.ones(action.shape[0], dtype=bool)
    outside[coords] = False
    image = action[:, coords]
    return not np.any(image[outside])


def oracle_flag_fixed_points(spec: FlagSpec) -> list[Partition]:
    """Coordinate flags of type ``parts`` that every generator maps to themselves."""
    _check_flag_scale(spec)
    S, n, r = list(spec.S), spec.n, len(spec.parts)
    gens = [sign_matrix(S, spec.q, t) for t in _generators(spec.q)]
    found = []
    for assignment in product(range(r), repeat=n):
        sizes = Counter(assignment)
        if any(sizes[i] != spec.parts[i] for i in range(r)):
            continue
        blocks = [[k for k in range(n) if assignment[k] == i] for i in range(r)]
        if all(_invariant(b, g) for b in blocks for g in gens):
            found.append(tuple(tuple(S[k] for k in b) for b in blocks))
    return sorted(found)


def oracle_mixed_lines_moved(spec: FlagSpec) -> bool:
    """True iff no line ``R(e_a + e_b)``, ``a != b``, is stable under all generators."""
    _check_flag_scale(spec)
    S, n = list(spec.S), spec.n
    gens = [sign_matrix(S, spec.q, t) for t in _generators(spec.q)]
    for a in range(n):
        for b in range(a + 1, n):
            v = np.zeros(n, dtype=np.int64)
            v[a] = v[b] = 1
            # the line is stable iff v is an eigenvector of every generator
            if all(np.linalg.matrix_rank(np.column_stack([v, g @ v])) == 1 for g in gens):
                return False
    return True


@lru_cache(maxsize=None)
def _tensor_characters(left: tuple[int, ...], right: tuple[int, ...], q: int) -> tuple[int, ...]:
    """Characters of the lines ``e_a (x) e_b`` read off the Kronecker action."""
    if not left or not right:
        return ()
    diagonals = []
    for t in _generators(q):
        k = np.kron(sign_matrix(list(left), q, t), sign_matrix(list(right), q, t))
        if np.count_nonzero(k - np.diag(np.diag(k))):
            raise AssertionError("tensor action is not diagonal")
        diagonals.append(np.diag(k))
    if not diagonals:
        return (0,) * (len(left) * len(right))
    return tuple(character_from_signs(col) for col in np.array(diagonals).T)


def oracle_tangent_rep(spec: FlagSpec, partition: Partition) -> Monomial:
    _check_flag_scale(spec)
    chars: list[int] = []
    for i in range(len(partition)):
        for j in range(i + 1, len(partition)):
            chars += _tensor_characters(tuple(partition[i]), tuple(partition[j]), spec.q)
    return Monomial.from_counts(spec.q, Counter(chars))


def oracle_proj_rep(spec: ProjSpec, j: int) -> Monomial:
    """Tangent monomial at ``[e_j]`` from ``E_j (x) E_j^perp`` (``j`` 1-based)."""
    if spec.s > MAX_PROJ_RANK or spec.m > MAX_PROJ_M:
        raise ScaleError(f"oracle limited to s <= {MAX_PROJ_RANK}, m <= {MAX_PROJ_M}")
    line = (spec.chars[j - 1],)
    perp = tuple(c for i, c in enumerate(spec.chars, 1) if i != j)
    return Monomial.from_counts(spec.s, Counter(_tensor_characters(line, perp, spec.s)))


def oracle_dold_consistency(proj: ProjSpec, base: ConjugationModel,
                            formula=dold_eta_formula) -> bool:
    """Tangent-space assembly and the closed-form expansion give the same invariant."""
    return eta(dold_fixed_data(proj, base)) == formula(proj, base)
