import pytest
from hypothesis import strategies as st

from eqcobord.repring import Element, Monomial
from eqcobord.spaces import FlagSpec, ProjSpec


@st.composite
def monomials(draw, rank=3, max_factors=3, max_mult=3):
    chars = draw(st.lists(st.integers(1, (1 << rank) - 1), max_size=max_factors))
    counts = {c: draw(st.integers(1, max_mult)) for c in chars}
    return Monomial.from_counts(rank, counts)


@st.composite
def elements(draw, rank=3, max_terms=4):
    return Element.from_monomials(rank, draw(st.lists(monomials(rank), max_size=max_terms)))


@st.composite
def compositions_of(draw, n):
    cuts = draw(st.sets(st.integers(1, n - 1))) if n > 1 else set()
    bounds = [0, *sorted(cuts), n]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


@st.composite
def flag_specs(draw, q_max=3, n_max=5, min_blocks=1):
    q = draw(st.integers(1, q_max))
    n = draw(st.integers(max(1, min_blocks), min(n_max, 1 << q)))
    parts = draw(compositions_of(n).filter(lambda p: len(p) >= min_blocks))
    S = draw(st.lists(st.integers(0, (1 << q) - 1), min_size=n, max_size=n, unique=True))
    return FlagSpec(q, tuple(S), parts)


@st.composite
def proj_specs(draw, s_max=3, m_max=4, m_min=0):
    s = draw(st.integers(1, s_max))
    k = draw(st.integers(m_min + 1, min(m_max + 1, 1 << s)))
    chars = draw(st.lists(st.integers(0, (1 << s) - 1), min_size=k, max_size=k, unique=True))
    return ProjSpec(s, tuple(chars))


@pytest.fixture
def report(capsys):
    """Print a line straight to the terminal, bypassing capture."""
    def emit(line):
        with capsys.disabled():
            print(line)
    return emit
