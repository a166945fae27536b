"""Tabulate RP^m decisions for every set of distinct characters of (Z_2)^s.

Compares the Stong invariant with the character-difference criterion and
with the translation stabilizer of the character set: RP^m bounds exactly
when some nonzero translation maps the set of characters onto itself.
"""

import argparse
from itertools import combinations

from eqcobord.cobordism import is_null_cobordant, rp_nonvanishing_criterion
from eqcobord.spaces import ProjSpec, proj_space


def stabilizer(chars, s):
    """Nonzero translations of (Z_2)^s that permute the character set."""
    cs = set(chars)
    return [h for h in range(1, 1 << s) if {c ^ h for c in cs} == cs]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--s-max", type=int, default=3)
    ap.add_argument("--m-max", type=int, default=5)
    args = ap.parse_args()
    print(f"{'s':>2} {'m':>2} {'specs':>6} {'non-null':>9} {'agree':>6} {'stab matches':>15}")
    for s in range(1, args.s_max + 1):
        for k in range(1, min(args.m_max + 1, 1 << s) + 1):
            rows = [ProjSpec(s, c) for c in combinations(range(1 << s), k)]
            nonnull = [not is_null_cobordant(proj_space(r)) for r in rows]
            agree = sum(rp_nonvanishing_criterion(r) == n for r, n in zip(rows, nonnull))
            stab = sum((len(stabilizer(r.chars, s)) > 0) == (not n) for r, n in zip(rows, nonnull))
            print(f"{s:>2} {k - 1:>2} {len(rows):>6} {sum(nonnull):>9} {agree:>6} {stab:>15}")


if __name__ == "__main__":
    main()
