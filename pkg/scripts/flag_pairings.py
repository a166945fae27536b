"""Print the flag-manifold examples: translation pairings and block-swap counts."""

import argparse
import json

from eqcobord.characters import Character
from eqcobord.cobordism import euler_parity, translation_family, is_null_cobordant
from eqcobord.spaces import real_flag_space
from eqcobord.suites import flag_universe


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--q", type=int, default=3)
    ap.add_argument("--show-pairs", action="store_true")
    args = ap.parse_args()

    q, n = args.q, 2 ** args.q - 2
    print(f"flags on all nonempty characters of (Z_2)^{q} but one, n = {n}")
    for gamma in range(1, 1 << q):
        for parts in ([1, n - 1], [1, 2, n - 3] if n >= 4 else None):
            if parts is None:
                continue
            r = translation_family(q, gamma, parts)
            g = Character(gamma, q)
            print(f"  gamma={g!s:<8} parts={parts!s:<12} null={r.null} "
                  f"translation pairs={len(r.witness.pairs) if r.witness else None}")
            if args.show_pairs and r.witness:
                print(json.dumps(r.witness.to_json(), indent=1))

    total = odd = odd_nonnull = repeated = repeated_null = 0
    for spec in flag_universe(3, 6):
        total += 1
        null = is_null_cobordant(real_flag_space(spec))
        if euler_parity(spec.parts) == "odd":
            odd += 1
            odd_nonnull += not null
        if len(set(spec.parts)) < len(spec.parts):
            repeated += 1
            repeated_null += null
    print(f"q<=3, n<=6: {total} flag specs")
    print(f"  odd Euler characteristic: {odd_nonnull}/{odd} non-null")
    print(f"  repeated part sizes:      {repeated_null}/{repeated} null")


if __name__ == "__main__":
    main()
