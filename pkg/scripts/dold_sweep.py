"""Run the Dold-manifold equivalence check over many seeds and tally outcomes.

    python scripts/dold_sweep.py --seeds 20 --cases 200
"""

import argparse
import random
from collections import Counter

from eqcobord.cobordism import check_dold_equivalence
from eqcobord.spaces import point_space
from eqcobord.suites import random_conjugation_model, random_proj_spec


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--cases", type=int, default=200)
    ap.add_argument("--with-points", action="store_true",
                    help="also try zero-dimensional bases, where the equivalence can fail")
    args = ap.parse_args()

    tally = Counter({"EQUIVALENCE VIOLATED": 0, "FORMULA MISMATCH": 0})
    for seed in range(args.seeds):
        rng = random.Random(seed)
        for _ in range(args.cases):
            proj = random_proj_spec(rng)
            if args.with_points and rng.random() < 0.2:
                base = point_space(rng.randint(1, 3))
            else:
                base = random_conjugation_model(rng, positive_dim=True)
            r = check_dold_equivalence(proj, base)
            kind = "dim>=1" if r.applicable else "dim=0"
            tally[f"{kind} complex_null={r.complex_null} dold_null={r.dold_null}"] += 1
            if not r.formula_agrees:
                tally["FORMULA MISMATCH"] += 1
            if r.applicable and not r.equivalent:
                tally["EQUIVALENCE VIOLATED"] += 1
    for key, count in sorted(tally.items()):
        print(f"{key:<48} {count}")


if __name__ == "__main__":
    main()
