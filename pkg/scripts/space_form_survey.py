#!/usr/bin/env python3
"""Survey exact space-form verification across ground rings, dimensions, c.

Builds the hypersurface x_1^2 + ... + x_n^2 = 1/c for every combination and
runs the full constant-curvature verification, printing a result table.

    python3 scripts/space_form_survey.py --max-n 4
    python3 scripts/space_form_survey.py --rings Q,F5 --max-n 3
"""

import argparse
import sys
import time
from dataclasses import dataclass, field

from rinehart import (NotAUnit, PrimeField, QuadExt, Rationals, make_sphere,
                      verify_space_form)

RING_CHOICES = {
    "Q": Rationals(),
    "F3": PrimeField(3),
    "F5": PrimeField(5),
    "F7": PrimeField(7),
    "Qi": QuadExt(Rationals(), -1),
    "Qj": QuadExt(Rationals(), 1),
}


@dataclass(frozen=True)
class SurveyConfig:
    rings: tuple = ("Q", "F3", "F5", "Qi")
    min_n: int = 2
    max_n: int = 4
    rational_cs: tuple = (1, -1, 2, 4)

    def constants(self, ring):
        if isinstance(ring, PrimeField):
            return [ring.from_int(c) for c in range(1, ring.p)]
        return [ring.from_int(c) for c in self.rational_cs]


def run_survey(config: SurveyConfig) -> bool:
    print(f"{'ring':8} {'n':>2} {'c':>6} {'result':8} {'seconds':>8}")
    print("-" * 38)
    all_ok = True
    for name in config.rings:
        ring = RING_CHOICES[name]
        for n in range(config.min_n, config.max_n + 1):
            for c in config.constants(ring):
                t0 = time.perf_counter()
                try:
                    hyper = make_sphere(ring, n, c)
                except NotAUnit:
                    continue
                rep = verify_space_form(hyper, c)
                dt = time.perf_counter() - t0
                verdict = "ok" if rep.ok else "FAIL"
                all_ok &= rep.ok
                print(f"{name:8} {n:>2} {str(c):>6} {verdict:8} {dt:>8.2f}")
                if not rep.ok:
                    print(f"  counterexample: {rep.counterexample}")
    return all_ok


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--rings", default="Q,F3,F5,Qi",
                        help=f"comma list from {sorted(RING_CHOICES)}")
    parser.add_argument("--min-n", type=int, default=2)
    parser.add_argument("--max-n", type=int, default=4)
    args = parser.parse_args()
    config = SurveyConfig(rings=tuple(args.rings.split(",")),
                          min_n=args.min_n, max_n=args.max_n)
    return 0 if run_survey(config) else 1


if __name__ == "__main__":
    sys.exit(main())
