"""How often the BCH bound equals the true minimum distance.

For every cyclic code of each length, compares the exact minimum weight with
the bound from the longest run of consecutive residues in the defining set.
"""

import argparse
import math
from collections import Counter
from dataclasses import dataclass, field

from aqcodes.cyclic import all_cyclic_codes
from aqcodes.weights import DEFAULT_BUDGET, bch_bound, min_weight


@dataclass
class TightnessConfig:
    q: int = 2
    lengths: list[int] = field(default_factory=lambda: [7, 15, 17, 21, 23, 31])
    budget: int = DEFAULT_BUDGET


def survey(cfg: TightnessConfig):
    rows = []
    for n in cfg.lengths:
        if math.gcd(n, cfg.q) != 1:
            continue
        gaps = Counter()
        inexact = 0
        for C in all_cyclic_codes(n, cfg.q):
            if C.k == 0:
                continue
            w = min_weight(C, cfg.budget)
            if not w.exact:
                inexact += 1
                continue
            gaps[w.value - bch_bound(C)] += 1
        rows.append((n, gaps, inexact))
    return rows


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--q", type=int, default=TightnessConfig.q)
    p.add_argument("--lengths", type=int, nargs="+", default=TightnessConfig().lengths)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    cfg = TightnessConfig(**vars(p.parse_args(argv)))
    print("n     codes  tight  gap histogram (d - bound: count)  inexact")
    for n, gaps, inexact in survey(cfg):
        total = sum(gaps.values())
        hist = " ".join(f"{g}:{c}" for g, c in sorted(gaps.items()))
        print(f"{n:<5} {total + inexact:>5}  {gaps[0]:>5}  {hist:<32}  {inexact}")


if __name__ == "__main__":
    main()
