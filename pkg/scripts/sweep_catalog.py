"""Catalog sweep: run the search over a range of lengths and summarise.

Writes one JSONL catalog per (n, q) into --out and prints, for each length,
the number of records and the best asymmetric entry for every dimension.

    python scripts/sweep_catalog.py --q 2 --lengths 7 9 15 17 21 23 --out runs/q2
"""

import argparse
import dataclasses
import logging
import math
import time
from dataclasses import dataclass, field
from pathlib import Path

from aqcodes.catalog import search_catalog
from aqcodes.errors import CodeError
from aqcodes.weights import DEFAULT_BUDGET

log = logging.getLogger("sweep")


@dataclass
class SweepConfig:
    q: int = 2
    lengths: list[int] = field(default_factory=lambda: [7, 9, 15, 17, 21, 23])
    budget: int = DEFAULT_BUDGET
    out: Path | None = None


def best_per_dimension(entries):
    best = {}
    for e in entries:
        r = e.record
        if r.type != "aqec":
            continue
        key = (r.dz.value, r.dx.value)
        if r.k not in best or key > best[r.k][0]:
            best[r.k] = (key, r.label())
    return {k: lab for k, (_, lab) in sorted(best.items(), reverse=True)}


def run(cfg: SweepConfig):
    if cfg.out:
        cfg.out.mkdir(parents=True, exist_ok=True)
    summary = {}
    for n in cfg.lengths:
        if math.gcd(n, cfg.q) != 1:
            log.info("skip n=%d: not coprime to q=%d", n, cfg.q)
            continue
        t0 = time.perf_counter()
        try:
            entries = search_catalog(n, cfg.q, cfg.budget)
        except CodeError as e:
            log.warning("n=%d: %s: %s", n, type(e).__name__, e)
            continue
        dt = time.perf_counter() - t0
        if cfg.out:
            path = cfg.out / f"catalog_n{n}_q{cfg.q}.jsonl"
            path.write_text("".join(e.to_json() + "\n" for e in entries))
        summary[n] = best_per_dimension(entries)
        print(f"n={n:<3} q={cfg.q}  {len(entries):>4} records  {dt:6.2f}s")
        for k, lab in summary[n].items():
            print(f"    k={k:<3} {lab}")
    return summary


def parse_args(argv=None) -> SweepConfig:
    defaults = SweepConfig()
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--q", type=int, default=defaults.q)
    p.add_argument("--lengths", type=int, nargs="+", default=defaults.lengths)
    p.add_argument("--budget", type=int, default=defaults.budget)
    p.add_argument("--out", type=Path, default=None)
    return SweepConfig(**vars(p.parse_args(argv)))


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")
    cfg = parse_args()
    log.info("config %s", dataclasses.asdict(cfg))
    run(cfg)
