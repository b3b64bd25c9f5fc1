"""Which structural cases drive completion, as a function of density.

Sweeps a (n, keep) grid, completing several seeded instances per cell,
and tabulates how often each handler fires and how many edges come back.
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from stacktri.completer import case_counts, complete, reset_case_counts
from stacktri.gen import gen_plane_3tree, subsample_plane

CASES = ("disconnected", "articulation", "two_cut_edge", "two_cut_missing", "triconnected")


@dataclass(frozen=True)
class GridConfig:
    sizes: tuple[int, ...] = (10, 25, 50, 100)
    keeps: tuple[float, ...] = (0.3, 0.6, 0.9)
    per_cell: int = 20
    seed: int = 0


def run(cfg: GridConfig) -> None:
    header = f"{'n':>4} {'keep':>5} {'added':>7}"
    for c in CASES:
        header += f" {c:>15}"
    print(header)
    seed = cfg.seed
    for n in cfg.sizes:
        for keep in cfg.keeps:
            reset_case_counts()
            added_total = 0
            for _ in range(cfg.per_cell):
                base, _ = gen_plane_3tree(n, seed, check=False)
                thin, _ = subsample_plane(base, keep, seed + 1, check=False)
                added_total += len(complete(thin, check=False).added)
                seed += 2
            row = f"{n:>4} {keep:>5.2f} {added_total / cfg.per_cell:>7.1f}"
            for c in CASES:
                row += f" {case_counts[c]:>15}"
            print(row)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=list(GridConfig.sizes))
    ap.add_argument("--keeps", type=float, nargs="+", default=list(GridConfig.keeps))
    ap.add_argument("--per-cell", type=int, default=GridConfig.per_cell)
    ap.add_argument("--seed", type=int, default=GridConfig.seed)
    a = ap.parse_args()
    run(GridConfig(tuple(a.sizes), tuple(a.keeps), a.per_cell, a.seed))


if __name__ == "__main__":
    main()
