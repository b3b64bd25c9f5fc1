"""Census over random labeled graphs on seven vertices.

Samples edge masks uniformly, classifies each graph (treewidth verdict,
planarity), completes the planar accepted ones, and reports population
fractions with mean completion cost.  The full 2^21 enumeration is the
acceptance suite's job; this gives the same picture in seconds.
"""
from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass

from stacktri.completer import complete
from stacktri.embed import embed_planar
from stacktri.errors import NonplanarError
from stacktri.graph import Graph
from stacktri.tw3 import Reject, reduce_tw3

PAIRS = [(u, v) for u in range(7) for v in range(u + 1, 7)]


@dataclass(frozen=True)
class CensusConfig:
    samples: int = 50_000
    seed: int = 0


def run(cfg: CensusConfig) -> None:
    rng = random.Random(cfg.seed)
    t0 = time.perf_counter()
    accepted = planar = added_sum = 0
    for _ in range(cfg.samples):
        mask = rng.getrandbits(21)
        g = Graph(7, frozenset(PAIRS[i] for i in range(21) if mask >> i & 1))
        if isinstance(reduce_tw3(g), Reject):
            continue
        accepted += 1
        try:
            p = embed_planar(g, check=False)
        except NonplanarError:
            continue
        planar += 1
        added_sum += len(complete(p, check=False).added)
    dt = time.perf_counter() - t0
    print(f"samples:            {cfg.samples}")
    print(f"treewidth <= 3:     {accepted} ({accepted / cfg.samples:.1%})")
    print(f"  of those planar:  {planar} ({planar / max(accepted, 1):.1%})")
    print(f"mean edges added:   {added_sum / max(planar, 1):.2f}")
    print(f"wall time:          {dt:.1f}s ({dt / cfg.samples * 1e6:.0f}us per graph)")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=CensusConfig.samples)
    ap.add_argument("--seed", type=int, default=CensusConfig.seed)
    a = ap.parse_args()
    run(CensusConfig(samples=a.samples, seed=a.seed))


if __name__ == "__main__":
    main()
