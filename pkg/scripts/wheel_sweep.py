"""Cross-check the wheel search against the subset oracle on all small graphs and random ones."""

from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass

from wheelfree.corpus import random_graph
from wheelfree.formats import to_graph6
from wheelfree.oracle import enumerate_graphs, wheel_free_bf
from wheelfree.patterns import find_wheel


@dataclass
class Config:
    max_n: int = 7
    random_graphs: int = 2000
    random_max_n: int = 12
    seed: int = 0


def main(cfg: Config) -> int:
    bad = 0
    for n in range(1, cfg.max_n + 1):
        t = time.perf_counter()
        gs = enumerate_graphs(n)
        wheel = 0
        for g in gs:
            w = find_wheel(g, budget=None)
            wheel += w is not None
            if (w is None) != wheel_free_bf(g):
                bad += 1
                print("DISAGREE", to_graph6(g))
        print(f"n={n}: {len(gs)} connected graphs, {wheel} contain a wheel ({time.perf_counter() - t:.2f}s)")
    rng = random.Random(cfg.seed)
    t = time.perf_counter()
    for _ in range(cfg.random_graphs):
        g = random_graph(rng.randint(4, cfg.random_max_n), rng.uniform(0.1, 0.6), rng)
        if (find_wheel(g, budget=None) is None) != wheel_free_bf(g, max_n=cfg.random_max_n):
            bad += 1
            print("DISAGREE", to_graph6(g))
    print(f"{cfg.random_graphs} random graphs up to n={cfg.random_max_n} ({time.perf_counter() - t:.2f}s)")
    print(f"disagreements: {bad}")
    return 1 if bad else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=Config.max_n)
    p.add_argument("--random-graphs", type=int, default=Config.random_graphs)
    p.add_argument("--random-max-n", type=int, default=Config.random_max_n)
    p.add_argument("--seed", type=int, default=Config.seed)
    raise SystemExit(main(Config(**vars(p.parse_args()))))
