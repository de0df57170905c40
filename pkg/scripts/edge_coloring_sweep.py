"""Exhaustive 3-edge-coloring run over almost chordless subcubic graphs."""

from __future__ import annotations

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from wheelfree.coloring import ColoringStats, three_edge_color_almost_chordless, verify_edge_coloring
from wheelfree.oracle import enumerate_graphs
from wheelfree.patterns import chord_edges


@dataclass
class Config:
    max_n: int = 9


def main(cfg: Config) -> int:
    stats = ColoringStats()
    for n in range(1, cfg.max_n + 1):
        t = time.perf_counter()
        kinds: Counter = Counter()
        for g in enumerate_graphs(n, connected=False, max_degree=3):
            chords = len(chord_edges(g))
            if chords > 1:
                continue
            kinds["one chord" if chords else "chordless"] += 1
            assert verify_edge_coloring(g, three_edge_color_almost_chordless(g, stats), 3)
        print(f"n={n}: {dict(kinds)} ({time.perf_counter() - t:.2f}s)")
    print("rule counts:", dict(sorted(stats.rules.items())))
    print(f"fallbacks: {stats.edge_fallbacks}")
    for _, g6 in stats.instances:
        print(f"  fallback on {g6}")
    return 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=Config.max_n)
    raise SystemExit(main(Config(**vars(p.parse_args()))))
