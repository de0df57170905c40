"""Properties of the circulant C13(1,5): wheel-free, triangle-free, yet 4-chromatic."""

from __future__ import annotations

import time

from wheelfree.formats import to_graph6
from wheelfree.oracle import (chromatic_number_bf, clique_number_bf, fixture_r35,
                              independence_number_bf, wheel_free_bf)
from wheelfree.patterns import find_wheel
from wheelfree.planar import is_planar


def main() -> int:
    t = time.perf_counter()
    g = fixture_r35()
    print("graph6:", to_graph6(g))
    print(f"n={g.n} m={g.m} degrees={sorted(set(g.degrees()))}")
    print("clique number:", clique_number_bf(g))
    print("independence number:", independence_number_bf(g))
    print("wheel-free (subset oracle):", wheel_free_bf(g, max_n=13))
    print("wheel-free (search):", find_wheel(g, budget=None) is None)
    print("planar:", is_planar(g))
    print("chromatic number:", chromatic_number_bf(g))
    print(f"time: {time.perf_counter() - t:.2f}s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
