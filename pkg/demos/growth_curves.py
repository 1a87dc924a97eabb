#!/usr/bin/env python3
"""Plot the growth of the counts and the parity-split consecutive ratios.

Uses the published reference counts for the full range, so this runs in
milliseconds; swap in count_by_max_primitive(n) to recompute any prefix.
Writes growth_log2.png and growth_ratios.png next to this script if
matplotlib is available, otherwise prints the series.
"""

import math
import os

from maxprim import KNOWN_COUNTS

ns = sorted(KNOWN_COUNTS)
log2_counts = [(n, math.log2(KNOWN_COUNTS[n][0])) for n in ns if KNOWN_COUNTS[n][0] > 0]
even_over_odd = [
    (n, KNOWN_COUNTS[n][0] / KNOWN_COUNTS[n - 1][0])
    for n in ns
    if n % 2 == 0 and n - 1 in KNOWN_COUNTS and KNOWN_COUNTS[n - 1][0] > 0
]
odd_over_even = [
    (n, KNOWN_COUNTS[n][0] / KNOWN_COUNTS[n - 1][0])
    for n in ns
    if n % 2 == 1 and n - 1 in KNOWN_COUNTS and KNOWN_COUNTS[n - 1][0] > 0
]

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is None:
    print("matplotlib not installed; printing the series instead\n")
    print("n, log2(count by maximum primitive)")
    for n, v in log2_counts:
        print(f"  {n:>2}  {v:7.3f}")
    print("\neven/odd consecutive ratios (tend to 1):")
    print(" ", ", ".join(f"{n}:{r:.3f}" for n, r in even_over_odd[-6:]))
    print("odd/even consecutive ratios (tend to 2):")
    print(" ", ", ".join(f"{n}:{r:.3f}" for n, r in odd_over_even[-6:]))
else:
    here = os.path.dirname(os.path.abspath(__file__))

    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.semilogy([n for n, _ in log2_counts], [2**v for _, v in log2_counts], "o-",
                markersize=3)
    ax.set_xlabel("maximum primitive n")
    ax.set_ylabel("number of numerical semigroups")
    ax.set_title("Counts by maximum primitive grow exponentially")
    fig.tight_layout()
    fig.savefig(os.path.join(here, "growth_log2.png"), dpi=120)

    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(*zip(*even_over_odd), "o-", markersize=3, label="even n: A(n)/A(n-1)")
    ax.plot(*zip(*odd_over_even), "s-", markersize=3, label="odd n: A(n)/A(n-1)")
    ax.axhline(1.0, color="gray", lw=0.5)
    ax.axhline(2.0, color="gray", lw=0.5)
    ax.set_xlabel("maximum primitive n")
    ax.set_ylabel("consecutive ratio")
    ax.legend()
    ax.set_title("Parity-split consecutive ratios")
    fig.tight_layout()
    fig.savefig(os.path.join(here, "growth_ratios.png"), dpi=120)

    print("wrote growth_log2.png and growth_ratios.png")
