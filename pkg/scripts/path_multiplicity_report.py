#!/usr/bin/env python3
"""Compare per-pair simple-path multiplicity across the topology classes.

For each seed, one topology per class is generated at the same node
count and its path-count matrix summarized; the table shows how the
class separates the metric.

    python scripts/path_multiplicity_report.py --nodes 8 --seeds 50
"""

import argparse
import statistics

from sdnscen.generate import GeneratorConfig, generate_topology
from sdnscen.paths import path_count_matrix, summarize
from sdnscen.topology import TopologyClass, edge_count


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nodes", type=int, default=8)
    parser.add_argument("--seeds", type=int, default=50)
    parser.add_argument("--seed-base", type=int, default=0)
    parser.add_argument("--max-length", type=int, default=None)
    args = parser.parse_args()

    print(f"nodes={args.nodes} seeds={args.seeds}")
    print(f"{'class':<14} {'E':>4} {'min':>8} {'mean of means':>14} {'max':>8}")
    for kind in TopologyClass:
        means = []
        lo, hi = float("inf"), 0
        for offset in range(args.seeds):
            topo = generate_topology(
                GeneratorConfig(kind, args.nodes, args.seed_base + offset)
            )
            stats = summarize(path_count_matrix(topo, max_length=args.max_length))
            means.append(stats.mean_pairs)
            lo = min(lo, stats.min_pairs)
            hi = max(hi, stats.max_pairs)
        print(
            f"{kind.value:<14} {edge_count(kind, args.nodes):>4} {lo:>8}"
            f" {statistics.mean(means):>14.2f} {hi:>8}"
        )


if __name__ == "__main__":
    main()
