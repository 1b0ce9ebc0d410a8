#!/usr/bin/env python3
"""Write every non-isomorphic graph on at most N vertices (N <= 7) as graph6.

Graphs come from the networkx graph atlas, which is ordered by vertex count,
so the output satisfies the non-decreasing order that `rlc gsearch` expects.
"""
import argparse
import sys

import networkx as nx


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("max_order", type=int)
    parser.add_argument("--min-order", type=int, default=0)
    args = parser.parse_args()
    if args.max_order > 7:
        parser.error("the atlas only covers graphs on at most 7 vertices")
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if args.min_order <= n <= args.max_order:
            sys.stdout.write(nx.to_graph6_bytes(g, header=False).decode())
    return 0


if __name__ == "__main__":
    sys.exit(main())
