"""Write one graph6 file per order n with every graph on n vertices up to isomorphism.

Graphs of order n are produced by attaching a new vertex to each representative of
order n - 1 in every possible way, then deduplicated with networkx isomorphism tests
(bucketed by a Weisfeiler-Lehman hash). Counts are checked against OEIS A000088.

usage: python3 scripts/gen_catalog.py [max_n] [out_dir]
"""
import itertools
import sys
from collections import defaultdict
from pathlib import Path

import networkx as nx

A000088 = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668]


def extend(reps, n):
    buckets = defaultdict(list)
    out = []
    for g in reps:
        for r in range(n):
            for nbrs in itertools.combinations(range(n - 1), r):
                h = g.copy()
                h.add_node(n - 1)
                h.add_edges_from((n - 1, v) for v in nbrs)
                key = (
                    tuple(sorted(d for _, d in h.degree())),
                    nx.weisfeiler_lehman_graph_hash(h, iterations=3),
                )
                if any(nx.is_isomorphic(h, o) for o in buckets[key]):
                    continue
                buckets[key].append(h)
                out.append(h)
    return out


def main():
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    out_dir = Path(sys.argv[2]) if len(sys.argv) > 2 else Path("catalogs")
    out_dir.mkdir(parents=True, exist_ok=True)
    reps = [nx.empty_graph(1)]
    for n in range(1, max_n + 1):
        if n > 1:
            reps = extend(reps, n)
        assert len(reps) == A000088[n], (n, len(reps))
        lines = [nx.to_graph6_bytes(g, header=False).decode().strip() for g in reps]
        lines.sort()
        (out_dir / f"graphs_n{n}.g6").write_text("\n".join(lines) + "\n")
        print(n, len(lines), flush=True)


if __name__ == "__main__":
    main()
