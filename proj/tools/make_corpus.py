#!/usr/bin/env python3
"""Regenerate the in-tree graph6 corpora under tests/data/.

Connected graphs on n <= 7 vertices come from the networkx graph atlas
(every graph up to isomorphism), trees on n <= 10 from
networkx.nonisomorphic_trees. For n = 8 connected graphs use nauty:

    geng -c 8 > connected_n8.g6
"""
import argparse
import pathlib

import networkx as nx


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "tests" / "data"))
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    by_n = {}
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0 or not nx.is_connected(g):
            continue
        by_n.setdefault(n, []).append(g6(g))
    for n, lines in sorted(by_n.items()):
        (out / f"connected_n{n}.g6").write_text("\n".join(lines) + "\n")

    for n in range(1, 11):
        if n == 1:
            trees = [nx.empty_graph(1)]
        else:
            trees = list(nx.nonisomorphic_trees(n))
        (out / f"trees_n{n}.g6").write_text("\n".join(g6(t) for t in trees) + "\n")


if __name__ == "__main__":
    main()
