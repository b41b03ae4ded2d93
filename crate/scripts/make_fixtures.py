"""Regenerate the graph6 fixture streams under crates/core/tests/data.

connected_n{N}.g6 holds every connected graph of order N up to isomorphism
(the same set `geng -c N` emits); trees_n{N}.g6 holds every tree of order N.
Connected graphs of order N are grown from those of order N-1 by attaching a
new vertex to every nonempty neighbourhood, deduplicated by nauty certificate.
Every connected graph has a non-cut vertex, so the augmentation is complete.
"""
import itertools
import pathlib
import sys

import networkx as nx
import pynauty

OUT = pathlib.Path(__file__).resolve().parent.parent / "crates" / "core" / "tests" / "data"


def certificate(g):
    n = g.number_of_nodes()
    adj = {v: [u for u in g.neighbors(v)] for v in range(n)}
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))


def canonical(g):
    n = g.number_of_nodes()
    adj = {v: [u for u in g.neighbors(v)] for v in range(n)}
    lab = pynauty.canon_label(pynauty.Graph(n, adjacency_dict=adj))
    inv = {old: new for new, old in enumerate(lab)}
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from((inv[u], inv[v]) for u, v in g.edges())
    return h


def g6(g):
    return nx.to_graph6_bytes(g, nodes=range(g.number_of_nodes()), header=False).decode().strip()


def main(max_n):
    OUT.mkdir(parents=True, exist_ok=True)
    level = [nx.empty_graph(1)]
    for n in range(1, max_n + 1):
        if n > 1:
            seen = {}
            for g in level:
                for k in range(1, n):
                    for nbrs in itertools.combinations(range(n - 1), k):
                        h = g.copy()
                        h.add_node(n - 1)
                        h.add_edges_from((n - 1, u) for u in nbrs)
                        c = certificate(h)
                        if c not in seen:
                            seen[c] = canonical(h)
            level = list(seen.values())
        lines = sorted(g6(g) for g in level)
        (OUT / f"connected_n{n}.g6").write_text("\n".join(lines) + "\n")
        print(n, len(lines), file=sys.stderr)
    for n in range(1, 11):
        trees = sorted(g6(canonical(t)) for t in nx.nonisomorphic_trees(n)) if n > 1 else [g6(nx.empty_graph(1))]
        (OUT / f"trees_n{n}.g6").write_text("\n".join(trees) + "\n")
        print("trees", n, len(trees), file=sys.stderr)


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 8)
