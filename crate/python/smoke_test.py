"""Smoke test for the connset extension module.

Build and install it first, e.g.

    pip install maturin
    maturin build -m crates/py/Cargo.toml --release
    pip install target/wheels/connset-*.whl

then run ``python python/smoke_test.py``.
"""

from fractions import Fraction

import connset


def main():
    k3 = connset.Graph.from_graph6("Bw")
    s = connset.stats(k3)
    assert (s["N"], s["S"]) == (7, 12), s
    assert s["A"] == Fraction(12, 7) and s["D"] == Fraction(4, 7), s

    star = connset.Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert connset.stats(star)["N"] == 11
    assert connset.stats_bruteforce(star) == connset.stats(star)
    assert connset.vertex_profile(star) == [8, 5, 5, 5]
    assert connset.classify_near_tree(star) == "tree"

    p3 = connset.generate("path:n=3")
    assert connset.rooted_stats(p3, [1])["N"] == 4
    assert connset.rooted_stats(p3, [1])["S"] == 8
    assert connset.find_root_vertex(p3) is None
    assert connset.av(k3, 0) == 1

    bowtie = connset.Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    tree = connset.block_cut_tree(bowtie)
    assert tree["cut_vertices"] == [2], tree
    assert connset.stats(bowtie)["N"] == 22
    assert connset.Graph.from_graph6(bowtie.graph6()) == bowtie

    big = connset.generate("path:n=200")
    assert connset.stats(big)["N"] == 200 * 201 // 2

    for _, g in connset.family("cograph_random:n=3..12,seed=4"):
        assert connset.is_cograph(g)
        assert Fraction(g.order, 2) < connset.stats(g)["A"] <= Fraction(g.order + 1, 2)

    results = connset.verify([k3, star, p3], ["thm_main"])
    assert [r["status"] for r in results] == ["pass"] * 3, results
    assert "thm_main" in connset.statements()

    try:
        connset.stats(connset.generate("complete:n=14"), budget=10)
    except connset.BudgetExceeded:
        pass
    else:
        raise AssertionError("budget not enforced")

    try:
        connset.generate("cubic_random:n=5")
    except ValueError:
        pass
    else:
        raise AssertionError("odd cubic order accepted")

    print("connset smoke test passed")


if __name__ == "__main__":
    main()
