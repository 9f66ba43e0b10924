"""Smoke test for the clique_homotopy extension module.

Build and install it first, e.g. `pip install maturin` and then
`maturin develop -m crates/python/Cargo.toml` (or `pip install ./crates/python`).
"""

import json

import clique_homotopy as ch


def main():
    o3 = ch.gen_octahedron(3)
    assert (o3.n, o3.m) == (6, 12)
    assert ch.Graph.from_graph6(o3.to_graph6()) == o3

    kg, labels = ch.clique_graph(o3)
    assert kg.octahedron_order() == 4 and len(labels) == 8

    it = ch.iterate_clique_graph(o3, 3, 300)
    assert it["sizes"] == [6, 8, 16, 256], it
    assert it["octahedron_orders"] == [3, 4, 8, 128], it

    assert ch.homotopy_signature(o3) == (2, [1, 0, 1])
    assert ch.homotopy_signature(ch.gen_cycle(7)) == (0, [1, 1])

    sun = ch.gen_sun3()
    assert not ch.is_helly(sun)
    core, dismantlable = ch.dismantle(sun)
    assert dismantlable and core.n == 1

    c6 = ch.gen_cycle(6)
    tf, wedges, trace = ch.low_degree_reduce(c6)
    assert wedges == 1 and tf == c6 and trace.startswith("trace 6 6 ")

    report = json.loads(ch.verify_graph(sun))
    assert all(r["pass"] for r in report["checks"].values()), report

    assert ch.compare_graphs(kg, ch.gen_octahedron(4))[0] == "isomorphic"
    try:
        ch.homotopy_signature(ch.Graph(0))
    except ValueError:
        pass
    else:
        raise AssertionError("the empty graph must be rejected")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
