"""Smoke test for the turanlab_py extension module.

Build and install first:

    pip install --no-build-isolation ./crates/py
"""

import turanlab_py as tl


def main():
    g = tl.construct("join(K(2),T(12,3))")
    assert (g.order(), g.edge_count()) == (14, 2 * 12 + 1 + 48)
    assert tl.Graph.from_graph6(g.to_graph6()) == g
    assert g.complement().complement() == g

    t = tl.construct("T(8,2)")
    assert tl.check(t, ["clique:3"])["status"] == "free"
    hit = tl.check(tl.construct("K(4)"), ["clique:3"])
    assert hit["status"] == "contains" and len(hit["witness"]) == 3

    inv = tl.invariants(tl.construct("C(5)"))
    assert inv["chromatic_number"] == 3 and inv["clique_number"] == 2

    rep = tl.extremal_graphs(6, ["path:4"])
    two_triangles = tl.construct("repeat(2,K(3))")
    assert rep["ex"] == 6 and rep["graphs"] == [two_triangles.certificate()]

    ex, graphs = tl.path_extremal(8, 4)
    assert ex == 7 and all(h.edge_count() == ex for h in graphs)

    fam = tl.symmetric_family(tl.construct("T(9,3)"), 1)
    assert fam["status"] == "found" and fam["blocks"] == [[0], [1], [2]]
    grown = tl.replicate(tl.construct("T(6,3)"), [[0], [1]])
    assert grown.is_isomorphic(tl.construct("T(7,3)"))

    shaped = tl.construct("join(E(2),T(11,2))")
    cert = tl.verify_shape(shaped, 3, 2, 1)
    assert cert is not None and cert["w"] == [0, 1]
    bigger, cert2 = tl.d_operation(shaped, cert["w"], cert["parts"], cert["cores"])
    assert bigger.edge_count() - shaped.edge_count() == 2 + 13 + 1
    back, _ = tl.d_inverse(bigger, cert2["w"], cert2["parts"], cert2["cores"])
    assert back.is_isomorphic(shaped)

    dec = tl.decomposition(["clique:3"])
    assert dec["complete"] and [m.edge_count() for m in dec["members"]] == [1]
    r, t, q = tl.family_parameters(["family:icosa"])
    assert (r, t) == (3, 12) and q >= 1

    checks = tl.run_suite("enumerator", nmax=6)
    assert checks and all(status == "PASS" for status, _, _ in checks)

    try:
        tl.construct("T(3")
    except ValueError:
        pass
    else:
        raise AssertionError("malformed expression accepted")

    print("turanlab_py smoke test passed")


if __name__ == "__main__":
    main()
