import pytest

import homshift as hs

TRIANGLE = "n=3\nx1*x2, x1*x3, x2*x3"


def test_parse_and_str():
    I = hs.parse_ideal(TRIANGLE)
    assert I.vars == 3
    assert len(I) == 3
    assert set(I.gens) == {"x1*x2", "x1*x3", "x2*x3"}
    assert hs.parse_ideal(hs.format_ideal(I)) == I


def test_parse_error():
    with pytest.raises(ValueError):
        hs.parse_ideal("n=2\nx9")


def test_hs_routes():
    I = hs.parse_ideal(TRIANGLE)
    h1 = hs.hs(I, 1)
    assert h1.gens == ["x1*x2*x3"]
    assert hs.hs_via_betti(I, 1) == h1
    assert hs.hs(I, 0) == I
    assert hs.hs(I, 2).is_zero()


def test_predicates():
    I = hs.parse_ideal(TRIANGLE)
    assert hs.has_linear_quotients(I)
    assert hs.has_linear_resolution(I)
    assert hs.is_polymatroidal(I)
    J = hs.parse_ideal("n=2\nx1^2, x2^2")
    assert not hs.has_linear_quotients(J)
    assert not hs.is_polymatroidal(J)


def test_betti():
    I = hs.parse_ideal(TRIANGLE)
    assert hs.projective_dimension(I) == 1
    triples = hs.betti_triples(I)
    assert (1, "x1*x2*x3", 2) in triples
    assert sum(rank for i, _, rank in triples if i == 0) == 3
    assert "3 2" in hs.betti_table(I)


def test_graphs():
    G = hs.parse_graph("n 4\n1 2\n2 3\n3 4\n1 4")  # 4-cycle
    assert not hs.is_chordal(G)
    assert hs.is_chordal(G.complement())
    assert hs.chordal_peo(G) is None
    P = hs.parse_graph("n 4\n1 2\n2 3\n3 4")
    assert hs.find_reversible_peo(P) is not None
    assert hs.proper_interval_order(P) is not None
    assert hs.edge_ideal(P) == hs.parse_ideal("n=4\nx1*x2, x2*x3, x3*x4")


def test_campaign_and_reproduce():
    code, passed, failed, report = hs.run_campaign("T1.3", 5, 99)
    assert (code, passed, failed) == (0, 5, 0)
    assert "pass=5" in report
    assert set(hs.example_ids()) == {"ex1.4", "ex2.3", "ex2.10a", "ex2.10b"}
    ok, log = hs.reproduce("ex1.4")
    assert ok, log
