"""Sparse hyperedge-neighborhood sets: the structural guarantee that a
connected, path-bounded, cycle-free-at-the-top hypergraph always has a
large vertex set meeting few edges.

Both the exhaustive checker and the constructive procedure are run over
complete enumerated populations; a single counterexample verdict fails
the build.
"""

from bergeturan.hypergraph import build, hyperedge_neighborhood
from bergeturan.search import (
    CASE_LARGE,
    CASE_SMALL,
    FamilySpec,
    enumerate_connected_free,
    sparse_set_check,
    sparse_set_constructive,
)

STAR5 = build(5, 3, [[0, 1, 2], [0, 3, 4]])
STAR7 = build(7, 3, [[0, 1, 2], [0, 3, 4], [0, 5, 6]])
DOUBLE = build(4, 3, [[0, 1, 2], [0, 1, 3]])
SINGLE = build(3, 3, [[0, 1, 2]])


def test_star7_exhaustive_witness():
    rep = sparse_set_check(STAR7, 1)
    assert rep.verdict == "witness_found"
    assert rep.case == CASE_SMALL
    assert rep.neighborhood_size <= 2
    assert len(rep.subset) >= 4
    assert len(hyperedge_neighborhood(STAR7, rep.subset)) == rep.neighborhood_size


def test_star7_constructive_trace():
    # Longest path pivots on the hub; the two end edges minus the hub
    # give the four outer vertices of those edges, meeting 2 <= m+1 edges.
    rep = sparse_set_constructive(STAR7, 1)
    assert rep.verdict == "witness_found"
    assert rep.subset == (1, 2, 3, 4)
    assert rep.neighborhood_size == 2
    assert rep.case == CASE_SMALL and rep.exact_size_match


def test_double_edge_violates_top_cycle_precondition():
    for fn in (sparse_set_check, sparse_set_constructive):
        rep = fn(DOUBLE, 1)
        assert rep.verdict == "precondition_violated"
        assert "cycle" in rep.reason


def test_single_edge_is_degenerate():
    for fn in (sparse_set_check, sparse_set_constructive):
        rep = fn(SINGLE, 1)
        assert rep.verdict == "precondition_violated"
        assert "degenerate" in rep.reason


def test_multiplicity_cap_precondition():
    h = build(5, 3, [[0, 1, 2], [0, 1, 2], [0, 3, 4]])
    rep = sparse_set_check(h, 1)
    assert rep.verdict == "precondition_violated"
    assert "multiplicity" in rep.reason


def test_constructive_agrees_with_exhaustive_on_population():
    # r=3, simple, no length-3 Berge path, n <= 8: every instance passing
    # the preconditions must yield a witness from both procedures.
    confirmed = 0
    for n in range(4, 9):
        for h in enumerate_connected_free(n, 3, FamilySpec("bp", 3)):
            chk = sparse_set_check(h, 1)
            con = sparse_set_constructive(h, 1)
            assert chk.verdict in ("witness_found", "precondition_violated")
            assert con.verdict == chk.verdict
            if chk.verdict == "witness_found":
                confirmed += 1
                assert con.neighborhood_size <= max(2, con.t)
    assert confirmed == 2  # the two stars


def test_population_r4_bp4_including_recursive_branch():
    # The r=4 population exercises the recursive union construction
    # (end edges revisiting interior defining vertices).
    confirmed = 0
    for n in range(5, 9):
        for h in enumerate_connected_free(n, 4, FamilySpec("bp", 4)):
            chk = sparse_set_check(h, 1)
            if chk.verdict != "witness_found":
                continue
            confirmed += 1
            con = sparse_set_constructive(h, 1)
            assert con.verdict == "witness_found", h
            size = len(con.subset)
            if con.case == CASE_SMALL:
                assert size >= 2 * h.r - 2 and con.neighborhood_size <= 2
            else:
                assert size >= 2 * h.r - 1 and con.neighborhood_size <= con.t
    assert confirmed >= 5


def test_population_with_multiplicity_two():
    confirmed = 0
    for n in range(4, 8):
        for h in enumerate_connected_free(n, 3, FamilySpec("bp", 3, multiplicity_cap=2)):
            chk = sparse_set_check(h, 2)
            if chk.verdict != "witness_found":
                continue
            confirmed += 1
            con = sparse_set_constructive(h, 2)
            assert con.verdict == "witness_found", h
    assert confirmed >= 2


def test_report_json_shape():
    obj = sparse_set_check(STAR7, 1).to_json_obj()
    assert obj["verdict"] == "witness_found"
    assert obj["subset"] is not None and obj["t"] == 2


def test_exhaustive_scan_size_guard():
    import pytest

    from bergeturan.hypergraph import Hypergraph
    from bergeturan.search import SearchLimitError

    big = Hypergraph(17, 3, ((0, 1, 2),))
    with pytest.raises(SearchLimitError):
        sparse_set_check(big, 1)
