"""Core hypergraph structure: validation, connectivity, neighborhoods,
induced substructures, canonical forms, serialization round-trips."""

import random

import pytest

from bergeturan.hypergraph import (
    CanonicalSizeError,
    Hypergraph,
    HypergraphError,
    are_isomorphic,
    build,
    canonical_key,
    canonical_relabeled,
    from_json,
    from_text,
    hyperedge_neighborhood,
    induced_subhypergraph,
    is_connected,
    relabel,
)

STAR73 = [[0, 1, 2], [0, 3, 4], [0, 5, 6]]
LOOSE_PATH = [[0, 1, 2], [2, 3, 4], [4, 5, 6]]


def random_hypergraph(rng, n, r, max_edges):
    import itertools

    pool = list(itertools.combinations(range(n), r))
    q = rng.randrange(0, max_edges + 1)
    return build(n, r, [rng.choice(pool) for _ in range(q)])


# -- build ------------------------------------------------------------

def test_build_basic():
    h = build(4, 3, [[0, 1, 2], [0, 1, 3]])
    assert h.num_edges() == 2
    assert h.max_multiplicity() == 1
    assert h.edges == ((0, 1, 2), (0, 1, 3))


def test_build_duplicate_lists_become_multiplicity():
    h = build(3, 3, [[0, 1, 2], [0, 1, 2]])
    assert h.num_edges() == 2
    assert h.multiplicity([2, 1, 0]) == 2
    assert h.max_multiplicity() == 2


def test_build_rejects_wrong_edge_size():
    with pytest.raises(HypergraphError):
        build(4, 3, [[0, 1]])
    with pytest.raises(HypergraphError):
        build(4, 3, [[0, 1, 1]])


def test_build_rejects_bad_ids_and_uniformity():
    with pytest.raises(HypergraphError):
        build(4, 3, [[0, 1, 4]])
    with pytest.raises(HypergraphError):
        build(4, 1, [[0]])


def test_build_orders_instances_canonically():
    a = build(5, 3, [[4, 3, 2], [2, 1, 0]])
    b = build(5, 3, [[0, 1, 2], [2, 3, 4]])
    assert a.edges == b.edges


# -- connectivity -----------------------------------------------------

def test_connectivity_star():
    assert is_connected(build(7, 3, STAR73))


def test_connectivity_disjoint_edges():
    assert not is_connected(build(6, 3, [[0, 1, 2], [3, 4, 5]]))


def test_connectivity_isolated_vertex():
    assert not is_connected(build(4, 3, [[0, 1, 2]]))


def test_connectivity_degenerate_single_vertex():
    assert is_connected(Hypergraph(1, 3, ()))
    assert not is_connected(Hypergraph(2, 3, ()))


def test_connectivity_invariant_under_relabeling():
    rng = random.Random(7)
    for _ in range(50):
        h = random_hypergraph(rng, 7, 3, 5)
        perm = list(range(7))
        rng.shuffle(perm)
        assert is_connected(h) == is_connected(relabel(h, tuple(perm)))


# -- neighborhoods ----------------------------------------------------

def test_neighborhood_star_example():
    h = build(7, 3, STAR73)
    # Direct set check: edges meeting {1,2,3,4} are exactly the first two.
    assert hyperedge_neighborhood(h, [1, 2, 3, 4]) == [0, 1]


def test_neighborhood_empty_and_full():
    h = build(7, 3, STAR73)
    assert hyperedge_neighborhood(h, []) == []
    assert hyperedge_neighborhood(h, range(7)) == [0, 1, 2]


def test_neighborhood_monotone():
    rng = random.Random(11)
    for _ in range(40):
        h = random_hypergraph(rng, 6, 3, 6)
        s = [v for v in range(6) if rng.random() < 0.4]
        t = sorted(set(s) | {rng.randrange(6)})
        assert set(hyperedge_neighborhood(h, s)) <= set(hyperedge_neighborhood(h, t))


# -- induced substructures --------------------------------------------

def test_induced_star_without_hub():
    h = build(7, 3, STAR73)
    sub, mapping = induced_subhypergraph(h, range(1, 7))
    assert sub.n == 6 and sub.num_edges() == 0
    assert mapping == {v: v - 1 for v in range(1, 7)}


def test_induced_identity():
    h = build(7, 3, STAR73)
    sub, _ = induced_subhypergraph(h, range(7))
    assert sub == h


def test_induced_containment():
    h = build(5, 3, [[0, 1, 2], [2, 3, 4]])
    sub, _ = induced_subhypergraph(h, [2, 3, 4])
    assert sub.edges == ((0, 1, 2),)


def test_induced_preserves_uniformity_and_multiplicity():
    h = build(5, 3, [[0, 1, 2], [0, 1, 2], [2, 3, 4]])
    sub, _ = induced_subhypergraph(h, [0, 1, 2])
    assert sub.edges == ((0, 1, 2), (0, 1, 2))


# -- canonical forms --------------------------------------------------

def test_canonical_invariant_under_relabeling():
    rng = random.Random(3)
    for _ in range(60):
        h = random_hypergraph(rng, 7, 3, 6)
        perm = list(range(7))
        rng.shuffle(perm)
        g = relabel(h, tuple(perm))
        assert canonical_key(h) == canonical_key(g)


def test_canonical_separates_star_and_loose_path():
    assert canonical_key(build(7, 3, STAR73)) != canonical_key(build(7, 3, LOOSE_PATH))


def test_canonical_multiplicity_is_invariant():
    simple = build(4, 3, [[0, 1, 2], [0, 1, 3]])
    doubled = build(4, 3, [[0, 1, 2], [0, 1, 2]])
    assert canonical_key(simple) != canonical_key(doubled)


def test_canonical_relabeled_is_fixed_point():
    rng = random.Random(5)
    for _ in range(30):
        h = random_hypergraph(rng, 6, 3, 5)
        c = canonical_relabeled(h)
        assert canonical_relabeled(c) == c
        assert are_isomorphic(h, c)


def test_canonical_distinguishes_nonisomorphic_small():
    # Same degree sequence can still differ; sample exhaustively at n=5, q=2.
    import itertools

    pool = list(itertools.combinations(range(5), 3))
    keys = {}
    for pair in itertools.combinations(pool, 2):
        h = build(5, 3, pair)
        keys.setdefault(canonical_key(h), set()).add(
            len(set(pair[0]) & set(pair[1]))
        )
    # Overlap size classifies 2-edge hypergraphs; canonical classes must agree.
    for overlaps in keys.values():
        assert len(overlaps) == 1


def test_canonical_size_limit():
    h = Hypergraph(13, 3, ())
    with pytest.raises(CanonicalSizeError):
        canonical_key(h)


def _nx_isomorphic(a, b):
    """Independent oracle: isomorphism of the colored bipartite incidence
    graphs (vertex side vs instance side), via networkx VF2."""
    import networkx as nx

    def incidence(h, tag):
        g = nx.Graph()
        for v in range(h.n):
            g.add_node((tag, "v", v), side="vertex")
        for i, e in enumerate(h.edges):
            g.add_node((tag, "e", i), side="edge")
            for v in e:
                g.add_edge((tag, "e", i), (tag, "v", v))
        return g

    return nx.is_isomorphic(
        incidence(a, "a"),
        incidence(b, "b"),
        node_match=lambda x, y: x["side"] == y["side"],
    )


def test_canonical_agrees_with_networkx_oracle():
    rng = random.Random(97)
    pairs_checked = 0
    agree_positive = 0
    for _ in range(120):
        h1 = random_hypergraph(rng, 6, 3, 4)
        if rng.random() < 0.5:
            perm = list(range(6))
            rng.shuffle(perm)
            h2 = relabel(h1, tuple(perm))
        else:
            h2 = random_hypergraph(rng, 6, 3, 4)
        if len(h1.edges) != len(h2.edges):
            continue
        pairs_checked += 1
        ours = canonical_key(h1) == canonical_key(h2)
        theirs = _nx_isomorphic(h1, h2)
        assert ours == theirs, (h1, h2)
        agree_positive += ours
    assert pairs_checked > 60 and agree_positive > 20


# -- serialization ----------------------------------------------------

def test_text_round_trip():
    h = build(7, 3, STAR73)
    assert from_text(h.to_text()) == h


def test_text_comments_and_multiplicity():
    text = "# star\n4 3\n0 1 2\n\n0 1 2\n"
    h = from_text(text)
    assert h.multiplicity([0, 1, 2]) == 2


def test_text_errors_carry_line_numbers():
    with pytest.raises(HypergraphError, match="line 2"):
        from_text("7 3\n0 1\n")
    with pytest.raises(HypergraphError, match="line 3"):
        from_text("7 3\n0 1 2\n0 1 9\n")


def test_json_round_trip():
    h = build(4, 3, [[0, 1, 2], [0, 1, 2], [1, 2, 3]])
    assert from_json(h.to_json()) == h
