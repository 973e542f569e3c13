import itertools

import pytest

from resolvekit import graphs
from resolvekit.errors import Graph6ParseError, NotConnectedError


def test_parse_graph6_examples():
    g = graphs.parse_graph6("@")
    assert g.q == 1 and g.edges() == []
    g = graphs.parse_graph6("A_")
    assert g.q == 2 and g.edges() == [(0, 1)]
    g = graphs.parse_graph6("Bw")
    assert g.q == 3 and g.edges() == [(0, 1), (0, 2), (1, 2)]


def test_parse_graph6_errors():
    with pytest.raises(Graph6ParseError):
        graphs.parse_graph6("B")          # truncated
    with pytest.raises(Graph6ParseError):
        graphs.parse_graph6(bytes([66, 20]))  # byte below 63
    with pytest.raises(Graph6ParseError):
        graphs.parse_graph6("")
    with pytest.raises(Graph6ParseError):
        graphs.parse_graph6("Bww")        # trailing bytes
    err = None
    try:
        graphs.parse_graph6(bytes([66, 254]))
    except Graph6ParseError as exc:
        err = exc
    assert err is not None and err.offset == 1


def _reference_encode(g: graphs.Graph) -> str:
    """Independent hand encoder used as the parser's oracle."""
    bits = []
    for j in range(1, g.q):
        for i in range(j):
            bits.append(1 if g.adj[i] >> j & 1 else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.q + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val * 2 + b
        out.append(chr(val + 63))
    return "".join(out)


def test_parse_inverts_reference_encoder_q_le_6():
    for q in range(2, 7):
        nbits = q * (q - 1) // 2
        step = 1 if q < 6 else 37   # sample the 6-vertex masks
        for mask in range(0, 1 << nbits, step):
            g = graphs.Graph.from_edge_mask(q, mask)
            assert graphs.parse_graph6(_reference_encode(g)) == g
            assert graphs.parse_graph6(graphs.write_graph6(g)) == g
            assert graphs.write_graph6(g) == _reference_encode(g)


def test_iter_graph6_header_handling():
    text = [">>graph6<<", "Bw", "", "A_"]
    gs = list(graphs.iter_graph6(text))
    assert [g.q for g in gs] == [3, 2]
    glued = [">>graph6<<Bw", "A_"]
    assert [g.q for g in graphs.iter_graph6(glued)] == [3, 2]


def test_generators():
    assert graphs.path(3).edges() == [(0, 1), (1, 2)]
    assert graphs.cycle(4).edges() == [(0, 1), (1, 2), (0, 3), (2, 3)]
    km = graphs.complete_minus_clique(6, 3)
    assert sorted(km.degree(v) for v in range(6)) == [3, 3, 3, 5, 5, 5]
    assert all(km.degree(v) == 3 for v in range(3))
    assert graphs.complete_bipartite(2, 2).edges() == [(0, 2), (1, 2), (0, 3), (1, 3)]
    # K_{2,2} is the 4-cycle
    from resolvekit.analysis import isomorphic
    assert isomorphic(graphs.complete_bipartite(2, 2), graphs.cycle(4))
    with pytest.raises(ValueError):
        graphs.cycle(2)
    with pytest.raises(ValueError):
        graphs.path(1)
    with pytest.raises(ValueError):
        graphs.generator("hypercube", 3)


def test_distance_matrix_examples():
    m = graphs.distance_matrix(graphs.path(3))
    assert m.entries == ((0, 1, 2), (1, 0, 1), (2, 1, 0))
    assert m.diam == 2
    mk = graphs.distance_matrix(graphs.complete_minus_clique(6, 3))
    expect = tuple(tuple(2 if (i != j and i < 3 and j < 3) else (0 if i == j else 1)
                         for j in range(6)) for i in range(6))
    assert mk.entries == expect
    with pytest.raises(NotConnectedError):
        graphs.distance_matrix(graphs.Graph.from_edges(2, []))


def test_distance_matrix_invariants():
    for g in itertools.chain(graphs.enumerate_connected_labeled(5),
                             [graphs.cycle(9), graphs.complete_bipartite(3, 4)]):
        m = graphs.distance_matrix(g)
        q = g.q
        for i in range(q):
            assert m[i][i] == 0
            for j in range(q):
                assert m[i][j] == m[j][i]
                assert 0 <= m[i][j] <= m.diam
                for k in range(q):
                    assert m[i][j] <= m[i][k] + m[k][j]


def test_complete_distance_is_j_minus_i():
    for q in (2, 5, 8):
        m = graphs.distance_matrix(graphs.complete(q))
        assert m.entries == tuple(tuple(0 if i == j else 1 for j in range(q))
                                  for i in range(q))


def test_enumerate_connected_labeled_counts():
    assert len(list(graphs.enumerate_connected_labeled(2))) == 1
    assert len(list(graphs.enumerate_connected_labeled(3))) == 4
    assert len(list(graphs.enumerate_connected_labeled(4))) == 38
    assert len(list(graphs.enumerate_connected_labeled(5))) == 728
    masks = [g.edge_mask() for g in graphs.enumerate_connected_labeled(4)]
    assert masks == sorted(masks)
    with pytest.raises(ValueError):
        next(graphs.enumerate_connected_labeled(8))
