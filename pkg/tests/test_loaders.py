"""
Tests for graph ingestion.
"""
import logging

import numpy as np
import pytest

from src.exceptions import GraphLoadError
from src.services.loaders import (
    GraphFormat,
    load_adjacency_matrix,
    load_edge_list,
    load_graph,
    project_two_mode,
    write_edge_list,
)


def test_load_edge_list_path(write_file):
    """Test a two-row edge list gives P3."""
    g = load_edge_list(write_file("p3.csv", "a,b\nb,c\n"))

    assert g.n == 3
    assert g.m == 2
    assert g.node_ids == ("a", "b", "c")
    assert g.name == "p3"


def test_load_edge_list_collapses_reversed_rows(write_file, caplog):
    """Test (a,b) and (b,a) are the same edge."""
    with caplog.at_level(logging.WARNING):
        g = load_edge_list(write_file("dup.csv", "a,b\nb,a\n"))

    assert g.n == 2
    assert g.m == 1
    assert "duplicate" in caplog.text


def test_load_edge_list_keeps_first_weight(write_file):
    """Test duplicate rows keep the first weight."""
    g = load_edge_list(write_file("w.csv", "a,b,2.5\nb,a,7\n"))

    assert g.weights == {(0, 1): 2.5}
    assert g.is_weighted


def test_load_edge_list_comments_and_whitespace(write_file):
    """Test comment lines and a whitespace delimiter."""
    path = write_file("ws.txt", "# edges\n1 2\n2   3\n\n3 1\n")
    g = load_edge_list(path, delimiter=" ")

    assert g.node_ids == ("1", "2", "3")
    assert g.m == 3


def test_load_edge_list_self_loop(write_file):
    """Test self-loops are rejected with the row index."""
    with pytest.raises(GraphLoadError) as excinfo:
        load_edge_list(write_file("loop.csv", "a,b\nc,c\n"))

    assert excinfo.value.row == 2
    assert "self-loop" in str(excinfo.value)


@pytest.mark.parametrize("weight", ["0", "-1.5"])
def test_load_edge_list_non_positive_weight(write_file, weight):
    """Test non-positive weights are rejected."""
    with pytest.raises(GraphLoadError) as excinfo:
        load_edge_list(write_file("neg.csv", f"a,b,1\nb,c,{weight}\n"))

    assert excinfo.value.row == 2


def test_load_edge_list_non_numeric_weight(write_file):
    """Test a weight that does not parse."""
    with pytest.raises(GraphLoadError, match="not a number"):
        load_edge_list(write_file("bad.csv", "a,b,heavy\n"))


def test_load_edge_list_missing_field(write_file):
    """Test a row with a single field."""
    with pytest.raises(GraphLoadError) as excinfo:
        load_edge_list(write_file("short.csv", "a,b\nc\n"))

    assert excinfo.value.row == 2


def test_load_edge_list_too_many_fields(write_file):
    """Test rows wider than source,target,weight."""
    with pytest.raises(GraphLoadError):
        load_edge_list(write_file("wide.csv", "a,b,1,2\n"))


def test_load_edge_list_wide_later_row(write_file):
    """Test a wide row after a valid one reports its row."""
    with pytest.raises(GraphLoadError) as excinfo:
        load_edge_list(write_file("wide.csv", "a,b,1\nb,c,1,2\n"))

    assert excinfo.value.row == 2


def test_load_edge_list_mixed_weights(write_file):
    """Test unweighted and weighted rows in one file."""
    g = load_edge_list(write_file("mixed.csv", "a,b\nb,c,2.0\n"))

    assert g.m == 2
    assert g.weights == {(1, 2): 2.0}
    assert g.is_weighted


def test_load_edge_list_invalid_utf8(tmp_path):
    """Test undecodable bytes raise a load error."""
    path = tmp_path / "binary.csv"
    path.write_bytes(b"a,b\n\xff\xfe,c\n")

    with pytest.raises(GraphLoadError, match="UTF-8"):
        load_edge_list(str(path))


@pytest.mark.parametrize("text", ["", "# only a comment\n"])
def test_load_edge_list_empty(write_file, text):
    """Test empty files are rejected."""
    with pytest.raises(GraphLoadError, match="empty"):
        load_edge_list(write_file("empty.csv", text))


def test_load_edge_list_missing_file(tmp_path):
    """Test a path that does not exist."""
    with pytest.raises(GraphLoadError, match="no such file"):
        load_edge_list(str(tmp_path / "nope.csv"))


def test_edge_list_round_trip(write_file, tmp_path):
    """Test load, write, reload is a fixed point."""
    original = load_edge_list(write_file("g.csv", "x,y,2\ny,z,1.5\nz,w,3\nw,x,1\n"))
    out = str(tmp_path / "out.csv")
    write_edge_list(original, out)
    reloaded = load_edge_list(out)

    assert set(reloaded.node_ids) == set(original.node_ids)
    assert set(map(frozenset, reloaded.edge_id_pairs())) == set(
        map(frozenset, original.edge_id_pairs())
    )
    weights = lambda g: {
        frozenset((g.node_ids[i], g.node_ids[j])): w for (i, j), w in g.weights.items()
    }
    assert weights(reloaded) == weights(original)


def test_load_adjacency_matrix_k2(write_file):
    """Test [[0,1],[1,0]] loads as K2 with synthesized ids."""
    g = load_adjacency_matrix(write_file("k2.csv", "0,1\n1,0\n"))

    assert g.node_ids == ("0", "1")
    assert g.m == 1
    assert not g.is_weighted


def test_load_adjacency_matrix_zero(write_file):
    """Test an all-zero matrix keeps every node as an isolate."""
    g = load_adjacency_matrix(write_file("zero.csv", "0,0,0\n0,0,0\n0,0,0\n"))

    assert g.n == 3
    assert g.m == 0


def test_load_adjacency_matrix_weights(write_file):
    """Test non-unit entries are stored as weights."""
    g = load_adjacency_matrix(write_file("w.csv", "0,2,0\n2,0,0.5\n0,0.5,0\n"))

    assert g.weights == {(0, 1): 2.0, (1, 2): 0.5}


def test_load_adjacency_matrix_headers(write_file):
    """Test header row and column become node ids."""
    g = load_adjacency_matrix(write_file("h.csv", ",ann,bob\nann,0,1\nbob,1,0\n"))

    assert g.node_ids == ("ann", "bob")
    assert g.m == 1


def test_load_adjacency_matrix_header_row_only(write_file):
    """Test a header row without a header column."""
    g = load_adjacency_matrix(write_file("h.csv", "ann,bob,cy\n0,1,0\n1,0,0\n0,0,0\n"))

    assert g.node_ids == ("ann", "bob", "cy")
    assert g.m == 1


def test_load_adjacency_matrix_not_square(write_file):
    """Test non-square matrices are rejected."""
    with pytest.raises(GraphLoadError, match="not square"):
        load_adjacency_matrix(write_file("ns.csv", "0,1,0\n1,0,1\n"))


def test_load_adjacency_matrix_asymmetric(write_file):
    """Test asymmetric matrices are rejected unless symmetrized."""
    path = write_file("dir.csv", "0,1,0\n0,0,2\n0,0,0\n")

    with pytest.raises(GraphLoadError, match="not symmetric"):
        load_adjacency_matrix(path)

    g = load_adjacency_matrix(path, symmetrize=True)
    assert g.m == 2
    assert g.weights == {(0, 1): 1.0, (1, 2): 2.0}


def test_load_adjacency_matrix_tolerates_round_off(write_file):
    """Test asymmetry below 1e-9 is accepted."""
    g = load_adjacency_matrix(write_file("r.csv", "0,1\n1.0000000000001,0\n"))

    assert g.m == 1


def test_load_adjacency_matrix_diagonal(write_file):
    """Test a non-zero diagonal is rejected."""
    with pytest.raises(GraphLoadError, match="diagonal"):
        load_adjacency_matrix(write_file("d.csv", "1,0\n0,0\n"))


def test_load_adjacency_matrix_non_numeric(write_file):
    """Test a stray word inside the grid."""
    with pytest.raises(GraphLoadError, match="non-numeric"):
        load_adjacency_matrix(write_file("nn.csv", "0,1\n1,x\n"))


def test_project_two_mode_single_event(write_file):
    """Test two actors at one event form K2 with weight 1."""
    g = project_two_mode(write_file("e.csv", "1\n1\n"))

    assert g.n == 2
    assert g.m == 1
    assert g.weights == {(0, 1): 1.0}


def test_project_two_mode_shared_events(write_file):
    """Test weights count shared events and non-attendees stay isolated."""
    g = project_two_mode(write_file("e.csv", "actor,e1,e2\na,1,1\nb,1,1\nc,0,0\n"))

    assert g.node_ids == ("a", "b", "c")
    assert g.edge_id_pairs() == [("a", "b")]
    assert g.weights == {(0, 1): 2.0}
    assert g.degrees().tolist() == [1, 1, 0]


def test_project_two_mode_non_binary(write_file):
    """Test incidence entries other than 0/1 are rejected."""
    with pytest.raises(GraphLoadError, match="non-binary"):
        project_two_mode(write_file("nb.csv", "2,0\n0,1\n"))


def test_project_two_mode_brute_force(write_file):
    """Test projected weights against a double loop over events."""
    rng = np.random.default_rng(7)
    for trial in range(5):
        actors, events = rng.integers(2, 21, size=2)
        incidence = (rng.random((actors, events)) < 0.3).astype(int)
        text = "\n".join(",".join(str(v) for v in row) for row in incidence) + "\n"
        g = project_two_mode(write_file(f"t{trial}.csv", text))

        expected = {}
        for i in range(actors):
            for j in range(i + 1, actors):
                shared = sum(1 for e in range(events) if incidence[i, e] and incidence[j, e])
                if shared:
                    expected[(i, j)] = float(shared)
        assert g.n == actors
        assert dict(g.weights) == expected
        assert g.edges == frozenset(expected)


def test_load_graph_dispatch(write_file):
    """Test the format dispatcher."""
    edges = write_file("g.csv", "a,b\n")
    matrix = write_file("m.csv", "0,1\n1,0\n")
    incidence = write_file("i.csv", "1,0\n1,1\n")

    assert load_graph(edges).m == 1
    assert load_graph(matrix, GraphFormat.MATRIX).m == 1
    assert load_graph(incidence, "two-mode").weights == {(0, 1): 1.0}
    assert load_graph(edges, name="custom").name == "custom"
