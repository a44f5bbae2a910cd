import numpy as np
import pytest

from qsymgraph.errors import GraphValidationError
from qsymgraph.graphs import (
    cartesian_product_with_edge,
    complement,
    complete,
    cyclic_shift_is_automorphism,
    empty,
    from_adjacency_matrix,
    from_circulant_spec,
    from_edge_list,
    parse_adjacency_text,
    parse_circulant_spec,
    parse_edge_list_text,
    read_graph_file,
)


def test_circulant_spec_symbols():
    g = from_circulant_spec("C17(2,4,8)")
    assert g.n == 17
    assert all(g.degree(i) == 8 for i in range(17))
    assert g.neighbors(0) == [1, 2, 4, 8, 9, 13, 15, 16]


def test_spec_accepts_leading_one_and_spaces():
    assert parse_circulant_spec(" c19( 1, 7,8 ) ").jumps == (7, 8)
    assert str(parse_circulant_spec("C13")) == "C13"


@pytest.mark.parametrize("text, col", [("C13(7)", 5), ("C13(2,9)", 7), ("C13(2,,3)", 7)])
def test_spec_errors_carry_column(text, col):
    with pytest.raises(GraphValidationError) as exc:
        parse_circulant_spec(text)
    assert exc.value.column == col


def test_spec_garbage():
    with pytest.raises(GraphValidationError):
        parse_circulant_spec("D13(2)")


def test_prism_labeling():
    g = cartesian_product_with_edge(from_circulant_spec("C6"))
    assert g.n == 12
    assert g.num_edges == 18
    assert g.neighbors(0) == [1, 2, 10]
    assert g.neighbors(7) == [5, 6, 9]


def test_trivial_graphs():
    assert complete(5).is_complete()
    assert empty(5).is_empty()
    assert complement(complete(5)).is_empty()
    assert complement(complement(from_circulant_spec("C13(5)"))) == from_circulant_spec("C13(5)")


def test_cyclic_shift():
    assert cyclic_shift_is_automorphism(from_circulant_spec("C13(3,4)"))
    assert not cyclic_shift_is_automorphism(from_edge_list(4, [(0, 1)]))


def test_adjacency_round_trip():
    g = from_circulant_spec("C13(3,4)")
    a = g.adjacency_matrix()
    assert np.array_equal(a, a.T)
    assert from_adjacency_matrix(a) == g


def test_edge_list_validation():
    with pytest.raises(GraphValidationError):
        from_edge_list(3, [(0, 0)])
    with pytest.raises(GraphValidationError):
        from_edge_list(3, [(0, 5)])


def test_edge_list_text_errors_have_lines():
    with pytest.raises(GraphValidationError) as exc:
        parse_edge_list_text("3 2\n0 1\n1 x\n")
    assert exc.value.line == 3
    with pytest.raises(GraphValidationError) as exc:
        parse_edge_list_text("3 3\n0 1\n1 2\n")
    assert exc.value.line == 1


def test_adjacency_text_errors():
    with pytest.raises(GraphValidationError) as exc:
        parse_adjacency_text("010\n102\n010\n")
    assert (exc.value.line, exc.value.column) == (2, 3)
    with pytest.raises(GraphValidationError):
        parse_adjacency_text("011\n100\n000\n")


def test_read_graph_file_sniffs(tmp_path):
    p = tmp_path / "tri.txt"
    p.write_text("3 3\n0 1\n1 2\n0 2\n")
    assert read_graph_file(p).is_complete()
    q = tmp_path / "tri.adj"
    q.write_text("011\n101\n110\n")
    assert read_graph_file(q).is_complete()
    r = tmp_path / "junk.txt"
    r.write_text("hello world again\n")
    with pytest.raises(GraphValidationError):
        read_graph_file(r)


def test_digest_is_label_independent():
    g = from_circulant_spec("C13(5)")
    h = from_edge_list(13, g.edges())
    assert g.digest() == h.digest()
    assert g.label() == "C13(5)"
