import pytest
from hypothesis import given, settings

from eog.core import path_pattern
from eog.formats import (DuplicateEdgeError, EndpointRangeError, HeaderError, LabelTieError, SelfLoopError,
                         parse_eog, read_eog, serialize_eog, write_eog)
from strategies import edge_ordered_graphs


def test_parse_path():
    g = parse_eog("3 2\n0 1\n1 2\n")
    assert g.n == 3 and g.edges == ((0, 1), (1, 2))


def test_comments_and_orientation():
    g = parse_eog("# a path\n3 2\n1 0\n# middle\n2 1\n")
    assert g.edges == ((0, 1), (1, 2))


def test_labels_resort():
    g = parse_eog("4 3\n0 1 2.5\n1 2 0.5\n2 3 1\n")
    assert g == path_pattern([3, 1, 2])


@pytest.mark.parametrize("text,err", [
    ("2 1\n0 0\n", SelfLoopError),
    ("2 1\n0 2\n", EndpointRangeError),
    ("3 2\n0 1\n1 0\n", DuplicateEdgeError),
    ("", HeaderError),
    ("x y\n", HeaderError),
    ("3 2\n0 1\n", HeaderError),
    ("3 2\n0 1 1\n1 2 1\n", LabelTieError),
])
def test_distinct_errors(text, err):
    with pytest.raises(err):
        parse_eog(text)


@settings(max_examples=200, deadline=None)
@given(edge_ordered_graphs(max_n=8))
def test_round_trip(g):
    assert parse_eog(serialize_eog(g)) == g
    text = serialize_eog(g)
    assert serialize_eog(parse_eog(text)) == text


def test_file_io(tmp_path):
    g = path_pattern([1, 3, 4, 2])
    p = tmp_path / "g.eog"
    write_eog(g, p)
    assert read_eog(p) == g
