"""Text formats: graph6 and the multigraph edge-list format."""

import pytest

from matchcov import (
    canonical_form,
    decode_graph6,
    encode_graph6,
    format_mg,
    new_multigraph,
    parse_graph_text,
    parse_mg,
)
from matchcov.errors import (
    MalformedGraph6Error,
    MatchcovError,
    NotSimpleError,
    ParseError,
)
from matchcov.zoo import complete_graph, cycle_graph, petersen_graph


def test_graph6_round_trip(connected_simple_upto_6):
    for g in connected_simple_upto_6:
        s = encode_graph6(g)
        h = decode_graph6(s)
        assert h.n == g.n and h.m == g.m
        assert canonical_form(h) == canonical_form(g)


def test_graph6_known_strings():
    # standard encodings of standard graphs
    assert encode_graph6(complete_graph(4)) == "C~"
    assert decode_graph6("C~").m == 6
    k4 = decode_graph6(encode_graph6(complete_graph(4)))
    assert canonical_form(k4) == canonical_form(complete_graph(4))
    pet = decode_graph6(encode_graph6(petersen_graph()))
    assert canonical_form(pet) == canonical_form(petersen_graph())


def test_graph6_rejects_multigraph():
    g = new_multigraph(2, [(0, 1), (0, 1)])
    with pytest.raises(NotSimpleError):
        encode_graph6(g)


def test_graph6_malformed():
    with pytest.raises(MalformedGraph6Error):
        decode_graph6("C")  # truncated bit block
    with pytest.raises(MalformedGraph6Error):
        decode_graph6("")
    with pytest.raises(MalformedGraph6Error):
        decode_graph6("C~ C~")


def test_mg_round_trip_with_multiplicity():
    g = new_multigraph(4, [(0, 1), (0, 1), (1, 2), (2, 3), (3, 0)])
    text = format_mg(g)
    h = parse_mg(text)
    assert h.n == 4 and h.m == 5
    assert h.multiplicity(0, 1) == 2
    assert canonical_form(h) == canonical_form(g)


def test_mg_format_shape():
    g = cycle_graph(4)
    lines = format_mg(g).strip().splitlines()
    assert lines[0].split() == ["4", "4"]
    assert len(lines) == 5


def test_parse_mg_errors():
    with pytest.raises(ParseError):
        parse_mg("")
    with pytest.raises(ParseError):
        parse_mg("2 1\n0 1\n0 1\n")  # edge count mismatch
    with pytest.raises(ParseError):
        parse_mg("x y\n")
    # structural problems surface as the constructor's own errors
    with pytest.raises(MatchcovError):
        parse_mg("2 1\n0 5\n")  # vertex out of range
    with pytest.raises(MatchcovError):
        parse_mg("3 1\n1 1\n")  # loop


def test_parse_graph_text_sniffs_both():
    g = cycle_graph(6)
    assert canonical_form(parse_graph_text(format_mg(g))) == canonical_form(g)
    assert canonical_form(parse_graph_text(encode_graph6(g))) == canonical_form(g)
    multi = new_multigraph(2, [(0, 1), (0, 1)])
    assert parse_graph_text(format_mg(multi)).m == 2
