import pytest
from hypothesis import given, settings, strategies as st

from gammafuzz.errors import AssociativityViolation, ParseError
from gammafuzz.formats import (
    format_gsg,
    format_ifs,
    format_set,
    load_gsg,
    parse_gsg,
    parse_ifs,
    parse_set,
)
from gammafuzz.harness import load_catalog
from gammafuzz.ifs import ifs_build

from test_properties import ifs_on


def test_gsg_round_trip_on_catalog():
    for entry in load_catalog():
        text = format_gsg(entry.G)
        assert parse_gsg(text) == entry.G
        assert format_gsg(parse_gsg(text)) == text


def test_comments_and_blank_lines(z4):
    text = format_gsg(z4).replace("[sgs]", "\n# products\n[sgs]  # first table")
    assert parse_gsg(text) == z4


@pytest.mark.parametrize(
    "text, message",
    [
        ("[carrier]\nS = a\nG = g\n[sgs]\na g a = a\n", "missing section"),
        ("S = a\n", "before the first section"),
        ("[carrier]\n[carrier]\n", "twice"),
        ("[bogus]\n", "unknown section"),
    ],
)
def test_gsg_parse_errors(text, message):
    with pytest.raises(ParseError, match=message):
        parse_gsg(text)


def test_gsg_violation_propagates(z4):
    text = format_gsg(z4).replace("1 1 1 = 1", "1 1 1 = 2", 1)
    with pytest.raises(AssociativityViolation):
        parse_gsg(text)


def test_file_helpers(tmp_path, z4):
    p = tmp_path / "z4.gsg"
    p.write_text(format_gsg(z4))
    assert load_gsg(p) == z4


def test_ifs_round_trip(example_A, snapshot):
    text = format_ifs(example_A)
    assert parse_ifs(text, snapshot) == example_A
    assert parse_ifs(text) == example_A


def test_ifs_errors(z4):
    with pytest.raises(ParseError):
        parse_ifs("[ifs]\n0 = 1\n")
    with pytest.raises(ParseError, match="do not match"):
        parse_ifs("[ifs]\n0 = 1 0\n", z4)
    with pytest.raises(ParseError):
        parse_ifs("[ifs]\n0 = 1 1/2\n")
    with pytest.raises(ParseError, match="twice"):
        parse_ifs("[ifs]\n0 = 1 0\n0 = 1 0\n")


def test_sets():
    assert parse_set(format_set({"b", "a"}, ["a", "b", "c"])) == {"a", "b"}
    assert format_set({"b", "a"}, ["b", "a"]).endswith("members = b a\n")
    assert parse_set("[set]\nmembers =\n") == frozenset()
    with pytest.raises(ParseError):
        parse_set("[set]\nelements = a\n")


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_ifs_round_trip_property(data):
    G = data.draw(st.sampled_from([e.G for e in load_catalog()]))
    A = data.draw(ifs_on(G))
    assert parse_ifs(format_ifs(A), G) == A
