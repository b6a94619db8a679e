from fractions import Fraction

import pytest
from hypothesis import given, settings

from isocut import random_instance, tight_instance
from isocut.io import ParseError, format_rational, parse_instance, parse_rational, serialize_instance

from .strategies import instances

STAR = """\
# S(1,1,2)
p mwc 4 3 3
t 1
t 2
t 3
e 1 4 1
e 2 4 1
e 3 4 2
"""


def test_parse_star(s112):
    inst = parse_instance(STAR)
    assert inst == s112
    assert (inst.n, inst.k, inst.m) == (4, 3, 3)


def test_rational_literal():
    inst = parse_instance("p mwc 2 1 2\nt 1\nt 2\ne 1 2 3/2\n")
    assert inst.edges[0][2] == Fraction(3, 2)
    inst = parse_instance("p mwc 2 1 2\nt 1\nt 2\ne 1 2 0.1\n")
    assert inst.edges[0][2] == Fraction(1, 10)


def test_duplicate_edges_merged():
    inst = parse_instance("p mwc 2 2 2\nt 1\nt 2\ne 1 2 1\ne 2 1 1/2\n")
    assert inst.edges == ((0, 1, Fraction(3, 2)),)


@pytest.mark.parametrize(
    "text, reason, line",
    [
        ("p mwc 2 1 2\nt 1\nt 2\ne 1 2 0\n", "nonpositive weight", 4),
        ("p mwc 2 1 2\nt 1\nt 2\ne 1 2 -3\n", "nonpositive weight", 4),
        ("p mwc 2 1\nt 1\nt 2\ne 1 2 1\n", "malformed header", 1),
        ("p cut 2 1 2\n", "malformed header", 1),
        ("p mwc 2 1 2\nt 1\nx 2\n", "unknown line tag", 3),
        ("p mwc 3 1 3\nt 1\nt 2\ne 1 2 1\n", "terminal count", 4),
        ("p mwc 2 2 2\nt 1\nt 2\ne 1 2 1\n", "edge count", 4),
        ("p mwc 2 1 2\nt 1\nt 3\ne 1 2 1\n", "out of range", 3),
        ("p mwc 2 1 2\nt 1\nt 2\ne 1 9 1\n", "out of range", 4),
        ("p mwc 2 1 2\nt 1\nt 2\ne 1 1 1\n", "self-loop", 4),
        ("p mwc 2 1 2\nt 1\nt 2\ne 1 2 abc\n", "not a rational", 4),
        ("p mwc 2 1 2\nt 1\nt 2\ne 1 2 1/0\n", "zero denominator", 4),
        ("t 1\n", "missing header", 1),
        ("", "missing header", 0),
        ("p mwc 2 1 2\nt 1\nt 1\ne 1 2 1\n", "duplicate terminal", 3),
    ],
)
def test_parse_errors(text, reason, line):
    with pytest.raises(ParseError) as info:
        parse_instance(text)
    assert reason in info.value.reason
    assert info.value.lineno == line


def test_serialize_lowest_terms():
    inst = parse_instance("p mwc 2 1 2\nt 1\nt 2\ne 1 2 10/4\n")
    assert serialize_instance(inst).splitlines()[-1] == "e 1 2 5/2"


def test_round_trip_star_and_g3(s112, g3):
    for inst in (s112, g3):
        assert parse_instance(serialize_instance(inst)) == inst


def test_serialize_is_canonical(s112):
    text = serialize_instance(s112)
    assert text == "# S(1,1,2)\n" + STAR.split("\n", 1)[1]


@given(instances(max_n=8))
@settings(max_examples=100, deadline=None)
def test_round_trip_property(inst):
    text = serialize_instance(inst)
    again = parse_instance(text)
    assert again == inst
    assert serialize_instance(again) == text


def test_round_trip_generated():
    for seed in range(20):
        inst = random_instance(7, 3, Fraction(1, 2), (Fraction(1, 3), Fraction(7, 2)), seed)
        assert parse_instance(serialize_instance(inst)) == inst
    assert parse_instance(serialize_instance(tight_instance(5, Fraction(1, 7)))) == tight_instance(5, Fraction(1, 7))


@pytest.mark.parametrize("text, value", [("3", 3), ("3/2", Fraction(3, 2)), ("0.25", Fraction(1, 4)), ("6/4", Fraction(3, 2))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


def test_format_rational():
    assert format_rational(Fraction(18, 11)) == "18/11"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(float("inf")) == "inf"


def test_leading_comment_names_instance():
    assert parse_instance(STAR).name == "S(1,1,2)"
    assert parse_instance(STAR, name="given").name == "given"
    assert parse_instance(STAR.split("\n", 1)[1]).name == ""
