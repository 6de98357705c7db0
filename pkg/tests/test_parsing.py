"""Polynomial grammar: parsing, printing, round trips, error positions."""

import random

import pytest

from polarvar.parsing import ParseError, parse_polynomial, parse_system
from polarvar.poly import Polynomial

from conftest import random_poly


def test_basic_three_term_polynomial(K):
    f = parse_polynomial("x1^2 + 2*x2 - 3", 2, K)
    assert f.coefficient((2, 0)) == 1
    assert f.coefficient((0, 1)) == 2
    assert f.coefficient((0, 0)) == K.q - 3


def test_zero_literal(K):
    assert parse_polynomial("0", 3, K).is_zero
    assert str(Polynomial.zero(K, 3)) == "0"


def test_whitespace_insensitive(K):
    assert (parse_polynomial(" x1 ^2+ 2 * x2- 3 ", 2, K)
            == parse_polynomial("x1^2+2*x2-3", 2, K))


def test_leading_sign_and_coefficient_merging(K):
    f = parse_polynomial("-x1 + 2*x1 + x1", 1, K)
    assert f == parse_polynomial("2*x1", 1, K)
    assert parse_polynomial("x1 - x1", 1, K).is_zero


def test_repeated_factors_multiply(K):
    assert (parse_polynomial("x1*x1*x2^2", 2, K)
            == parse_polynomial("x1^2*x2^2", 2, K))
    assert (parse_polynomial("5*x1*x2*x1", 2, K)
            == parse_polynomial("5*x1^2*x2", 2, K))


def test_print_parse_round_trip_on_random_polynomials(K):
    rng = random.Random(71)
    for _ in range(500):
        f = random_poly(rng, K, 3, max_degree=4, terms=6)
        assert parse_polynomial(str(f), 3, K) == f


def test_round_trip_small_field(F7):
    rng = random.Random(72)
    for _ in range(100):
        f = random_poly(rng, F7, 2, max_degree=3, terms=4)
        assert parse_polynomial(str(f), 2, F7) == f


def test_syntax_error_carries_position(K):
    with pytest.raises(ParseError) as err:
        parse_polynomial("x1 + + x2", 2, K)
    assert err.value.position == 5
    with pytest.raises(ParseError):
        parse_polynomial("", 2, K)
    with pytest.raises(ParseError):
        parse_polynomial("x1 *", 2, K)
    with pytest.raises(ParseError):
        parse_polynomial("y1", 2, K)


def test_variable_index_out_of_range(K):
    with pytest.raises(ParseError):
        parse_polynomial("x3", 2, K)
    with pytest.raises(ParseError):
        parse_polynomial("x0", 2, K)


def test_exponent_overflow(K):
    with pytest.raises(ParseError):
        parse_polynomial("x1^1000001", 2, K)


def test_system_with_header_and_comments(K):
    text = """# a circle and a line
vars: 3
x1^2 + x2^2 - 1
x3   # the last coordinate
"""
    polys, n = parse_system(text, K)
    assert n == 3
    assert len(polys) == 2
    assert polys[1] == parse_polynomial("x3", 3, K)


def test_system_infers_ambient_from_max_index(K):
    polys, n = parse_system("x1 + x4\nx2^2\n", K)
    assert n == 4
    assert all(p.n == 4 for p in polys)


def test_system_errors(K):
    with pytest.raises(ParseError):
        parse_system("", K)
    with pytest.raises(ParseError):
        parse_system("# only comments\n", K)
    with pytest.raises(ParseError):
        parse_system("1 + 1\n", K)  # no variables to infer n from
    with pytest.raises(ParseError) as err:
        parse_system("x1\nx1 ++ 2\n", K)
    assert "line 2" in str(err.value)
    with pytest.raises(ParseError):
        parse_system("x1\nvars: 2\n", K)  # header not first
