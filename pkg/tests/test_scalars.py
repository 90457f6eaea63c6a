from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from omkit.errors import ScalarSyntaxError, UnknownSymbolError
from omkit.scalars import (
    AssumptionSet,
    ConditionDisjunction,
    Polynomial,
    Verdict,
    evaluate,
    format_scalar,
    normalize_constraint,
    parse_scalar,
    scalar_sign,
)

VARS = ("a", "b", "c")
a, b, c = (Polynomial.variable(v) for v in VARS)

fractions = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 4))


@st.composite
def polynomials(draw):
    value = Fraction(0)
    for _ in range(draw(st.integers(0, 4))):
        term = draw(fractions)
        for v in VARS:
            term = term * Polynomial.variable(v) ** draw(st.integers(0, 2))
        value = value + term
    return value


points = st.fixed_dictionaries({v: fractions for v in VARS})


@given(polynomials())
def test_print_parse_round_trip(p):
    assert parse_scalar(format_scalar(p), VARS) == p


@given(polynomials(), polynomials(), polynomials())
@settings(max_examples=60)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert p - p == 0


@given(polynomials(), polynomials(), points)
@settings(max_examples=60)
def test_evaluation_is_a_ring_homomorphism(p, q, pt):
    assert evaluate(p + q, pt) == evaluate(p, pt) + evaluate(q, pt)
    assert evaluate(p * q, pt) == evaluate(p, pt) * evaluate(q, pt)


@given(polynomials())
def test_sign_of_negation(p):
    assumptions = AssumptionSet(VARS)
    s = scalar_sign(p, assumptions)
    t = scalar_sign(-p, assumptions)
    assert (s is None and t is None) or s == -t


@given(polynomials(), points)
@settings(max_examples=60)
def test_decided_sign_is_sound_on_positive_points(p, pt):
    s = scalar_sign(p, AssumptionSet(VARS))
    positive_pt = {k: abs(v) + Fraction(1, 7) for k, v in pt.items()}
    if s is not None:
        value = evaluate(p, positive_pt)
        assert (value > 0) - (value < 0) == s


def test_parse_examples():
    assert parse_scalar("3/4") == Fraction(3, 4)
    assert parse_scalar("-(2)") == -2
    assert parse_scalar(" a - c ", VARS) == a - c
    assert format_scalar(parse_scalar("2*a^2 - b/2", VARS)) == "2*a^2 - 1/2*b"
    assert format_scalar(parse_scalar("b + a*c + a^2", VARS)) == "a^2 + a*c + b"


@pytest.mark.parametrize("text, pos", [("1 +", 3), ("a ** 2", 3), ("2 $ 3", 2), ("(a", 2), ("", 0)])
def test_syntax_errors_carry_positions(text, pos):
    with pytest.raises(ScalarSyntaxError) as info:
        parse_scalar(text, VARS)
    assert info.value.position == pos


def test_division_rules():
    with pytest.raises(ScalarSyntaxError):
        parse_scalar("1/a", VARS)
    with pytest.raises(ScalarSyntaxError):
        parse_scalar("a/0", VARS)


def test_unknown_symbol():
    with pytest.raises(UnknownSymbolError):
        parse_scalar("a + z", VARS)
    assert parse_scalar("z", None) == Polynomial.variable("z")


def test_incomplete_sign_oracle():
    pos = AssumptionSet(["a", "b"])
    assert scalar_sign(a * b + 2, pos) == 1
    assert scalar_sign(-a - b, pos) == -1
    assert scalar_sign(a - b, pos) is None
    assert scalar_sign(a + c, pos) is None
    assert scalar_sign(a + 1) is None
    assert scalar_sign(Fraction(-3, 2)) == -1


def test_constraint_normalization():
    assert str(normalize_constraint(4 * a - 4 * c, ">")) == "a - c > 0"
    assert str(normalize_constraint(-2 * b, ">=")) == "-b >= 0"
    assert normalize_constraint(Fraction(3), ">") is Verdict.ALWAYS
    assert normalize_constraint(Fraction(0), ">") is Verdict.NEVER
    assert normalize_constraint(Fraction(0), ">=") is Verdict.ALWAYS
    assert str(normalize_constraint(a * b, ">", 3 * a)) == "a*b > 0 if a != 0"


def test_disjunction_canonical_order():
    x = normalize_constraint(b, ">")
    y = normalize_constraint(a - c, ">")
    z = normalize_constraint(a, ">")
    d1 = ConditionDisjunction(({x, y, z},))
    d2 = ConditionDisjunction(({z, y, x}, {x, y, z}))
    assert str(d1) == str(d2) == "[{a > 0, a - c > 0, b > 0}]"
    assert d1.holds_at({"a": 2, "b": 1, "c": 1})
    assert not d1.holds_at({"a": 1, "b": 1, "c": 1})
    assert not ConditionDisjunction(()).satisfiable
    assert ConditionDisjunction((frozenset(),)).always
