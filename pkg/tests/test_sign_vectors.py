import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from omkit.errors import ShapeError, UndecidableSignError
from omkit.scalars import AssumptionSet, parse_scalar
from omkit.sign_vectors import (
    SignVector,
    compose,
    format_set,
    is_nonnegative,
    leq,
    lower_closure,
    sign_vector_of,
    sorted_signs,
)

signs = st.lists(st.sampled_from((-1, 0, 1)), min_size=1, max_size=7)


def pair_of(length_strategy=signs):
    return length_strategy.flatmap(
        lambda a: st.tuples(st.just(a), st.lists(st.sampled_from((-1, 0, 1)), min_size=len(a), max_size=len(a)))
    )


def test_parse_and_print():
    s = SignVector.parse("(+0-+)")
    assert list(s) == [1, 0, -1, 1]
    assert str(s) == "(+0-+)" and s.compact() == "+0-+"
    assert SignVector.parse("-+00") == SignVector.from_signs([-1, 1, 0, 0])
    with pytest.raises(ValueError):
        SignVector.parse("(+x)")


@given(pair_of())
def test_composition_against_definition(ab):
    a, b = (SignVector.from_signs(x) for x in ab)
    expected = [x if x != 0 else y for x, y in zip(ab[0], ab[1])]
    assert list(compose(a, b)) == expected


@given(pair_of())
def test_conformal_order_against_definition(ab):
    a, b = (SignVector.from_signs(x) for x in ab)
    assert leq(a, b) == all(x == 0 or x == y for x, y in zip(*ab))
    assert leq(a, compose(a, b))


@given(signs)
def test_lower_closure_is_all_conformal_minors(x):
    s = SignVector.from_signs(x)
    everything = {SignVector.from_signs(t) for t in itertools.product((-1, 0, 1), repeat=len(x))}
    assert lower_closure([s]) == {t for t in everything if leq(t, s)}


@given(signs)
def test_negation(x):
    s = SignVector.from_signs(x)
    assert list(-s) == [-v for v in x]
    assert -(-s) == s


def test_order_zero_minus_plus():
    items = [SignVector.parse(t) for t in ("+0", "0+", "-0", "00", "0-")]
    assert [s.compact() for s in sorted_signs(items)] == ["00", "0-", "0+", "-0", "+0"]
    assert format_set(items[:2]) == "{(0+), (+0)}"


def test_length_mismatch():
    with pytest.raises(ShapeError):
        compose(SignVector.parse("+0"), SignVector.parse("+"))


def test_sign_vector_of_parametric():
    a = parse_scalar("a", ("a",))
    assert sign_vector_of([a, Fraction(-1), 0], AssumptionSet(["a"])) == SignVector.parse("+-0")
    with pytest.raises(UndecidableSignError):
        sign_vector_of([a - 1], AssumptionSet(["a"]))


def test_nonnegative():
    assert is_nonnegative(SignVector.parse("+0+"))
    assert not is_nonnegative(SignVector.parse("+-0"))
