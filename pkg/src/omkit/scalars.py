"""Exact scalars: rationals and sparse multivariate polynomials over Q.

A *scalar* is either a :class:`fractions.Fraction` or a :class:`Polynomial`
with at least one non-constant term. Arithmetic between the two always
collapses constant polynomials back to ``Fraction`` so the rational fast paths
stay cheap.

Polynomial sign questions are answered by a deliberately weak oracle
(:func:`scalar_sign`): a polynomial is known positive only when every
coefficient is positive and every variable is assumed positive.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Mapping, Union

from .errors import ScalarSyntaxError, UnknownSymbolError

# A monomial is a sorted tuple of (variable, exponent) pairs with exponent > 0.
Monomial = tuple

Scalar = Union[Fraction, "Polynomial"]

_ONE_MONO: Monomial = ()


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for var, e in m2:
        exps[var] = exps.get(var, 0) + e
    return tuple(sorted(exps.items()))


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


class Polynomial:
    """Sparse polynomial with rational coefficients.

    Instances are immutable. Build them with :meth:`variable`,
    :func:`parse_scalar` or arithmetic; the constructor expects an already
    canonical ``{monomial: coefficient}`` map.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction]):
        self._terms = dict(terms)
        self._hash = None

    @staticmethod
    def variable(name: str) -> "Polynomial":
        return Polynomial({((name, 1),): Fraction(1)})

    @staticmethod
    def _make(terms: dict) -> Scalar:
        terms = {m: c for m, c in terms.items() if c != 0}
        if not terms:
            return Fraction(0)
        if len(terms) == 1 and _ONE_MONO in terms:
            return terms[_ONE_MONO]
        return Polynomial(terms)

    @property
    def variables(self) -> tuple:
        """Sorted names of the variables that occur with positive degree."""
        names = set()
        for m in self._terms:
            names.update(v for v, _ in m)
        return tuple(sorted(names))

    @property
    def terms(self) -> dict:
        """Map from exponent tuples (aligned with :attr:`variables`) to coefficients."""
        names = self.variables
        out = {}
        for m, c in self._terms.items():
            exps = dict(m)
            out[tuple(exps.get(v, 0) for v in names)] = c
        return out

    def monomials(self) -> dict:
        return dict(self._terms)

    def coefficients(self) -> list:
        return list(self._terms.values())

    def degree(self) -> int:
        return max(_mono_degree(m) for m in self._terms)

    def content(self) -> Fraction:
        """Positive rational content: gcd of numerators over lcm of denominators."""
        coeffs = self._terms.values()
        num = reduce(gcd, (c.numerator for c in coeffs), 0)
        den = reduce(lcm, (c.denominator for c in coeffs), 1)
        return Fraction(num, den)

    def sorted_terms(self) -> list:
        """Terms in graded lexicographic order, largest first."""
        names = self.variables

        def key(item):
            m = dict(item[0])
            exps = tuple(m.get(v, 0) for v in names)
            return (sum(exps), exps)

        return sorted(self._terms.items(), key=key, reverse=True)

    def sort_key(self) -> tuple:
        """Total order on polynomials used for canonical printing."""
        names = self.variables
        out = []
        for m, c in self.sorted_terms():
            d = dict(m)
            exps = tuple(d.get(v, 0) for v in names)
            out.append((sum(exps), tuple((v, d.get(v, 0)) for v in names), c))
        return tuple(out)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        if isinstance(other, Fraction):
            terms[_ONE_MONO] = terms.get(_ONE_MONO, Fraction(0)) + other
        else:
            for m, c in other._terms.items():
                terms[m] = terms.get(m, Fraction(0)) + c
        return Polynomial._make(terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if isinstance(other, Fraction):
            if other == 0:
                return Fraction(0)
            return Polynomial({m: c * other for m, c in self._terms.items()})
        terms: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                terms[m] = terms.get(m, Fraction(0)) + c1 * c2
        return Polynomial._make(terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not isinstance(other, Fraction):
            raise TypeError("polynomials can only be divided by nonzero rationals")
        if other == 0:
            raise ZeroDivisionError("polynomial division by zero")
        return Polynomial({m: c / other for m, c in self._terms.items()})

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result: Scalar = Fraction(1)
        base: Scalar = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            # canonical polynomials are never constant
            return False
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return True

    def __repr__(self):
        return f"Polynomial({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)

    # evaluation -----------------------------------------------------------

    def substitute(self, values: Mapping[str, object]) -> Scalar:
        """Replace the given variables by rationals; other variables stay symbolic."""
        result: Scalar = Fraction(0)
        vals = {k: Fraction(v) for k, v in values.items()}
        for m, c in self._terms.items():
            term: Scalar = c
            rest = []
            for var, e in m:
                if var in vals:
                    term = term * vals[var] ** e
                else:
                    rest.append((var, e))
            if rest:
                term = term * Polynomial({tuple(rest): Fraction(1)})
            result = result + term
        return result

    def evaluate(self, point: Mapping[str, object]) -> Fraction:
        missing = set(self.variables) - set(point)
        if missing:
            raise UnknownSymbolError(f"no value given for {sorted(missing)}")
        value = self.substitute(point)
        assert isinstance(value, Fraction)
        return value


def _coerce(x):
    if isinstance(x, (Fraction, Polynomial)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return NotImplemented


def as_scalar(x) -> Scalar:
    """Coerce ints, Fractions, Polynomials or grammar strings to a scalar."""
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x, None)
    raise TypeError(f"cannot interpret {x!r} as an exact scalar")


def is_rational(s) -> bool:
    return not isinstance(s, Polynomial)


def is_zero(s) -> bool:
    return not isinstance(s, Polynomial) and s == 0


def substitute(s: Scalar, values: Mapping[str, object]) -> Scalar:
    if isinstance(s, Polynomial):
        return s.substitute(values)
    return s


def evaluate(s: Scalar, point: Mapping[str, object]) -> Fraction:
    if isinstance(s, Polynomial):
        return s.evaluate(point)
    return Fraction(s)


def variables_of(s: Scalar) -> tuple:
    return s.variables if isinstance(s, Polynomial) else ()


# printing -----------------------------------------------------------------


def _format_monomial(m: Monomial) -> str:
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)


def format_scalar(s: Scalar) -> str:
    """Render a scalar in the text grammar accepted by :func:`parse_scalar`."""
    if not isinstance(s, Polynomial):
        return str(Fraction(s))
    parts = []
    for i, (m, c) in enumerate(s.sorted_terms()):
        neg = c < 0
        a = -c if neg else c
        if not m:
            body = str(a)
        elif a == 1:
            body = _format_monomial(m)
        else:
            body = f"{a}*{_format_monomial(m)}"
        if i == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)


# parsing ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("id", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ScalarSyntaxError(f"unexpected character {ch!r}", text, start)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables):
        self.text = text
        self.variables = None if variables is None else set(variables)
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return ScalarSyntaxError(message, self.text, tok[2])

    def parse(self) -> Scalar:
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            op_tok = self.take()
            rhs = self.factor()
            if op_tok[1] == "*":
                value = value * rhs
            else:
                if isinstance(rhs, Polynomial):
                    raise self.error("division by a non-constant expression", op_tok)
                if rhs == 0:
                    raise self.error("division by zero", op_tok)
                value = value / rhs
        return value

    def factor(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("+", "-"):
            self.take()
            value = self.factor()
            return -value if tok[1] == "-" else value
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num":
                raise self.error("exponent must be a nonnegative integer literal", tok)
            return base ** int(tok[1])
        return base

    def atom(self):
        tok = self.take()
        kind, val, pos = tok
        if kind == "num":
            return Fraction(int(val))
        if kind == "id":
            if self.variables is not None and val not in self.variables:
                raise UnknownSymbolError(f"unknown identifier {val!r} at position {pos}")
            return Polynomial.variable(val)
        if kind == "op" and val == "(":
            value = self.expr()
            close = self.take()
            if close[1] != ")":
                raise self.error("expected ')'", close)
            return value
        raise self.error(f"unexpected {val!r}" if val else "unexpected end of input", tok)


def parse_scalar(text: str, variables: Iterable[str] | None = ()) -> Scalar:
    """Parse a rational or polynomial expression.

    ``variables`` lists the admissible identifiers; pass ``None`` to accept any
    identifier.

    >>> parse_scalar("3/4")
    Fraction(3, 4)
    >>> str(parse_scalar("2*a^2 - b/2", ["a", "b"]))
    '2*a^2 - 1/2*b'
    """
    return _Parser(str(text), variables).parse()


# signs and assumptions ----------------------------------------------------


@dataclass(frozen=True)
class AssumptionSet:
    positive_symbols: frozenset = field(default_factory=frozenset)

    def __init__(self, positive_symbols: Iterable[str] = (), declared: Iterable[str] | None = None):
        symbols = frozenset(positive_symbols)
        if declared is not None:
            unknown = symbols - set(declared)
            if unknown:
                raise UnknownSymbolError(f"assumption on undeclared symbols {sorted(unknown)}")
        object.__setattr__(self, "positive_symbols", symbols)

    def __bool__(self):
        return bool(self.positive_symbols)


NO_ASSUMPTIONS = AssumptionSet()


def _rational_sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def scalar_sign(s: Scalar, assumptions: AssumptionSet | None = None) -> int | None:
    """Sign of ``s`` as -1, 0 or 1, or ``None`` when it cannot be decided."""
    if not isinstance(s, Polynomial):
        return _rational_sign(Fraction(s))
    positive = assumptions.positive_symbols if assumptions else frozenset()
    if not set(s.variables) <= positive:
        return None
    coeffs = s.coefficients()
    if all(c > 0 for c in coeffs):
        return 1
    if all(c < 0 for c in coeffs):
        return -1
    return None


# constraints --------------------------------------------------------------


class Verdict(enum.Enum):
    ALWAYS = "always"
    NEVER = "never"


_RELATIONS = (">", ">=")


@dataclass(frozen=True)
class Constraint:
    """``poly > 0`` or ``poly >= 0``, optionally only where ``guard != 0``."""

    poly: Polynomial
    relation: str
    guard: Scalar | None = None

    def __post_init__(self):
        if self.relation not in _RELATIONS:
            raise ValueError(f"relation must be one of {_RELATIONS}")
        if not isinstance(self.poly, Polynomial):
            raise TypeError("constraint polynomial must be non-constant")

    def __str__(self):
        text = f"{format_scalar(self.poly)} {self.relation} 0"
        if self.guard is not None:
            text += f" if {format_scalar(self.guard)} != 0"
        return text

    def sort_key(self):
        guard_key = () if self.guard is None else (format_scalar(self.guard),)
        return (self.poly.sort_key(), self.relation, guard_key)

    def holds_at(self, point: Mapping[str, object]) -> bool:
        if self.guard is not None and evaluate(self.guard, point) == 0:
            return True
        value = self.poly.evaluate(point)
        return value > 0 if self.relation == ">" else value >= 0


def normalize_constraint(poly: Scalar, relation: str, guard: Scalar | None = None):
    """Divide ``poly`` by its positive content; constants become a :class:`Verdict`."""
    if relation not in _RELATIONS:
        raise ValueError(f"relation must be one of {_RELATIONS}")
    if not isinstance(poly, Polynomial):
        value = Fraction(poly)
        ok = value > 0 if relation == ">" else value >= 0
        return Verdict.ALWAYS if ok else Verdict.NEVER
    if guard is not None and not isinstance(guard, Polynomial):
        # a constant guard is either vacuous or always active
        if guard == 0:
            return Verdict.ALWAYS
        guard = None
    if isinstance(guard, Polynomial):
        guard = guard / guard.content()
    return Constraint(poly / poly.content(), relation, guard)


@dataclass(frozen=True)
class ConditionDisjunction:
    """A disjunction of conjunctions of constraints.

    An empty conjunction is unconditionally true; an empty list of branches
    is unsatisfiable.
    """

    branches: tuple = ()

    def __post_init__(self):
        canon = []
        for branch in self.branches:
            fs = frozenset(branch)
            if fs not in canon:
                canon.append(fs)
        canon.sort(key=lambda b: tuple(c.sort_key() for c in sorted(b, key=Constraint.sort_key)))
        object.__setattr__(self, "branches", tuple(canon))

    @property
    def satisfiable(self) -> bool:
        return bool(self.branches)

    @property
    def always(self) -> bool:
        return any(not b for b in self.branches)

    def as_sets(self) -> list:
        return [set(b) for b in self.branches]

    def holds_at(self, point: Mapping[str, object]) -> bool:
        return any(all(c.holds_at(point) for c in b) for b in self.branches)

    def __str__(self):
        parts = []
        for b in self.branches:
            items = sorted(b, key=Constraint.sort_key)
            parts.append("{" + ", ".join(str(c) for c in items) + "}")
        return "[" + ", ".join(parts) + "]"

    def to_json(self) -> list:
        return [[str(c) for c in sorted(b, key=Constraint.sort_key)] for b in self.branches]
