"""Does the row space of a matrix meet a product of intervals?

:func:`exists_vector` decides this by scanning the elementary vectors of the
orthogonal complement (the kernel of the matrix) for one that is strictly
positive on the whole box. :func:`feasibility_oracle` answers the same
question independently by Fourier-Motzkin elimination and also produces a
witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

from .elementary import elementary_vectors
from .errors import EmptyIntervalError, ParametricError, ShapeError, UndecidableSignError
from .matrix import ExactMatrix, primitive_vector
from .scalars import AssumptionSet, Scalar, format_scalar, is_zero, parse_scalar, scalar_sign

_NEG_INF = {"-oo", "-inf", "-infinity"}
_POS_INF = {"oo", "+oo", "inf", "+inf", "infinity", "+infinity"}


def parse_bound(value) -> Fraction | float:
    """Rational endpoint, or ``float('±inf')`` for ``-oo``/``+oo``."""
    if isinstance(value, float) and value in (float("inf"), float("-inf")):
        return value
    if isinstance(value, str):
        text = value.strip().lower()
        if text in _NEG_INF:
            return float("-inf")
        if text in _POS_INF:
            return float("inf")
        parsed = parse_scalar(value, ())
        return Fraction(parsed)
    return Fraction(value)


def _format_bound(x) -> str:
    if x == float("inf"):
        return "+oo"
    if x == float("-inf"):
        return "-oo"
    return format_scalar(x)


@dataclass(frozen=True)
class Interval:
    lower: Fraction | float
    upper: Fraction | float
    lower_closed: bool = True
    upper_closed: bool = True

    def __post_init__(self):
        lower, upper = parse_bound(self.lower), parse_bound(self.upper)
        # infinite endpoints are always open
        lc = bool(self.lower_closed) and lower != float("-inf")
        uc = bool(self.upper_closed) and upper != float("inf")
        if lower == float("inf") or upper == float("-inf"):
            raise EmptyIntervalError(f"empty interval with endpoints {lower}, {upper}")
        if lower > upper or (lower == upper and not (lc and uc)):
            raise EmptyIntervalError(f"empty interval {self._text(lower, upper, lc, uc)}")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "lower_closed", lc)
        object.__setattr__(self, "upper_closed", uc)

    @staticmethod
    def _text(lower, upper, lc, uc) -> str:
        return f"{'[' if lc else '('}{_format_bound(lower)}, {_format_bound(upper)}{']' if uc else ')'}"

    def __str__(self):
        return self._text(self.lower, self.upper, self.lower_closed, self.upper_closed)

    @property
    def lower_bounded(self) -> bool:
        return self.lower != float("-inf")

    @property
    def upper_bounded(self) -> bool:
        return self.upper != float("inf")

    def __contains__(self, x) -> bool:
        x = Fraction(x)
        if self.lower_bounded and (x < self.lower or (x == self.lower and not self.lower_closed)):
            return False
        if self.upper_bounded and (x > self.upper or (x == self.upper and not self.upper_closed)):
            return False
        return True

    def is_superset_of(self, other: "Interval") -> bool:
        def lower_ok():
            if self.lower < other.lower:
                return True
            return self.lower == other.lower and (self.lower_closed or not other.lower_closed)

        def upper_ok():
            if self.upper > other.upper:
                return True
            return self.upper == other.upper and (self.upper_closed or not other.upper_closed)

        return lower_ok() and upper_ok()

    def to_json(self) -> dict:
        return {
            "lower": _format_bound(self.lower),
            "upper": _format_bound(self.upper),
            "lower_closed": self.lower_closed,
            "upper_closed": self.upper_closed,
        }


class IntervalBox(tuple):
    """Cartesian product of intervals."""

    def __new__(cls, intervals):
        intervals = tuple(intervals)
        for I in intervals:
            if not isinstance(I, Interval):
                raise TypeError("IntervalBox holds Interval instances")
        return super().__new__(cls, intervals)

    def __str__(self):
        return "[" + ", ".join(str(I) for I in self) + "]"

    def __contains__(self, x) -> bool:
        return len(x) == len(self) and all(xi in I for xi, I in zip(x, self))

    def to_json(self) -> list:
        return [I.to_json() for I in self]


def intervals_from_bounds(lower, upper, lower_closed=True, upper_closed=True) -> IntervalBox:
    """Box from endpoint lists; closedness flags may be single booleans."""
    n = len(lower)
    if len(upper) != n:
        raise ShapeError("lower and upper bound lists differ in length")
    if isinstance(lower_closed, bool):
        lower_closed = [lower_closed] * n
    if isinstance(upper_closed, bool):
        upper_closed = [upper_closed] * n
    if len(lower_closed) != n or len(upper_closed) != n:
        raise ShapeError("closedness flags differ in length from the bounds")
    return IntervalBox(Interval(l, u, lc, uc) for l, u, lc, uc in zip(lower, upper, lower_closed, upper_closed))


def sign_box(signs: Sequence[int]) -> IntervalBox:
    """``(0, oo)``, ``(-oo, 0)`` or ``[0, 0]`` per entry of a sign pattern."""
    table = {
        1: Interval(0, float("inf"), False, False),
        -1: Interval(float("-inf"), 0, False, False),
        0: Interval(0, 0, True, True),
    }
    return IntervalBox(table[s] for s in signs)


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    witness: tuple | None = None
    certificate: tuple | None = None
    certificate_source: tuple | None = None

    def __bool__(self):
        return self.feasible


def linear_form_positive_on_box(v: Sequence, box: IntervalBox, assumptions: AssumptionSet | None = None) -> bool:
    """Whether ``v . z > 0`` for every ``z`` in the box.

    The infimum takes the lower endpoint where ``v_i > 0`` and the upper one
    where ``v_i < 0``. It must be positive, or zero without being attained.
    """
    if len(v) != len(box):
        raise ShapeError("vector and box lengths differ")
    infimum: Scalar = Fraction(0)
    attained = True
    for vi, I in zip(v, box):
        s = scalar_sign(vi, assumptions)
        if s is None:
            raise UndecidableSignError(f"sign of {format_scalar(vi)} is undecidable", vi)
        if s == 0:
            continue
        if s > 0:
            if not I.lower_bounded:
                return False
            bound, closed = I.lower, I.lower_closed
        else:
            if not I.upper_bounded:
                return False
            bound, closed = I.upper, I.upper_closed
        attained = attained and closed
        if bound != 0:
            infimum = infimum + vi * bound
    s = scalar_sign(infimum, assumptions)
    if s is None:
        raise UndecidableSignError(f"sign of {format_scalar(infimum)} is undecidable", infimum)
    return s > 0 or (s == 0 and not attained)


def exists_vector(
    M: ExactMatrix,
    box: IntervalBox,
    want_witness: bool = False,
    assumptions: AssumptionSet | None = None,
) -> FeasibilityResult:
    """Decide whether the row space of ``M`` meets ``box``.

    Infeasibility is certified by an elementary vector ``v`` of ``ker M``
    (tested together with ``-v``) that is positive on the box. Symbolic
    matrices work as long as every sign the test needs is decidable.
    """
    if len(box) != M.n_cols:
        raise ShapeError(f"box has {len(box)} intervals for {M.n_cols} columns")
    evs = elementary_vectors(M, kernel=True)
    for v, source in zip(evs.vectors, evs.source_sets):
        for cand in (v, tuple(-x for x in v)):
            if linear_form_positive_on_box(cand, box, assumptions):
                return FeasibilityResult(False, certificate=cand, certificate_source=source)
    if want_witness:
        if not M.is_rational():
            raise ParametricError("witnesses need a rational matrix")
        oracle = feasibility_oracle(M, box)
        if not oracle.feasible:
            raise AssertionError("Fourier-Motzkin elimination disagrees with the elementary-vector test")
        return FeasibilityResult(True, witness=oracle.witness)
    return FeasibilityResult(True)


def exists_vector_in_kernel(K: ExactMatrix, box: IntervalBox, assumptions: AssumptionSet | None = None) -> bool:
    """Whether ``ker K`` meets ``box``; certificates live in the row space of ``K``."""
    if len(box) != K.n_cols:
        raise ShapeError("box length does not match column count")
    for v in elementary_vectors(K, kernel=False):
        if linear_form_positive_on_box(v, box, assumptions):
            return False
        if linear_form_positive_on_box(tuple(-x for x in v), box, assumptions):
            return False
    return True


# Fourier-Motzkin ----------------------------------------------------------
#
# An inequality is (coeffs, rhs, strict) with integer entries, meaning
# coeffs . lam >= rhs, or > when strict. Inputs are scaled to integers once;
# elimination then stays in Python ints.


def _integral_ineq(coeffs, rhs, strict) -> tuple:
    scale = reduce(lcm, (Fraction(x).denominator for x in (*coeffs, rhs)), 1)
    ints = [int(Fraction(x) * scale) for x in (*coeffs, rhs)]
    g = reduce(gcd, ints, 0) or 1
    return tuple(x // g for x in ints[:-1]), ints[-1] // g, strict


def _prune(ineqs: list) -> list:
    """Tightest inequality per direction; satisfied constant ones are dropped."""
    best: dict = {}
    violated = []
    for coeffs, rhs, strict in ineqs:
        g = reduce(gcd, coeffs, 0)
        if g == 0:
            if rhs > 0 or (strict and rhs == 0):
                violated.append(((), rhs, strict))
            continue
        key = tuple(c // g for c in coeffs)
        bound = Fraction(rhs, g)
        old = best.get(key)
        if old is None or bound > old[0] or (bound == old[0] and strict and not old[1]):
            best[key] = (bound, strict)
    out = violated[:1]
    for key, (bound, strict) in best.items():
        out.append((tuple(c * bound.denominator for c in key), bound.numerator, strict))
    return out


def _eliminate(ineqs: list, k: int) -> list:
    pos, neg, rest = [], [], []
    for ineq in ineqs:
        if not ineq[0]:
            rest.append(ineq)
            continue
        c = ineq[0][k]
        (pos if c > 0 else neg if c < 0 else rest).append(ineq)
    for pc, pr, ps in pos:
        a = pc[k]
        for nc, nr, ns in neg:
            b = -nc[k]
            coeffs = tuple(b * x + a * y for x, y in zip(pc, nc))
            rhs = b * pr + a * nr
            rest.append((coeffs, rhs, ps or ns))
    return _prune(rest)


def _choose(lower, lower_strict, upper, upper_strict) -> Fraction:
    if lower is not None and upper is not None:
        if lower == upper:
            return lower
        if not lower_strict:
            return lower
        if not upper_strict:
            return upper
        return (lower + upper) / 2
    if lower is not None:
        return lower if not lower_strict else lower + 1
    if upper is not None:
        return upper if not upper_strict else upper - 1
    return Fraction(0)


def _fm_solve(ineqs: list, n_vars: int) -> tuple | None:
    """A point satisfying all inequalities, or None."""
    stages = [_prune([_integral_ineq(c, r, s) for c, r, s in ineqs])]
    for k in range(n_vars - 1, -1, -1):
        stages.append(_eliminate(stages[-1], k))
    for stage in stages:
        for coeffs, rhs, strict in stage:
            if not coeffs and (rhs > 0 or (strict and rhs == 0)):
                return None
    # stages[n_vars - k] still involves variables 0..k
    point: list = []
    for k in range(n_vars):
        system = stages[n_vars - 1 - k]
        lower = upper = None
        lower_strict = upper_strict = False
        for coeffs, rhs, strict in system:
            if not coeffs or coeffs[k] == 0:
                continue
            c = coeffs[k]
            bound = Fraction(rhs - sum(coeffs[j] * point[j] for j in range(k))) / c
            if c > 0:
                if lower is None or bound > lower:
                    lower, lower_strict = bound, strict
                elif bound == lower:
                    lower_strict = lower_strict or strict
            else:
                if upper is None or bound < upper:
                    upper, upper_strict = bound, strict
                elif bound == upper:
                    upper_strict = upper_strict or strict
        value = _choose(lower, lower_strict, upper, upper_strict)
        point.append(value)
    return tuple(point)


def _affine_solutions(A: list, b: list, n: int):
    """Particular solution and kernel basis of ``A x = b``, or None if inconsistent."""
    rows = [list(r) + [rhs] for r, rhs in zip(A, b)]
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(row[n] != 0 for row in rows[r:]):
        return None
    x0 = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x0[c] = rows[i][n]
    basis = []
    for f in (c for c in range(n) if c not in pivots):
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -rows[i][f]
        basis.append(v)
    return x0, basis


def feasibility_oracle(M: ExactMatrix, box: IntervalBox) -> FeasibilityResult:
    """Decide ``M^T lam in box`` by exact elimination; a witness ``x`` when feasible."""
    if not M.is_rational():
        raise ParametricError("the elimination oracle needs a rational matrix")
    if len(box) != M.n_cols:
        raise ShapeError("box length does not match column count")
    d, n = M.shape
    # ints where possible: Fraction arithmetic dominates the cost otherwise
    cols = [tuple(int(x) if x.denominator == 1 else x for x in map(Fraction, M.column(j))) for j in range(n)]

    eq_rows, eq_rhs = [], []
    for col, I in zip(cols, box):
        if I.lower_bounded and I.upper_bounded and I.lower == I.upper:
            eq_rows.append(col)
            eq_rhs.append(I.lower)
    solved = _affine_solutions(eq_rows, eq_rhs, d)
    if solved is None:
        return FeasibilityResult(False)
    lam0, basis = solved
    basis = [tuple(int(x) for x in primitive_vector(b)) for b in basis]
    m = len(basis)

    # lam = lam0 + sum_k mu_k basis_k
    ineqs = []
    for col, I in zip(cols, box):
        if I.lower_bounded and I.upper_bounded and I.lower == I.upper:
            continue
        offset = sum(c * l for c, l in zip(col, lam0) if l and c)
        coeffs = tuple(sum(c * bk for c, bk in zip(col, b)) for b in basis)
        if I.lower_bounded:
            ineqs.append((coeffs, I.lower - offset, not I.lower_closed))
        if I.upper_bounded:
            ineqs.append((tuple(-c for c in coeffs), offset - I.upper, not I.upper_closed))
    if m == 0:
        ok = all(not (r > 0 or (s and r == 0)) for _, r, s in ineqs)
        mu: tuple | None = () if ok else None
    else:
        mu = _fm_solve(ineqs, m)
    if mu is None:
        return FeasibilityResult(False)
    lam = [l + sum(mk * b[i] for mk, b in zip(mu, basis)) for i, l in enumerate(lam0)]
    x = tuple(sum(c * l for c, l in zip(col, lam)) for col in cols)
    if x not in box:
        raise AssertionError("elimination produced a point outside the box")
    return FeasibilityResult(True, witness=x)


def in_row_space(M: ExactMatrix, x: Sequence) -> bool:
    """Exact membership test ``x in row(M)``."""
    if not M.n_rows:
        return all(is_zero(Fraction(v)) for v in x)
    return _affine_solutions([tuple(Fraction(c) for c in M.column(j)) for j in range(M.n_cols)],
                             [Fraction(v) for v in x], M.n_rows) is not None
