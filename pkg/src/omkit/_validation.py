"""Input coercion shared by the estimator layer."""

from __future__ import annotations

from fractions import Fraction
from numbers import Integral

from .errors import ShapeError
from .feasibility import Interval, IntervalBox
from .matrix import ExactMatrix
from .scalars import Polynomial, parse_scalar
from .sign_vectors import SignVector


def _exact_entry(x, variables):
    if isinstance(x, (Fraction, Polynomial)):
        return x
    if isinstance(x, bool):
        raise TypeError(f"boolean entry {x!r}")
    if isinstance(x, Integral):
        return Fraction(int(x))
    if isinstance(x, float) or hasattr(x, "dtype"):
        f = float(x)
        if not f.is_integer():
            raise TypeError(f"non-integral float {x!r}; pass a Fraction or a string like '1/3'")
        return Fraction(int(f))
    if isinstance(x, str):
        return parse_scalar(x, variables)
    raise TypeError(f"cannot use {x!r} as an exact scalar")


def check_exact_matrix(X, variables=None) -> ExactMatrix:
    """Coerce nested sequences (or a numpy integer array) to an ExactMatrix.

    Floats are accepted only when integral. Strings use the scalar grammar;
    ``variables=None`` lets any identifier through.
    """
    if isinstance(X, ExactMatrix):
        return X
    rows = [list(r) for r in X]
    if not rows:
        raise ShapeError("empty matrix; use ExactMatrix.zeros(0, n) for a 0 x n matrix")
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise ShapeError(f"ragged rows of lengths {sorted(widths)}")
    return ExactMatrix.from_rows([[_exact_entry(x, variables) for x in r] for r in rows], widths.pop())


def check_box(box, n: int | None = None) -> IntervalBox:
    """Accept an IntervalBox, Interval objects, or closed ``(lower, upper)`` pairs."""
    if not isinstance(box, IntervalBox):
        box = IntervalBox(iv if isinstance(iv, Interval) else Interval(*iv) for iv in box)
    if n is not None and len(box) != n:
        raise ShapeError(f"box has {len(box)} intervals, expected {n}")
    return box


def check_sign_vector(s, n: int | None = None) -> SignVector:
    if isinstance(s, str):
        s = SignVector.parse(s)
    elif not isinstance(s, SignVector):
        s = SignVector.from_signs([(v > 0) - (v < 0) for v in s])
    if n is not None and s.length != n:
        raise ShapeError(f"sign vector of length {s.length}, expected {n}")
    return s
