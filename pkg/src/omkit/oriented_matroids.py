"""Cocircuits, covectors and chirotopes of the oriented matroid of a subspace."""

from __future__ import annotations

from typing import Iterable

from .elementary import elementary_vectors
from .errors import UndecidableSignError
from .matrix import ExactMatrix
from .scalars import AssumptionSet, format_scalar, scalar_sign
from .sign_vectors import SignVector, compose, is_nonnegative, sign_vector_of


def cocircuits_from_elementary_vectors(vectors: Iterable, assumptions: AssumptionSet | None = None) -> frozenset:
    out = set()
    for v in vectors:
        s = sign_vector_of(v, assumptions)
        out.add(s)
        out.add(-s)
    return frozenset(out)


def cocircuits_from_matrix(
    M: ExactMatrix, kernel: bool = True, assumptions: AssumptionSet | None = None
) -> frozenset:
    """Sign vectors of the elementary vectors of ``ker M`` (or of the row space)."""
    return cocircuits_from_elementary_vectors(elementary_vectors(M, kernel=kernel), assumptions)


def covectors_from_cocircuits(cocircuits: Iterable[SignVector], length: int) -> frozenset:
    """Closure of the cocircuits and zero under composition."""
    cocircuits = list(cocircuits)
    result = {SignVector.zero(length)} | set(cocircuits)
    frontier = list(cocircuits)
    while frontier:
        new = []
        for x in frontier:
            for c in cocircuits:
                y = compose(x, c)
                if y not in result:
                    result.add(y)
                    new.append(y)
        frontier = new
    return frozenset(result)


def covectors_from_matrix(
    M: ExactMatrix, kernel: bool = True, assumptions: AssumptionSet | None = None
) -> frozenset:
    return covectors_from_cocircuits(cocircuits_from_matrix(M, kernel, assumptions), M.n_cols)


def chirotope(M: ExactMatrix, assumptions: AssumptionSet | None = None) -> tuple:
    """Signs of the maximal minors in lexicographic index-set order."""
    signs = []
    for minor in M.maximal_minors():
        s = scalar_sign(minor, assumptions)
        if s is None:
            raise UndecidableSignError(
                f"sign of maximal minor {format_scalar(minor)} is undecidable; "
                "specialize the parameters or add positivity assumptions",
                minor,
            )
        signs.append(s)
    return tuple(signs)


def nonnegative_cocircuits(
    M: ExactMatrix, kernel: bool = True, assumptions: AssumptionSet | None = None
) -> frozenset:
    return frozenset(s for s in cocircuits_from_matrix(M, kernel, assumptions) if is_nonnegative(s))
