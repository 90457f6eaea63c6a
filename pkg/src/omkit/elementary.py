"""Elementary (support-minimal) vectors of a subspace from maximal minors.

For a ``d x n`` matrix of rank ``d`` and a column set ``I`` of size ``d + 1``,
the vector with ``v_i = (-1)^{#{k in I : k < i}} det M_{I - {i}}`` on ``I`` and
zero elsewhere lies in the kernel; it is elementary unless it vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import ParametricError, ShapeError
from .matrix import ExactMatrix, normalize_vector
from .scalars import is_zero


@dataclass(frozen=True)
class ElementaryVectorList:
    vectors: tuple
    source_sets: tuple

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, i):
        return self.vectors[i]


def support(v: Sequence) -> frozenset:
    """0-based positions of the nonzero entries."""
    return frozenset(i for i, x in enumerate(v) if not is_zero(x))


def _full_row_rank(M: ExactMatrix) -> ExactMatrix:
    if not M.is_rational():
        # the caller vouches for generic full row rank
        return M
    if M.rank() < M.n_rows:
        return M.row_basis()
    return M


def elementary_vector_for_index_set(M: ExactMatrix, index_set: Sequence[int]) -> tuple:
    """The kernel vector attached to a 1-based column set of size ``n_rows + 1``."""
    I = tuple(index_set)
    d = M.n_rows
    if len(I) != d + 1:
        raise ShapeError(f"index set must have {d + 1} elements, got {len(I)}")
    if list(I) != sorted(set(I)):
        raise ValueError("index set must be strictly increasing")
    if M.is_rational() and M.rank() < d:
        raise ShapeError(f"matrix has rank {M.rank()} < {d} rows")
    v: list = [Fraction(0)] * M.n_cols
    for pos, i in enumerate(I):
        minor = M.minor(I[:pos] + I[pos + 1:])
        v[i - 1] = minor if pos % 2 == 0 else -minor
    return tuple(v)


def elementary_vectors(M: ExactMatrix, kernel: bool = True, dedup: bool = True) -> ElementaryVectorList:
    """Elementary vectors of ``ker M`` (or of the row space when ``kernel=False``).

    One candidate is formed per column set of size ``d + 1`` in lexicographic
    order; zero candidates are skipped and, with ``dedup``, so is any
    candidate whose support was already produced.
    """
    if not kernel:
        if not M.is_rational():
            raise ParametricError("row-space elementary vectors need a rational matrix")
        return elementary_vectors(M.kernel_matrix(), kernel=True, dedup=dedup)
    M = _full_row_rank(M)
    d, n = M.shape
    vectors = []
    sources = []
    seen = set()
    for I in combinations(range(1, n + 1), d + 1):
        v = elementary_vector_for_index_set(M, I)
        supp = support(v)
        if not supp:
            continue
        if dedup:
            if supp in seen:
                continue
            seen.add(supp)
        vectors.append(normalize_vector(v))
        sources.append(I)
    return ElementaryVectorList(tuple(vectors), tuple(sources))

