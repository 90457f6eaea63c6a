"""Dense matrices over exact scalars.

Column index sets are 1-based at the public surface (``(1, 3)`` selects the
first and third columns). Rank and kernels are only defined for rational
matrices; symbolic matrices support determinants and minors.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import ParametricError, ShapeError
from .scalars import Polynomial, Scalar, as_scalar, format_scalar, is_rational, is_zero, scalar_sign, substitute


class ExactMatrix:
    """Immutable ``n_rows x n_cols`` matrix of scalars stored row-major."""

    __slots__ = ("n_rows", "n_cols", "entries", "_minors", "_rank")

    def __init__(self, n_rows: int, n_cols: int, entries: Iterable):
        entries = tuple(as_scalar(x) for x in entries)
        if n_rows < 0 or n_cols < 0 or len(entries) != n_rows * n_cols:
            raise ShapeError(f"expected {n_rows}x{n_cols} entries, got {len(entries)}")
        self.n_rows = n_rows
        self.n_cols = n_cols
        self.entries = entries
        self._minors: dict = {}
        self._rank = None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], n_cols: int | None = None) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        if n_cols is None:
            n_cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != n_cols:
                raise ShapeError("rows have unequal lengths")
        return cls(len(rows), n_cols, (x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], n_rows: int) -> "ExactMatrix":
        return cls.from_rows([[c[i] for c in columns] for i in range(n_rows)], len(columns))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "ExactMatrix":
        return cls(n_rows, n_cols, [0] * (n_rows * n_cols))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    @property
    def shape(self) -> tuple:
        return (self.n_rows, self.n_cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.n_cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.n_cols:(i + 1) * self.n_cols]

    def rows(self) -> list:
        return [self.row(i) for i in range(self.n_rows)]

    def column(self, j: int) -> tuple:
        return self.entries[j::self.n_cols] if self.n_cols else ()

    def columns(self) -> list:
        return [self.column(j) for j in range(self.n_cols)]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.shape, self.entries))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(format_scalar(x) for x in r) + "]" for r in self.rows())
        return f"ExactMatrix([{body}])"

    def is_rational(self) -> bool:
        return all(is_rational(x) for x in self.entries)

    @property
    def variables(self) -> tuple:
        names = set()
        for x in self.entries:
            if isinstance(x, Polynomial):
                names.update(x.variables)
        return tuple(sorted(names))

    def _require_rational(self, what: str):
        if not self.is_rational():
            raise ParametricError(
                f"{what} needs a rational matrix; symbolic entries in {list(self.variables)} "
                "must be specialized first"
            )

    # structural operations ------------------------------------------------

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix.from_rows(self.columns(), self.n_rows)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.n_cols != other.n_rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        rows = []
        for r in self.rows():
            rows.append([_dot(r, c) for c in cols])
        return ExactMatrix.from_rows(rows, other.n_cols)

    def apply(self, v: Sequence) -> tuple:
        """Matrix-vector product ``M v``."""
        if len(v) != self.n_cols:
            raise ShapeError("vector length does not match column count")
        return tuple(_dot(r, v) for r in self.rows())

    def stack(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.n_rows and other.n_rows and self.n_cols != other.n_cols:
            raise ShapeError("column counts differ")
        n_cols = self.n_cols if self.n_rows else other.n_cols
        return ExactMatrix.from_rows(self.rows() + other.rows(), n_cols)

    def select_rows(self, indices: Sequence[int]) -> "ExactMatrix":
        """Rows at the given 0-based positions."""
        return ExactMatrix.from_rows([self.row(i) for i in indices], self.n_cols)

    def submatrix_by_columns(self, index_set: Sequence[int]) -> "ExactMatrix":
        """Columns at the given 1-based indices, in the given order."""
        for k in index_set:
            if not 1 <= k <= self.n_cols:
                raise IndexError(f"column index {k} out of range 1..{self.n_cols}")
        return ExactMatrix.from_rows(
            [[r[k - 1] for k in index_set] for r in self.rows()], len(index_set)
        )

    def substitute(self, values) -> "ExactMatrix":
        return ExactMatrix(self.n_rows, self.n_cols, (substitute(x, values) for x in self.entries))

    # determinants ---------------------------------------------------------

    def determinant(self) -> Scalar:
        if self.n_rows != self.n_cols:
            raise ShapeError(f"determinant of non-square {self.shape} matrix")
        if self.is_rational():
            return _bareiss_det([list(r) for r in self.rows()])
        return _laplace_det(self.rows(), tuple(range(self.n_cols)))

    def minor(self, index_set: Sequence[int]) -> Scalar:
        """Maximal minor on the given increasing 1-based column indices (cached)."""
        key = tuple(index_set)
        try:
            return self._minors[key]
        except KeyError:
            pass
        value = self.submatrix_by_columns(key).determinant()
        self._minors[key] = value
        return value

    def maximal_minors(self) -> list:
        """All ``n_rows x n_rows`` minors, index sets in lexicographic order."""
        if self.n_rows > self.n_cols:
            raise ShapeError("maximal minors need n_rows <= n_cols")
        return [self.minor(I) for I in combinations(range(1, self.n_cols + 1), self.n_rows)]

    # rank and kernel ------------------------------------------------------

    def rref(self) -> tuple:
        """Reduced row echelon form over Q and the 0-based pivot columns."""
        self._require_rational("row reduction")
        return _rref([list(r) for r in self.rows()], self.n_cols)

    def rank(self) -> int:
        if self._rank is None:
            self._rank = len(self.rref()[1])
        return self._rank

    def row_basis(self) -> "ExactMatrix":
        """Linearly independent subset of the rows spanning the row space."""
        self._require_rational("row basis")
        chosen: list = []
        rank = 0
        for i in range(self.n_rows):
            trial = chosen + [i]
            if len(_rref([list(self.row(k)) for k in trial], self.n_cols)[1]) > rank:
                chosen = trial
                rank += 1
        return self.select_rows(chosen)

    def kernel_matrix(self) -> "ExactMatrix":
        """Basis of the right kernel as rows: primitive integer, first nonzero positive."""
        self._require_rational("kernel computation")
        reduced, pivots = self.rref()
        free = [j for j in range(self.n_cols) if j not in pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.n_cols
            v[f] = Fraction(1)
            for row_idx, p in enumerate(pivots):
                v[p] = -reduced[row_idx][f]
            basis.append(primitive_vector(v, positive_lead=True))
        return ExactMatrix.from_rows(basis, self.n_cols)


def _dot(a: Sequence, b: Sequence) -> Scalar:
    total: Scalar = Fraction(0)
    for x, y in zip(a, b):
        if x != 0 and y != 0:
            total = total + x * y
    return total


def _rref(rows: list, n_cols: int) -> tuple:
    rows = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _bareiss_det(a: list) -> Fraction:
    """Fraction-free elimination on the row-scaled integer matrix."""
    n = len(a)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    m = []
    for row in a:
        den = reduce(lcm, (Fraction(x).denominator for x in row), 1)
        scale /= den
        m.append([int(Fraction(x) * den) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1] * scale


def _laplace_det(rows: list, cols: tuple) -> Scalar:
    """Cofactor expansion along the first row, memoized on column subsets."""
    memo: dict = {}

    def det(depth: int, cols: tuple) -> Scalar:
        if not cols:
            return Fraction(1)
        if cols in memo:
            return memo[cols]
        total: Scalar = Fraction(0)
        row = rows[depth]
        for pos, c in enumerate(cols):
            x = row[c]
            if x == 0:
                continue
            sub = det(depth + 1, cols[:pos] + cols[pos + 1:])
            if sub == 0:
                continue
            term = x * sub
            total = total + term if pos % 2 == 0 else total - term
        memo[cols] = total
        return total

    return det(0, cols)


def laplace_determinant(M: ExactMatrix) -> Scalar:
    """Determinant by cofactor expansion regardless of entry type."""
    if M.n_rows != M.n_cols:
        raise ShapeError("determinant of non-square matrix")
    return _laplace_det(M.rows(), tuple(range(M.n_cols)))


def primitive_vector(v: Sequence, positive_lead: bool = False) -> tuple:
    """Scale a rational vector to coprime integers (sign kept unless ``positive_lead``)."""
    v = [Fraction(x) for x in v]
    den = reduce(lcm, (x.denominator for x in v), 1)
    ints = [int(x * den) for x in v]
    g = reduce(gcd, ints, 0)
    if g == 0:
        return tuple(Fraction(0) for _ in v)
    ints = [x // g for x in ints]
    if positive_lead:
        lead = next(x for x in ints if x != 0)
        if lead < 0:
            ints = [-x for x in ints]
    return tuple(Fraction(x) for x in ints)


# symbolic rank and kernels ------------------------------------------------


def certified_rank(M: ExactMatrix, assumptions=None) -> int:
    """Rank valid for every parameter value allowed by ``assumptions``.

    A lower bound comes from a minor whose sign is decided nonzero; an upper
    bound from all larger minors vanishing identically. Raises
    :class:`ParametricError` when the two do not meet.
    """
    if M.is_rational():
        return M.rank()
    rows = M.rows()
    lower, upper = 0, None
    for r in range(min(M.shape), 0, -1):
        for R in combinations(range(M.n_rows), r):
            sub = [rows[i] for i in R]
            for P in combinations(range(M.n_cols), r):
                det = _laplace_det(sub, P)
                if det == 0:
                    continue
                if upper is None:
                    upper = r
                if scalar_sign(det, assumptions) in (1, -1):
                    lower = r
                    break
            if lower:
                break
        if lower:
            break
    upper = upper or 0
    if lower != upper:
        raise ParametricError(
            f"rank of the symbolic matrix is between {lower} and {upper} depending on "
            f"{list(M.variables)}; specialize the parameters"
        )
    return lower


def polynomial_kernel_matrix(M: ExactMatrix, assumptions=None) -> ExactMatrix:
    """Kernel basis with polynomial entries for a symbolic matrix.

    Picks independent rows ``R`` and pivot columns ``P`` whose minor is
    provably nonzero (constant minors and right-most pivots preferred); each
    free column ``f`` yields the vector with ``x_f = det B`` and the pivot
    entries from Cramer's rule.
    """
    if M.is_rational():
        return M.kernel_matrix()
    r = certified_rank(M, assumptions)
    rows = M.rows()
    n = M.n_cols
    best = None
    for R in combinations(range(M.n_rows), r):
        sub = [rows[i] for i in R]
        for P in sorted(combinations(range(n), r), reverse=True):
            det = _laplace_det(sub, P)
            s = scalar_sign(det, assumptions)
            if s not in (1, -1):
                continue
            if is_rational(det):
                best = (R, P, det)
                break
            if best is None:
                best = (R, P, det)
        if best is not None and is_rational(best[2]):
            break
    if best is None:
        raise ParametricError("no provably nonsingular pivot block for the symbolic kernel")
    R, P, det = best
    sub = [rows[i] for i in R]
    basis = []
    for f in (j for j in range(n) if j not in P):
        v: list = [Fraction(0)] * n
        v[f] = det
        for k, p in enumerate(P):
            # B x_P = -det * M_{R,f}, solved by Cramer's rule
            replaced = [list(row) for row in sub]
            for i, row in enumerate(replaced):
                row[p] = -sub[i][f]
            v[p] = _laplace_det(replaced, P)
        basis.append(normalize_vector(v))
    return ExactMatrix.from_rows(basis, n)


def normalize_vector(v: Sequence) -> tuple:
    """Divide by the positive content of all coefficients; signs are kept."""
    coeffs = []
    for x in v:
        if isinstance(x, Polynomial):
            coeffs.extend(x.coefficients())
        elif x != 0:
            coeffs.append(Fraction(x))
    if not coeffs:
        return tuple(v)
    num = reduce(gcd, (c.numerator for c in coeffs), 0)
    den = reduce(lcm, (c.denominator for c in coeffs), 1)
    content = Fraction(num, den)
    return tuple(x / content if not is_zero(x) else Fraction(0) for x in v)
