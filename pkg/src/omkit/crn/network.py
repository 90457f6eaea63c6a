"""Generalized mass-action networks and their structural matrices."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import networkx as nx

from ..errors import NetworkError, ParametricError
from ..matrix import ExactMatrix, certified_rank
from ..scalars import AssumptionSet, Polynomial, format_scalar, scalar_sign


@dataclass(frozen=True)
class Network:
    """Labeled digraph with stoichiometric and kinetic-order complexes.

    ``Y`` and ``Ytilde`` hold one column per vertex (in ``vertices`` order).
    Only the ``Ytilde`` columns of source vertices influence reaction rates;
    the others are conventionally equal to ``Y``'s.
    """

    vertices: tuple
    edges: tuple
    Y: ExactMatrix
    Ytilde: ExactMatrix
    species: tuple = ()
    variables: tuple = field(default=())

    def __post_init__(self):
        vertices = tuple(self.vertices)
        edges = tuple(tuple(e) for e in self.edges)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)
        if len(set(vertices)) != len(vertices):
            raise NetworkError("duplicate vertex ids")
        known = set(vertices)
        seen = set()
        for e in edges:
            if len(e) != 2 or e[0] not in known or e[1] not in known:
                raise NetworkError(f"edge {e} references an unknown vertex")
            if e[0] == e[1]:
                raise NetworkError(f"self-loop at vertex {e[0]}")
            if e in seen:
                raise NetworkError(f"duplicate edge {e}")
            seen.add(e)
        if self.Y.n_cols != len(vertices) or self.Ytilde.shape != self.Y.shape:
            raise NetworkError("complex matrices need one column per vertex and equal shapes")
        if not self.Y.is_rational():
            raise NetworkError("stoichiometric complexes must be rational")
        if self.species and len(self.species) != self.Y.n_rows:
            raise NetworkError("species names do not match the number of rows of Y")

    @classmethod
    def from_complexes(cls, vertices, edges, y: dict, ytilde: dict | None = None, species=(), variables=()):
        """Build from per-vertex complexes; missing kinetic-order complexes default to ``y``."""
        ytilde = dict(ytilde or {})
        vertices = tuple(vertices)
        sources = {e[0] for e in edges}
        missing = [v for v in sources if v not in ytilde and v not in y]
        if missing:
            raise NetworkError(f"no complex for source vertices {missing}")
        for v in vertices:
            if v not in y:
                raise NetworkError(f"no stoichiometric complex for vertex {v}")
        n = len(y[vertices[0]]) if vertices else len(species)
        Y = ExactMatrix.from_columns([y[v] for v in vertices], n)
        Yt = ExactMatrix.from_columns([ytilde.get(v, y[v]) for v in vertices], n)
        return cls(vertices, tuple(tuple(e) for e in edges), Y, Yt, tuple(species), tuple(variables))

    @property
    def n_species(self) -> int:
        return self.Y.n_rows

    @property
    def source_vertices(self) -> tuple:
        sources = {e[0] for e in self.edges}
        return tuple(v for v in self.vertices if v in sources)

    def index(self, vertex) -> int:
        return self.vertices.index(vertex)

    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def substitute(self, values) -> "Network":
        return Network(self.vertices, self.edges, self.Y, self.Ytilde.substitute(values), self.species,
                       tuple(v for v in self.variables if v not in values))


def incidence_matrix(net: Network) -> ExactMatrix:
    """``|V| x |E|`` matrix whose column for ``i -> j`` is ``e_j - e_i``."""
    cols = []
    for i, j in net.edges:
        col = [0] * len(net.vertices)
        col[net.index(i)] = -1
        col[net.index(j)] = 1
        cols.append(col)
    return ExactMatrix.from_columns(cols, len(net.vertices))


def source_matrix(net: Network) -> ExactMatrix:
    cols = []
    for i, _ in net.edges:
        col = [0] * len(net.vertices)
        col[net.index(i)] = 1
        cols.append(col)
    return ExactMatrix.from_columns(cols, len(net.vertices))


def _check_rates(net: Network, k: Sequence, assumptions: AssumptionSet | None) -> tuple:
    if len(k) != len(net.edges):
        raise NetworkError(f"expected {len(net.edges)} rate constants, got {len(k)}")
    rates = []
    for e, rate in zip(net.edges, k):
        rate = rate if isinstance(rate, Polynomial) else Fraction(rate)
        if scalar_sign(rate, assumptions) != 1:
            raise NetworkError(f"rate constant {format_scalar(rate)} of edge {e} is not known to be positive")
        rates.append(rate)
    return tuple(rates)


def laplacian(net: Network, k: Sequence, assumptions: AssumptionSet | None = None) -> ExactMatrix:
    """``I_E diag(k) I_{E,s}^T``; every column sums to zero."""
    rates = _check_rates(net, k, assumptions)
    n = len(net.vertices)
    A: list = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), rate in zip(net.edges, rates):
        si, tj = net.index(i), net.index(j)
        A[si][si] = A[si][si] - rate
        A[tj][si] = A[tj][si] + rate
    return ExactMatrix.from_rows(A, n)


def monomials(net: Network, x: Sequence) -> tuple:
    """``x^{ytilde(i)}`` for every vertex."""
    xs = [Fraction(v) for v in x]
    if len(xs) != net.n_species:
        raise NetworkError("concentration vector has the wrong length")
    if any(v <= 0 for v in xs):
        raise NetworkError("concentrations must be positive")
    out = []
    for col in net.Ytilde.columns():
        value = Fraction(1)
        for xj, e in zip(xs, col):
            if isinstance(e, Polynomial) or Fraction(e).denominator != 1:
                raise NetworkError(f"kinetic order {format_scalar(e)} is not an integer")
            value *= xj ** int(e)
        out.append(value)
    return tuple(out)


def ode_rhs(net: Network, k: Sequence, x: Sequence, assumptions: AssumptionSet | None = None) -> tuple:
    """Right-hand side ``Y A_k x^Ytilde`` of the mass-action ODE."""
    A = laplacian(net, k, assumptions)
    return net.Y.apply(A.apply(monomials(net, x)))


def stoichiometric_generators(net: Network) -> ExactMatrix:
    return net.Y @ incidence_matrix(net)


def kinetic_order_generators(net: Network) -> ExactMatrix:
    return net.Ytilde @ incidence_matrix(net)


def n_linkage_classes(net: Network) -> int:
    return nx.number_weakly_connected_components(net.graph())


def is_weakly_reversible(net: Network) -> bool:
    """Every weakly connected component is strongly connected."""
    g = net.graph()
    return nx.number_strongly_connected_components(g) == nx.number_weakly_connected_components(g)


def _intersection_dimension(Y: ExactMatrix, IE: ExactMatrix, assumptions) -> int:
    """``dim(ker Y  cap  im I_E)`` from a basis ``B`` of ``im I_E``."""
    B = IE.transpose().row_basis().transpose() if IE.n_cols else IE
    if B.n_cols == 0:
        return 0
    return B.n_cols - certified_rank(Y @ B, assumptions)


@dataclass(frozen=True)
class Deficiencies:
    stoichiometric: int
    kinetic: int


def deficiency(net: Network, assumptions: AssumptionSet | None = None) -> Deficiencies:
    """Stoichiometric and kinetic-order deficiency; both formulas must agree."""
    IE = incidence_matrix(net)
    ell = n_linkage_classes(net)
    n_v = len(net.vertices)
    out = []
    for Ymat in (net.Y, net.Ytilde):
        generators = Ymat @ IE
        try:
            dim_s = certified_rank(generators, assumptions) if generators.n_cols else 0
            via_kernel = _intersection_dimension(Ymat, IE, assumptions)
        except ParametricError as exc:
            raise ParametricError(f"deficiency undecidable: {exc}") from None
        via_count = n_v - ell - dim_s
        if via_count != via_kernel:
            raise AssertionError(f"deficiency formulas disagree: {via_count} != {via_kernel}")
        out.append(via_count)
    return Deficiencies(*out)
