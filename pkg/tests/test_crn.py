import itertools
import random
from fractions import Fraction

import pytest

from oracles import gauss_rank, random_full_rank
from omkit.crn import (
    Network,
    SubspacePair,
    check_robust_existence,
    check_unique_existence,
    condition_closure_minors,
    condition_closure_sign_vectors,
    condition_faces,
    condition_nondegenerate,
    condition_uniqueness_minors,
    condition_uniqueness_sign_vectors,
    deficiency,
    find_degeneracy,
    incidence_matrix,
    is_weakly_reversible,
    laplacian,
    ode_rhs,
    stoichiometric_generators,
)
from omkit.errors import NetworkError, ParametricError, ShapeError
from omkit.feasibility import feasibility_oracle, sign_box
from omkit.matrix import ExactMatrix
from omkit.oriented_matroids import covectors_from_matrix, nonnegative_cocircuits
from omkit.scalars import AssumptionSet, parse_scalar

ABC = ("a", "b", "c")


def sym(rows, variables=ABC):
    return ExactMatrix.from_rows([[parse_scalar(str(x), variables) for x in r] for r in rows])


W_RUN = ExactMatrix.from_rows([[1, 0, 1, 1, 1], [0, 1, 1, 1, 0]])
WT_RUN = sym([[1, 0, "a", "a - c", 1], [0, 1, "b", "b", 0]])
W_EX = ExactMatrix.from_rows([[0, 0, 1, 1, -1, 0], [1, -1, 0, 0, 0, -1], [0, 0, 1, -1, 0, 0]])


def wt_ex(a):
    return ExactMatrix.from_rows([[1, 1, 0, 0, -1, Fraction(a)], [1, -1, 0, 0, 0, 0], [0, 0, 1, -1, 0, 0]])


def running_network(ytilde=None):
    y = {1: [1, 1, 0, 0, 0], 2: [0, 0, 1, 0, 0], 3: [0, 0, 0, 1, 0], 4: [1, 0, 0, 0, 0], 5: [0, 0, 0, 0, 1]}
    if ytilde is None:
        a, b, c = (parse_scalar(v, ABC) for v in ABC)
        ytilde = {1: [a, b, 0, 0, 0], 3: [c, 0, 0, 1, 0]}
    edges = [(1, 2), (2, 1), (2, 3), (3, 2), (4, 5), (5, 4)]
    return Network.from_complexes(range(1, 6), edges, y, ytilde, "ABCDE", ABC)


# running example ----------------------------------------------------------


def test_running_example_structure():
    net = running_network()
    d = deficiency(net)
    assert (d.stoichiometric, d.kinetic) == (0, 0)
    assert is_weakly_reversible(net)
    pair = SubspacePair.from_network(net, AssumptionSet(ABC))
    # same row space as the reference W
    assert gauss_rank(pair.W.rows()) == gauss_rank(pair.W.rows() + W_RUN.rows()) == 2
    assert pair.Wt.rows() == WT_RUN.rows()


def test_running_example_regions():
    pair = SubspacePair(W_RUN, WT_RUN)
    assert str(condition_closure_minors(pair)) == "[{a > 0, a - c > 0, b > 0}]"
    assert str(condition_uniqueness_minors(pair)) == "[{a >= 0, a - c >= 0, b >= 0}]"
    assert str(condition_closure_minors(pair, AssumptionSet(ABC))) == "[{a - c > 0}]"


def test_running_example_reports():
    report = check_robust_existence(running_network(), AssumptionSet(ABC))
    assert report.holds is None
    assert report.summary() == "robust unique existence: holds iff [{a - c > 0}]"
    specialized = running_network().substitute({"a": 2, "b": 1, "c": 1})
    assert check_robust_existence(specialized).holds is True
    assert check_unique_existence(specialized).holds is True
    assert check_robust_existence(running_network().substitute({"a": 1, "b": 1, "c": 1})).holds is False


def test_specialized_sign_vector_tests():
    pair = SubspacePair(W_RUN, WT_RUN).substitute({"a": 2, "b": 1, "c": 1})
    assert condition_closure_sign_vectors(pair)
    assert condition_uniqueness_sign_vectors(pair)


def test_rational_only_conditions_refuse_parameters():
    pair = SubspacePair(W_RUN, WT_RUN)
    with pytest.raises(ParametricError):
        condition_faces(pair)
    with pytest.raises(ParametricError):
        condition_nondegenerate(pair)


# example with a nondegeneracy region --------------------------------------


@pytest.mark.parametrize("a", ["1/2", "2"])
def test_example_uniqueness_and_faces(a):
    pair = SubspacePair(W_EX, wt_ex(Fraction(a)))
    assert condition_uniqueness_sign_vectors(pair)
    assert condition_faces(pair)


@pytest.mark.parametrize(
    "a, expected",
    [("1/4", True), ("1/2", True), ("3/4", True), ("3/2", True), ("7/4", True),
     ("1", False), ("2", False), ("5/2", False), ("3", False), ("10", False)],
)
def test_example_nondegeneracy_region(a, expected):
    assert condition_nondegenerate(SubspacePair(W_EX, wt_ex(Fraction(a)))) is expected


def test_parametric_uniqueness_under_assumption():
    Wt = sym([[1, 1, 0, 0, -1, "a"], [1, -1, 0, 0, 0, 0], [0, 0, 1, -1, 0, 0]], ("a",))
    assert condition_uniqueness_sign_vectors(SubspacePair(W_EX, Wt), AssumptionSet(["a"]))


# degeneracy against the definition ----------------------------------------


def degenerate_by_definition(W: ExactMatrix, Wt: ExactMatrix) -> bool:
    n = W.n_cols
    pis = [frozenset(p.support()) for p in nonnegative_cocircuits(W, kernel=True)]
    blocking = [frozenset(t.support()) for t in nonnegative_cocircuits(W, kernel=False)]
    K = Wt.kernel_matrix()
    for size in range(1, len(pis) + 1):
        for family in itertools.combinations(pis, size):
            union = frozenset().union(*family)
            rows = list(K.rows())
            for supp in family:
                s = sorted(supp)
                for i, j in zip(s, s[1:]):
                    row = [0] * n
                    row[i], row[j] = 1, -1
                    rows.append(row)
            basis = ExactMatrix.from_rows(rows, n).kernel_matrix()
            rest = [i for i in range(n) if i not in union]
            for tail in itertools.product((0, -1), repeat=len(rest)):
                signs = [1 if i in union else 0 for i in range(n)]
                for i, s in zip(rest, tail):
                    signs[i] = s
                supp_z = frozenset(i for i in range(n) if signs[i])
                if any(t <= supp_z for t in blocking):
                    continue
                if basis.n_rows and feasibility_oracle(basis, sign_box(signs)).feasible:
                    return True
    return False


@pytest.mark.parametrize("a", ["1/2", "1", "3/2", "2", "3"])
def test_algorithm_matches_definition_on_example(a):
    Wt = wt_ex(Fraction(a))
    assert condition_nondegenerate(SubspacePair(W_EX, Wt)) is not degenerate_by_definition(W_EX, Wt)


def test_algorithm_matches_definition_on_random_pairs():
    rng = random.Random(41)
    checked = 0
    while checked < 40:
        n = rng.randint(3, 5)
        d = rng.randint(1, n - 1)
        W = random_full_rank(rng, d, n, -1, 2)
        Wt = random_full_rank(rng, d, n, -1, 2)
        pair = SubspacePair(W, Wt)
        assert condition_nondegenerate(pair) is not degenerate_by_definition(W, Wt), (W, Wt)
        checked += 1


def test_degeneracy_certificate_is_valid():
    pair = SubspacePair(W_EX, wt_ex(2))
    sigma, groups = find_degeneracy(pair)
    assert sigma in covectors_from_matrix(pair.Wt, kernel=False)
    positive = {i for i in range(6) if sigma[i] > 0}
    assert positive == set().union(*groups)


def test_nondegeneracy_depends_only_on_the_subspaces():
    rng = random.Random(42)
    for a in ("1/2", "1", "2"):
        W, Wt = W_EX, wt_ex(Fraction(a))
        for _ in range(3):
            perm = rng.sample(range(3), 3)
            scale = [Fraction(rng.choice((1, 2, 3)), rng.choice((1, 2))) * rng.choice((1, -1)) for _ in range(3)]
            W2 = ExactMatrix.from_rows([[scale[k] * x for x in W.row(p)] for k, p in enumerate(perm)])
            Wt2 = ExactMatrix.from_rows([list(Wt.row(p)) for p in reversed(perm)])
            assert condition_nondegenerate(SubspacePair(W2, Wt2)) == condition_nondegenerate(SubspacePair(W, Wt))


# minors versus sign vectors -----------------------------------------------


def _sign_pair(rng):
    n = rng.randint(2, 5)
    d = rng.randint(1, n - 1)
    W = random_full_rank(rng, d, n, -2, 2)
    if rng.random() < 0.4:
        # a positive column scaling keeps every minor sign
        Wt = ExactMatrix.from_columns([[x * rng.randint(1, 3) for x in col] for col in W.columns()], d)
    else:
        Wt = random_full_rank(rng, d, n, -2, 2)
    return SubspacePair(W, Wt)


def test_minor_and_sign_vector_tests_agree():
    rng = random.Random(43)
    for _ in range(60):
        pair = _sign_pair(rng)
        assert condition_closure_minors(pair).satisfiable == condition_closure_sign_vectors(pair)
        cov_s = covectors_from_matrix(pair.W, kernel=True)
        cov_perp = covectors_from_matrix(pair.Wt, kernel=False)
        trivial = all(s.is_zero() for s in cov_s & cov_perp)
        assert condition_uniqueness_minors(pair).satisfiable == trivial == condition_uniqueness_sign_vectors(pair)


def test_pair_validation():
    with pytest.raises(ShapeError):
        SubspacePair(W_RUN, ExactMatrix.from_rows([[1, 0, 0, 0, 0]]))
    with pytest.raises(ShapeError):
        SubspacePair(ExactMatrix.from_rows([[1, 1], [2, 2]]), ExactMatrix.identity(2))


# networks -----------------------------------------------------------------


def random_network(rng):
    n_v = rng.randint(2, 5)
    m = rng.randint(1, 4)
    pairs = [(i, j) for i in range(n_v) for j in range(n_v) if i != j]
    edges = rng.sample(pairs, rng.randint(1, min(len(pairs), 6)))
    y = {v: [rng.randint(0, 2) for _ in range(m)] for v in range(n_v)}
    yt = {v: [rng.randint(0, 2) for _ in range(m)] for v in range(n_v)}
    return Network.from_complexes(range(n_v), edges, y, yt)


def _linkage_classes(net):
    parent = {v: v for v in net.vertices}

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    for i, j in net.edges:
        parent[find(i)] = find(j)
    return len({find(v) for v in net.vertices})


def test_network_structure_on_random_instances():
    rng = random.Random(44)
    for _ in range(60):
        net = random_network(rng)
        k = [Fraction(rng.randint(1, 5), rng.randint(1, 3)) for _ in net.edges]
        A = laplacian(net, k)
        assert all(sum(col) == 0 for col in A.columns())
        x = [Fraction(rng.randint(1, 4), rng.randint(1, 3)) for _ in range(net.n_species)]
        f = ode_rhs(net, k, x)
        G = stoichiometric_generators(net)
        assert gauss_rank(G.transpose().rows() + [list(f)]) == gauss_rank(G.transpose().rows())
        ell = _linkage_classes(net)
        expected = [len(net.vertices) - ell - gauss_rank((Y @ incidence_matrix(net)).rows()) for Y in (net.Y, net.Ytilde)]
        d = deficiency(net)
        assert [d.stoichiometric, d.kinetic] == expected


def test_network_validation():
    y = {1: [1, 0], 2: [0, 1]}
    with pytest.raises(NetworkError):
        Network.from_complexes([1, 2], [(1, 1)], y)
    with pytest.raises(NetworkError):
        Network.from_complexes([1, 2], [(1, 2), (1, 2)], y)
    with pytest.raises(NetworkError):
        Network.from_complexes([1, 2], [(1, 3)], y)
    net = Network.from_complexes([1, 2], [(1, 2)], y)
    with pytest.raises(NetworkError):
        laplacian(net, [0])
    assert not is_weakly_reversible(net)
