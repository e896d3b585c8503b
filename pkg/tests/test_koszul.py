import pytest

from autlie.errors import ContractViolation
from autlie.freelie import same_span
from autlie.homotopylie import ManifoldModel, relation_element
from autlie.koszul import (
    QuadraticAlgebra,
    cohomology_algebra,
    convention_basis,
    dual_algebra_relations,
    dual_lie_relations,
    froberg_check,
    quadratic_dual_lie,
    span_equal,
)


def test_convention_basis_sizes():
    assert len(convention_basis(3, 1)) == 6
    assert len(convention_basis(3, -1)) == 3


@pytest.mark.parametrize("d,square,nrel", [(3, 1, 0), (4, 3, 2), (5, 1, 0), (6, 3, 2)])
def test_cohomology_of_torus_like_pair(d, square, nrel):
    a = cohomology_algebra(ManifoldModel.hyperbolic(1, d))
    # odd d: x^2 = 0 automatically, the square is spanned by x1 x2
    assert a.square_dim() == square
    assert len(a.relations) == nrel
    assert a.hilbert == (1, 2, 1)


@pytest.mark.parametrize("g", [1, 2, 3])
@pytest.mark.parametrize("d", [3, 4])
def test_dual_lie_relation_is_intersection_form(g, d):
    m = ManifoldModel.hyperbolic(g, d)
    spec, rels = quadratic_dual_lie(cohomology_algebra(m))
    assert spec == m.spec
    assert len(rels) == 1
    assert same_span(rels, [relation_element(m)])


@pytest.mark.parametrize("d", [3, 4])
def test_double_dual(d):
    a = cohomology_algebra(ManifoldModel.hyperbolic(2, d))
    lam = dual_lie_relations(a)
    assert span_equal(dual_algebra_relations(a, lam), [list(map(list, c)) for c in a.relations])


def test_nonstandard_pairing_gives_same_dimensions():
    a = cohomology_algebra(ManifoldModel.hyperbolic(2, 4))
    p = [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 2, 0], [0, 0, 0, 1]]
    assert len(dual_lie_relations(a, p)) == len(dual_lie_relations(a)) == 1
    with pytest.raises(ContractViolation, match="degenerate"):
        dual_lie_relations(a, [[0] * 4] * 4)


@pytest.mark.parametrize("n", range(2, 9))
def test_froberg(n):
    d = 4 if n % 2 else 3
    m = ManifoldModel.hyperbolic(n // 2, d) if n % 2 == 0 else \
        ManifoldModel(d, [[int(i == j) for j in range(n)] for i in range(n)])
    a = cohomology_algebra(m)
    assert froberg_check(a, n, 12)
    assert not froberg_check(QuadraticAlgebra(d, n, (), (1, n, 0)), n, 12)
