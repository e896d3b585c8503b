import pytest
from hypothesis import given
from hypothesis import strategies as st

from autlie.errors import ConsistencyError, ContractViolation, DomainError, ResourceLimitError
from autlie.freelie import (
    Caps,
    GeneratorSpec,
    LieTower,
    NCPoly,
    divisors,
    free_lie_weight_basis,
    free_tower,
    graded_bracket,
    left_normed_brackets,
    left_normed_rank,
    mobius,
    same_span,
    span_dim,
    witt_dim,
)


def test_mobius_values():
    assert [mobius(k) for k in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    with pytest.raises(DomainError):
        mobius(0)


@pytest.mark.parametrize("n,d,want", [
    (2, 3, [2, 1, 2, 3, 6, 9]),
    (1, 3, [1, 0, 0]),
    (1, 4, [1, 1, 0]),
    (4, 3, [4, 6, 20]),
    (2, 4, [2, 3, 2, 3]),
])
def test_witt_values(n, d, want):
    spec = GeneratorSpec.for_manifold(n, d)
    assert [witt_dim(spec, r) for r in range(1, len(want) + 1)] == want


def test_witt_rejects_bad_weight():
    with pytest.raises(DomainError):
        witt_dim(GeneratorSpec(2, 2), 0)
    with pytest.raises(ContractViolation):
        GeneratorSpec(0, 2)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("deg", [1, 2])
def test_witt_matches_bracket_span(n, deg):
    spec = GeneratorSpec(n, deg)
    for r in range(1, 6):
        w = witt_dim(spec, r)
        assert left_normed_rank(spec, r) == w
        assert len(free_lie_weight_basis(spec, r)) == w


def test_ncpoly_arithmetic_and_repr():
    a1, a2 = GeneratorSpec(2, 2).generators()
    p = a1 * a2 - a2 * a1
    assert repr(p) == "a1a2 + -1*a2a1"
    assert p.weight == 2 and p.is_homogeneous()
    assert (p - p).weight is None
    with pytest.raises(ContractViolation):
        (p + a1).weight
    assert p.substitute([a2, a1]) == -p
    assert 2 * p == p.scale(2) == p * 2


def test_graded_signs():
    odd = GeneratorSpec(1, 1)
    a, = odd.generators()
    assert graded_bracket(a, a, odd) == (a * a).scale(2)
    even = GeneratorSpec(1, 2)
    b, = even.generators()
    assert not graded_bracket(b, b, even)


def lie_elements(spec, rmax=3):
    return st.integers(1, rmax).flatmap(
        lambda r: st.sampled_from([v for _, v in left_normed_brackets(spec, r)]))


@pytest.mark.parametrize("deg", [1, 2])
def test_graded_jacobi_and_antisymmetry(deg):
    spec = GeneratorSpec(2, deg)

    @given(lie_elements(spec), lie_elements(spec), lie_elements(spec))
    def check(x, y, z):
        if not (x and y and z):
            return
        sxy = (-1) ** (x.weight * y.weight * deg * deg)
        br = lambda u, v: graded_bracket(u, v, spec)
        assert br(x, y) == br(y, x).scale(-sxy)
        assert br(x, br(y, z)) == br(br(x, y), z) + br(y, br(x, z)).scale(sxy)
    check()


def test_relation_quotient_drops_dimension():
    spec = GeneratorSpec(2, 1)
    a1, a2 = spec.generators()
    t = LieTower(spec, [graded_bracket(a1, a2, spec)])
    # odd generators: killing [a1, a2] leaves [a1, a1] and [a2, a2]
    assert t.dims(4) == {1: 2, 2: 2, 3: 0, 4: 0}
    s2 = t.slice(2)
    assert s2.is_zero(graded_bracket(a1, a2, spec))
    assert not s2.is_zero(graded_bracket(a1, a1, spec))
    with pytest.raises(ConsistencyError):
        s2.coords(a1 * a1 + a2 * a1)
    with pytest.raises(ContractViolation):
        LieTower(spec, [a1])


def test_coords_reconstruct():
    spec = GeneratorSpec(3, 2)
    sl = free_tower(spec).slice(3)
    for _, v in left_normed_brackets(spec, 3):
        c = sl.coords(v)
        rebuilt = NCPoly()
        for x, b in zip(c, sl.basis):
            rebuilt = rebuilt + b.scale(x)
        assert rebuilt == v


def test_caps():
    spec = GeneratorSpec(3, 2)
    with pytest.raises(ResourceLimitError, match="max_words"):
        left_normed_rank(spec, 5, Caps(max_words=100))
    with pytest.raises(ResourceLimitError, match="max_word_length"):
        LieTower(spec, caps=Caps(max_word_length=3)).slice(4)


def test_span_helpers():
    a1, a2 = GeneratorSpec(2, 2).generators()
    assert span_dim([a1, a2, a1 + a2, NCPoly()]) == 2
    assert same_span([a1, a2], [a1 + a2, a1 - a2])
    assert not same_span([a1], [a2])
