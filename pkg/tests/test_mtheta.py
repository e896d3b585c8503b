import pytest
from hypothesis import given
from hypothesis import strategies as st

from autlie.errors import ContractViolation
from autlie.mtheta import (
    GeneratorSpecMT,
    free_graded_comm_series,
    loopspace_generator_degrees,
    loopspace_generators,
    omega_mt_betti,
)


def test_base_generators():
    assert GeneratorSpecMT(1, 4).base_generators == [("e", 2)]
    assert GeneratorSpecMT(3, 4).base_generators == [("e", 6), ("p1", 4), ("p2", 8)]
    assert GeneratorSpecMT(4, 4).base_generators == [("e", 8), ("p2", 8), ("p3", 12)]


def test_d1_generators():
    assert dict(loopspace_generator_degrees(GeneratorSpecMT(1, 12))) == {k: 1 for k in range(2, 13, 2)}
    assert loopspace_generators(GeneratorSpecMT(1, 4)) == [("e^2", 2), ("e^3", 4)]


def test_d3_low_degrees():
    assert dict(loopspace_generator_degrees(GeneratorSpecMT(3, 6))) == {2: 2, 4: 1, 6: 3}


@pytest.mark.parametrize("d,cutoff,want", [
    (1, 6, [1, 0, 1, 0, 2, 0, 3]),
    (3, 2, [1, 0, 2]),
    (3, 0, [1]),
])
def test_betti(d, cutoff, want):
    assert omega_mt_betti(GeneratorSpecMT(d, cutoff)).integers() == want


@given(st.integers(1, 6), st.integers(0, 16))
def test_generators_even_and_in_range(d, cutoff):
    degs = loopspace_generator_degrees(GeneratorSpecMT(d, cutoff))
    assert all(k % 2 == 0 and 0 < k <= cutoff for k in degs)


def test_exterior_and_polynomial_factors():
    s = free_graded_comm_series({1: 2, 2: 1}, 4)
    # (1+z)^2 / (1-z^2) = (1 + 2z + z^2)(1 + z^2 + z^4)
    assert s.integers() == [1, 2, 2, 2, 2]
    with pytest.raises(ContractViolation):
        free_graded_comm_series({0: 1}, 3)
    with pytest.raises(ContractViolation):
        GeneratorSpecMT(0, 3)
