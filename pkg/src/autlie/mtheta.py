"""Rational cohomology of the base component of Omega^infty MT(2d).

H^*(BO(2d)[d+1, oo); Q) is polynomial on the Euler class e (degree 2d) and
the Pontryagin classes p_l (degree 4l) for ceil((d+1)/4) <= l <= d-1.  The
loop-space cohomology is free graded commutative on the monomials of
degree > 2d, shifted down by 2d.
"""

from collections import Counter
from dataclasses import dataclass

from .errors import ContractViolation
from .series import PowerSeries, binomial_factor


@dataclass(frozen=True)
class GeneratorSpecMT:
    d: int
    cutoff: int

    def __post_init__(self):
        if self.d < 1:
            raise ContractViolation(f"need d >= 1, got {self.d}")
        if self.cutoff < 0:
            raise ContractViolation(f"cutoff must be >= 0, got {self.cutoff}")

    @property
    def base_generators(self):
        d = self.d
        gens = [("e", 2 * d)]
        lo = -(-(d + 1) // 4)
        gens += [(f"p{l}", 4 * l) for l in range(lo, d)]
        return gens


def _monomials(gens, max_degree):
    """Exponent vectors with total degree <= max_degree."""
    def rec(i, budget):
        if i == len(gens):
            yield ()
            return
        deg = gens[i][1]
        for k in range(budget // deg + 1):
            for rest in rec(i + 1, budget - k * deg):
                yield (k,) + rest
    yield from rec(0, max_degree)


def loopspace_generators(spec):
    """(monomial name, shifted degree) for every monomial of degree > 2d."""
    gens = spec.base_generators
    shift = 2 * spec.d
    out = []
    for exps in _monomials(gens, shift + spec.cutoff):
        deg = sum(k * g[1] for k, g in zip(exps, gens))
        if deg > shift:
            name = "*".join(g[0] if k == 1 else f"{g[0]}^{k}" for k, g in zip(exps, gens) if k)
            out.append((name, deg - shift))
    out.sort(key=lambda t: (t[1], t[0]))
    return out


def loopspace_generator_degrees(spec):
    """Multiset of generator degrees as a Counter {degree: multiplicity}."""
    return Counter(deg for _, deg in loopspace_generators(spec))


def free_graded_comm_series(generators, cutoff):
    """Poincare series of the free graded commutative algebra.

    ``generators`` maps degree to multiplicity.  Even generators are
    polynomial, odd ones exterior.
    """
    if cutoff < 0:
        raise ContractViolation("cutoff must be >= 0")
    out = PowerSeries.one(cutoff)
    for deg, mult in sorted(dict(generators).items()):
        if deg < 1:
            raise ContractViolation(f"generator degree must be >= 1, got {deg}")
        if deg <= cutoff and mult:
            out = out * binomial_factor(deg, mult, cutoff, exterior=deg % 2 == 1)
    return out


def omega_mt_betti(spec):
    return free_graded_comm_series(loopspace_generator_degrees(spec), spec.cutoff)
