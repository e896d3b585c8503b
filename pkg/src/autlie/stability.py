"""Stability ranges and rational invariants of block diffeomorphisms of M_g.

M_g is the connected sum of g copies of S^d x S^d.  Everything here is
integer or rational arithmetic on the published ranges and rank formulas.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

from .errors import ContractViolation, DimensionMismatch, HypothesisViolation
from .mtheta import free_graded_comm_series

OUTSIDE_RANGE = "outside-range"


@dataclass(frozen=True)
class HyperbolicForm:
    """H(Z^g, eps): Z^{2g} with pairing [[0, I], [eps I, 0]]."""

    g: int
    epsilon: int
    q: tuple = field(repr=False)

    def automorphism_group(self):
        # symplectic for eps = -1, orthogonal O_{g,g} for eps = +1
        return "Sp_2g(Z)" if self.epsilon == -1 else "O_g,g(Z)"


def hyperbolic_form(g, d):
    if g < 1:
        raise ContractViolation(f"genus must be >= 1, got {g}")
    eps = (-1) ** d
    n = 2 * g
    q = [[0] * n for _ in range(n)]
    for i in range(g):
        q[i][g + i] = 1
        q[g + i][i] = eps
    return HyperbolicForm(g, eps, tuple(tuple(r) for r in q))


def is_form_automorphism(lam, q):
    """lam^t q lam == q over the integers.

    Only the intersection-form condition is tested; the finite-index
    subgroup that also fixes the torsion attaching data has no rational
    counterpart.
    """
    n = len(q)
    if len(lam) != n or any(len(r) != n for r in lam) or any(len(r) != n for r in q):
        raise DimensionMismatch("lam and q must be square of equal size")
    ql = [[sum(q[i][k] * lam[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return all(sum(lam[k][i] * ql[k][j] for k in range(n)) == q[i][j]
               for i in range(n) for j in range(n))


def go_pi_rank(k):
    """Rank of pi_k(G/O) (Q): one copy of Q in each positive degree 4l."""
    if k < 0:
        raise ContractViolation(f"degree must be >= 0, got {k}")
    return int(k > 0 and k % 4 == 0)


def _need_d_above_2(d):
    if d <= 2:
        raise HypothesisViolation(f"need d > 2, got d={d}")


def block_quotient_pi_rank(d, g, k):
    """Rank of pi_k^ab (Q) of the block quotient aut/block-diff for M_g."""
    _need_d_above_2(d)
    if k < 1:
        raise ContractViolation(f"degree must be >= 1, got {k}")
    return 2 * g * go_pi_rank(k + d)


def block_quotient_homology_series(d, g, cutoff):
    _need_d_above_2(d)
    gens = {k: block_quotient_pi_rank(d, g, k) for k in range(1, cutoff + 1)}
    return free_graded_comm_series({k: m for k, m in gens.items() if m}, cutoff)


def diff_pi_rank(d, g, k):
    """Rank of pi_{k-1}(Diff_D(M_g)) (Q) for 1 < k < d-1, else OUTSIDE_RANGE."""
    _need_d_above_2(d)
    if not 1 < k < d - 1:
        return OUTSIDE_RANGE
    return 2 * g * go_pi_rank(k + d)


def stable_range_bound(d, g):
    return min(Fraction(d - 2), Fraction(g - 5, 2))


def stable_range_max_k(d, g):
    """Largest k >= 0 with k < min(d-2, (g-5)/2), or -1 if there is none."""
    _need_d_above_2(d)
    return max(ceil(stable_range_bound(d, g)) - 1, -1)


def charney_connectivity(g, k):
    if k < 1:
        raise ContractViolation(f"tensor power must be >= 1, got {k}")
    return Fraction(g - 4 - k, 2)


@dataclass(frozen=True)
class RangeReport:
    d: int
    g: int
    stable_bound: Fraction
    max_stable_k: int
    block_pi_ranks: dict
    diff_pi_ranks: dict
    charney: dict


def range_report(d, g, kmax=None, tensor_max=4):
    _need_d_above_2(d)
    kmax = kmax or 2 * d
    return RangeReport(
        d=d,
        g=g,
        stable_bound=stable_range_bound(d, g),
        max_stable_k=stable_range_max_k(d, g),
        block_pi_ranks={k: block_quotient_pi_rank(d, g, k) for k in range(1, kmax + 1)},
        diff_pi_ranks={k: diff_pi_rank(d, g, k) for k in range(1, kmax + 1)},
        charney={k: charney_connectivity(g, k) for k in range(1, tensor_max + 1)},
    )
