"""Homotopy Lie algebra of a (d-1)-connected 2d-manifold.

Rationally the loop space homotopy is the free graded Lie algebra on n
generators of degree d-1 modulo the single relation
``Q = 1/2 sum q_ij [a_i, a_j]`` built from the intersection matrix q.  The
weight-r dimensions are computed three ways: a closed Mobius-inversion
formula, coefficient matching against the enveloping algebra series
``1/(1 - n z + z^2)``, and brute-force linear algebra in the tensor algebra.
"""

import random
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import ConsistencyError, ContractViolation, DomainError
from .exactla import QMatrix, rank
from .freelie import DEFAULT_CAPS, GeneratorSpec, LieTower, divisors, graded_bracket, mobius
from .series import PowerSeries, binomial_factor

DEFAULT_TRUNCATION = 12


@dataclass(frozen=True)
class ManifoldModel:
    """Rational data (d, q) of a (d-1)-connected closed 2d-manifold.

    ``q`` is the cup-product (intersection) matrix on H^d.  Inputs that
    cannot be the intersection form of such a manifold are rejected here.
    """

    d: int
    q: tuple
    g: int = field(default=None, compare=False)

    def __post_init__(self):
        q = tuple(tuple(int(x) for x in row) for row in self.q)
        object.__setattr__(self, "q", q)
        n = len(q)
        if self.d < 3:
            raise ContractViolation(f"need d >= 3, got d={self.d}")
        if n < 2:
            raise ContractViolation(f"need rank H^d >= 2, got {n}")
        if any(len(row) != n for row in q):
            raise ContractViolation("intersection matrix must be square")
        eps = (-1) ** self.d
        for i in range(n):
            for j in range(n):
                if q[i][j] != eps * q[j][i]:
                    raise ContractViolation(
                        f"q[{i}][{j}]={q[i][j]} but (-1)^d q[{j}][{i}]={eps * q[j][i]}")
        if rank(QMatrix(q)) < n:
            raise ContractViolation("intersection matrix is not invertible over Q")

    @classmethod
    def hyperbolic(cls, g, d):
        """M_g, the connected sum of g copies of S^d x S^d."""
        if g < 1:
            raise ContractViolation(f"genus must be >= 1, got {g}")
        eps = (-1) ** d
        n = 2 * g
        q = [[0] * n for _ in range(n)]
        for i in range(g):
            q[i][g + i] = 1
            q[g + i][i] = eps
        return cls(d, q, g)

    @property
    def n(self):
        return len(self.q)

    @property
    def parity(self):
        return self.d % 2

    @property
    def spec(self):
        return GeneratorSpec.for_manifold(self.n, self.d)

    def base_change(self, u):
        """Model with intersection matrix u^t q u (u invertible over Z)."""
        n = self.n
        if len(u) != n or any(len(r) != n for r in u):
            raise ContractViolation("base change matrix has wrong size")
        qu = [[sum(self.q[i][k] * u[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        q2 = [[sum(u[k][i] * qu[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        return ManifoldModel(self.d, q2)


def random_unimodular(n, seed, steps=None):
    """Random integer matrix of determinant +-1 (product of elementary moves)."""
    rng = random.Random(seed)
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps or 3 * n):
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-2, -1, 1, 2])
        for k in range(n):
            u[i][k] += c * u[j][k]
        if rng.random() < 0.3:
            u[i], u[j] = u[j], u[i]
    return u


def relation_element(m):
    """Q = 1/2 sum_ij q_ij [a_i, a_j] as a tensor-algebra element."""
    spec = m.spec
    gens = spec.generators()
    out = gens[0].zero()
    for i in range(m.n):
        for j in range(m.n):
            if m.q[i][j]:
                out = out + graded_bracket(gens[i], gens[j], spec).scale(Fraction(m.q[i][j], 2))
    return out


_towers = {}
_towers_lock = threading.Lock()


def model_tower(m, caps=None):
    caps = caps or DEFAULT_CAPS
    key = (m, caps)
    with _towers_lock:
        t = _towers.get(key)
        if t is None:
            t = _towers[key] = LieTower(m.spec, [relation_element(m)], caps)
    return t


def quotient_slice(m, r, caps=None):
    """Weight-r component of L(a_1..a_n)/(Q) with basis and coordinates."""
    return model_tower(m, caps).slice(r)


def quotient_dims(m, rmax, caps=None):
    return model_tower(m, caps).dims(rmax)


def _check_parity(d_parity):
    if d_parity not in (0, 1):
        raise ContractViolation(f"parity must be 0 or 1, got {d_parity}")


def _graded_sign(d_parity, r, l):
    # (-1)^{(d-1)(r + r/l)}
    return -1 if ((1 - d_parity) * (r + r // l)) % 2 else 1


def _log_coefficient(n, m):
    """z^m coefficient of -log(1 - n z + z^2)."""
    total = Fraction(0)
    for q in range(m // 2 + 1):
        p = m - 2 * q
        if p + q:
            total += Fraction((-1) ** q * n ** p * comb(p + q, p), p + q)
    return total


def _epsilon_sum(n, d_parity, r, sign):
    total = Fraction(0)
    for l in divisors(r):
        mu = mobius(l)
        if mu:
            total += sign(d_parity, r, l) * Fraction(mu, l) * _log_coefficient(n, r // l)
    return total


def epsilon_closed(n, d_parity, r):
    """Closed Mobius-inversion formula for dim L(r)."""
    _check_parity(d_parity)
    if r < 1:
        raise DomainError(f"weight must be >= 1, got {r}")
    if n < 2:
        raise ContractViolation(f"formula needs n >= 2, got {n}")
    value = _epsilon_sum(n, d_parity, r, _graded_sign)
    if value.denominator != 1 or value < 0:
        raise ConsistencyError(
            f"closed formula gave {value} for n={n}, d parity {d_parity}, r={r}")
    return int(value)


def ul_series(n, N=DEFAULT_TRUNCATION):
    """Coefficients of 1/(1 - n z + z^2) through z^N."""
    if N < 1:
        raise ContractViolation("truncation must be >= 1")
    u = [1, n]
    for _ in range(2, N + 1):
        u.append(n * u[-1] - u[-2])
    return PowerSeries(u[:N + 1], N)


def is_exterior(d_parity, r):
    """Weight-r elements sit in degree r(d-1); odd degree means exterior."""
    return (r * (1 - d_parity)) % 2 == 1


def pbw_product(eps, d_parity, N):
    """Product of PBW factors for the weight dimensions ``eps``."""
    out = PowerSeries.one(N)
    for r, e in sorted(eps.items()):
        if r <= N and e:
            out = out * binomial_factor(r, e, N, is_exterior(d_parity, r))
    return out


def epsilon_from_pbw(n, d_parity, N=DEFAULT_TRUNCATION):
    """Invert the PBW product formula against ul_series by coefficient matching.

    Each factor is 1 + e z^r + O(z^{r+1}) regardless of parity, so the
    z^r coefficient of the partial product through weight r-1 determines
    e_r.
    """
    _check_parity(d_parity)
    target = ul_series(n, N)
    partial = PowerSeries.one(N)
    eps = {}
    for r in range(1, N + 1):
        e = target[r] - partial[r]
        if e.denominator != 1 or e < 0:
            raise ConsistencyError(f"PBW inversion produced e_{r}={e} for n={n}")
        e = int(e)
        eps[r] = e
        partial = partial * binomial_factor(r, e, N, is_exterior(d_parity, r))
    if partial != target:
        raise ConsistencyError("PBW product does not reproduce the enveloping series")
    return eps


def bracket_matrix(m, r, caps=None):
    """Matrix of xi -> ([a_1, xi], ..., [a_n, xi]) from L(r) to L(r+1)^n."""
    src = quotient_slice(m, r, caps)
    dst = quotient_slice(m, r + 1, caps)
    gens = m.spec.generators()
    columns = []
    for b in src.basis:
        col = []
        for a in gens:
            col.extend(dst.coords(graded_bracket(a, b, m.spec)))
        columns.append(col)
    return QMatrix.from_columns(columns, rows=m.n * dst.dim)


def center_dims(m, rmax, caps=None):
    """dim of {xi in L(r) : [a_i, xi] = 0 for all i} for r = 1..rmax."""
    out = {}
    for r in range(1, rmax + 1):
        mat = bracket_matrix(m, r, caps)
        out[r] = mat.cols - rank(mat)
    return out
