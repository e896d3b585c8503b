"""Quadratic presentations of H^*(M; Q) and their Koszul-dual Lie algebras.

Relation spaces are stored as coefficient matrices c (relation
``sum c_ij x_i x_j = 0``) normalized so that ``c_ij = (-1)^{|x_i||x_j|} c_ji``,
and Lie relations as matrices lam (``sum lam_ij [a_i, a_j] = 0``) with
``lam_ij = -(-1)^{|a_i||a_j|} lam_ji``.

Koszulness itself is not checked here; for the manifolds in question it is
a theorem, and only the numerical and orthogonality consequences are
computed.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import ContractViolation
from .exactla import QMatrix, kernel_basis, rank
from .freelie import GeneratorSpec, NCPoly, graded_bracket
from .homotopylie import DEFAULT_TRUNCATION, ul_series
from .series import PowerSeries


def _sign(e):
    return -1 if e % 2 else 1


def convention_basis(n, sym_sign):
    """Basis of n x n matrices with m_ij = sym_sign * m_ji."""
    out = []
    for i in range(n):
        for j in range(i, n):
            m = [[Fraction(0)] * n for _ in range(n)]
            if i == j:
                if sym_sign == 1:
                    m[i][i] = Fraction(1)
                    out.append(m)
                continue
            m[i][j] = Fraction(1)
            m[j][i] = Fraction(sym_sign)
            out.append(m)
    return out


def _flatten(m):
    return [x for row in m for x in row]


def _combine(coeffs, basis):
    n = len(basis[0]) if basis else 0
    out = [[Fraction(0)] * n for _ in range(n)]
    for c, b in zip(coeffs, basis):
        if c:
            for i in range(n):
                for j in range(n):
                    out[i][j] += c * b[i][j]
    return out


def span_equal(mats_a, mats_b):
    """Do two lists of equal-size matrices span the same subspace?"""
    a = [_flatten(m) for m in mats_a]
    b = [_flatten(m) for m in mats_b]
    width = len((a or b or [[]])[0])
    ra = rank(QMatrix(a, cols=width))
    rb = rank(QMatrix(b, cols=width))
    return ra == rb == rank(QMatrix(a + b, cols=width))


@dataclass(frozen=True)
class QuadraticAlgebra:
    """Quadratic graded commutative algebra on n generators of degree d."""

    degree: int
    n: int
    relations: tuple
    hilbert: tuple

    @property
    def generator_degrees(self):
        return (self.degree,) * self.n

    @property
    def sym_sign(self):
        return _sign(self.degree * self.degree)

    def square_dim(self):
        """dim of the graded-commutative square Lambda^2 V."""
        return len(convention_basis(self.n, self.sym_sign))

    def poincare_series(self, N=DEFAULT_TRUNCATION):
        """Weight-graded Poincare series P_A(z)."""
        return PowerSeries(self.hilbert, N)


def cohomology_algebra(m):
    """H^*(M; Q) for a manifold model: relations are the c with sum c_ij q_ij = 0."""
    n = m.n
    s = _sign(m.d * m.d)
    basis = convention_basis(n, s)
    functional = QMatrix([[sum(b[i][j] * m.q[i][j] for i in range(n) for j in range(n))
                           for b in basis]], cols=len(basis))
    relations = tuple(
        tuple(tuple(row) for row in _combine(v, basis)) for v in kernel_basis(functional))
    return QuadraticAlgebra(m.d, n, relations, (1, n, len(basis) - len(relations)))


def pairing_value(xi, xj, ak, al, deg_x, deg_a, P):
    """<x_i x_j, [a_k, a_l]> for generator pairing matrix P = (<x_i, a_k>)."""
    xi_d, xj_d, ak_d, al_d = deg_x[xi], deg_x[xj], deg_a[ak], deg_a[al]
    s1 = _sign(xj_d * ak_d + xi_d + ak_d)
    s2 = _sign(ak_d * al_d + xj_d * al_d + xi_d + al_d)
    return s1 * P[xi][ak] * P[xj][al] - s2 * P[xi][al] * P[xj][ak]


def _pair(c, lam, deg_x, deg_a, P):
    n = len(c)
    total = Fraction(0)
    for i in range(n):
        for j in range(n):
            if not c[i][j]:
                continue
            for k in range(n):
                for l in range(n):
                    if lam[k][l]:
                        total += c[i][j] * lam[k][l] * pairing_value(i, j, k, l, deg_x, deg_a, P)
    return total


def _orthogonal(fixed, basis, pair):
    """Elements of span(basis) pairing to zero with everything in ``fixed``."""
    if not fixed:
        return [b for b in basis]
    mat = QMatrix([[pair(f, b) for b in basis] for f in fixed], cols=len(basis))
    return [_combine(v, basis) for v in kernel_basis(mat)]


def _check_pairing(a, pairing):
    P = pairing or [[int(i == j) for j in range(a.n)] for i in range(a.n)]
    P = [[Fraction(x) for x in row] for row in P]
    if len(P) != a.n or rank(QMatrix(P, cols=a.n)) < a.n:
        raise ContractViolation("generator pairing is degenerate")
    return P


def dual_lie_relations(a, pairing=None):
    """R_A-perp as Lie relation matrices lam."""
    P = _check_pairing(a, pairing)
    deg_x = a.generator_degrees
    deg_a = tuple(x - 1 for x in deg_x)
    lam_basis = convention_basis(a.n, -_sign(deg_a[0] * deg_a[0]))
    return _orthogonal([list(map(list, c)) for c in a.relations], lam_basis,
                       lambda c, lam: _pair(c, lam, deg_x, deg_a, P))


def dual_algebra_relations(a, lie_relations, pairing=None):
    """Relations c orthogonal to the given Lie relations (the dual of the dual)."""
    P = _check_pairing(a, pairing)
    deg_x = a.generator_degrees
    deg_a = tuple(x - 1 for x in deg_x)
    c_basis = convention_basis(a.n, a.sym_sign)
    return _orthogonal([list(map(list, lam)) for lam in lie_relations], c_basis,
                       lambda lam, c: _pair(c, lam, deg_x, deg_a, P))


def lie_relation_poly(lam, spec):
    gens = spec.generators()
    out = NCPoly()
    n = len(lam)
    for i in range(n):
        for j in range(n):
            if lam[i][j]:
                out = out + graded_bracket(gens[i], gens[j], spec).scale(lam[i][j])
    return out


def quadratic_dual_lie(a, pairing=None):
    """Koszul-dual Lie presentation: generators of degree d-1 and the
    relation polynomials spanning R_A-perp."""
    spec = GeneratorSpec(a.n, a.degree - 1)
    return spec, [lie_relation_poly(lam, spec) for lam in dual_lie_relations(a, pairing)]


def froberg_check(a, n, N=DEFAULT_TRUNCATION):
    """P_A(-z) * 1/(1 - n z + z^2) == 1 through z^N."""
    prod = a.poincare_series(N).scale_variable(-1) * ul_series(n, N)
    return prod == PowerSeries.one(N)
