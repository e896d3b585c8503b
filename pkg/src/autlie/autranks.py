"""Rational homotopy ranks of homotopy self-equivalence spaces.

For a (d-1)-connected 2d-manifold M with homotopy Lie algebra L, the
complex computing pi_*(aut(M)) (Q) splits by weight into

    L(r) --d1--> L(r+1)^n --d0--> L(r+2)

with ``d1(xi) = ([a_1, xi], ..., [a_n, xi])`` and
``d0(z_1, ..., z_n) = sum q_ij [a_i, z_j]``.  Ranks come out of closed
formulas in the Lie algebra dimensions, and independently out of exact
rank computations on these matrices.
"""

import threading
from dataclasses import dataclass

from .errors import ConsistencyError, ContractViolation, HypothesisViolation
from .exactla import QMatrix, rank
from .freelie import GeneratorSpec, free_tower, graded_bracket, witt_dim
from .homotopylie import bracket_matrix, epsilon_closed, quotient_slice

VARIANTS = ("closed", "based", "rel_boundary")


def _check_variant(variant):
    if variant not in VARIANTS:
        raise ContractViolation(f"unknown variant {variant!r}; expected one of {VARIANTS}")


@dataclass(frozen=True)
class ChainComplexSlice:
    r: int
    d1: QMatrix
    d0: QMatrix
    dims: tuple
    # homological degrees of the three terms for generators in degree d-1
    degrees: tuple

    def homology(self):
        """(top, middle, bottom) homology dimensions."""
        r1, r0 = rank(self.d1), rank(self.d0)
        a, b, c = self.dims
        return (a - r1, b - r0 - r1, c - r0)


_slices = {}
_slices_lock = threading.Lock()


def build_complex_slice(m, r, caps=None):
    if r < 1:
        raise ContractViolation(f"weight must be >= 1, got {r}")
    key = (m, r, caps)
    with _slices_lock:
        cached = _slices.get(key)
    if cached is not None:
        return cached
    spec = m.spec
    gens = spec.generators()
    mid = quotient_slice(m, r + 1, caps)
    low = quotient_slice(m, r + 2, caps)
    d1 = bracket_matrix(m, r, caps)
    columns = []
    for j in range(m.n):
        for c in mid.basis:
            img = gens[0].zero()
            for i in range(m.n):
                if m.q[i][j]:
                    img = img + graded_bracket(gens[i], c, spec).scale(m.q[i][j])
            columns.append(low.coords(img))
    d0 = QMatrix.from_columns(columns, rows=low.dim)
    if not (d0 @ d1).is_zero():
        raise ConsistencyError(f"d0 d1 != 0 at weight {r}")
    top = quotient_slice(m, r, caps).dim
    deg = r * (m.d - 1)
    out = ChainComplexSlice(r, d1, d0, (top, m.n * mid.dim, low.dim), (deg, deg - 1, deg - 2))
    with _slices_lock:
        _slices[key] = out
    return out


def aut_rank_closed(n, d, r, variant):
    """Rank of pi_{r(d-1)} of aut(M), aut_*(M) or aut_dN(N), by formula."""
    _check_variant(variant)
    if n < 3:
        raise HypothesisViolation(f"closed formulas need n >= 3 (trivial center), got n={n}")
    if r < 1:
        raise ContractViolation(f"weight must be >= 1, got {r}")
    parity = d % 2
    if variant == "rel_boundary":
        spec = GeneratorSpec.for_manifold(n, d)
        return n * witt_dim(spec, r + 1) - witt_dim(spec, r + 2)
    eps = [epsilon_closed(n, parity, k) for k in (r, r + 1, r + 2)]
    value = n * eps[1] - eps[2]
    if variant == "closed":
        value -= eps[0]
    return value


def rel_boundary_matrix(m, r, caps=None):
    """(z_1..z_n) -> sum q_ij [z_i, a_j] from L_free(r+1)^n to L_free(r+2)."""
    spec = m.spec
    tower = free_tower(spec, caps)
    src = tower.slice(r + 1)
    dst = tower.slice(r + 2)
    gens = spec.generators()
    columns = []
    for i in range(m.n):
        for b in src.basis:
            img = gens[0].zero()
            for j in range(m.n):
                if m.q[i][j]:
                    img = img + graded_bracket(b, gens[j], spec).scale(m.q[i][j])
            columns.append(dst.coords(img))
    return QMatrix.from_columns(columns, rows=dst.dim)


def aut_rank_homology(m, r, variant, caps=None):
    """Same ranks as aut_rank_closed, from exact ranks of the complexes.

    closed: middle homology of L(r) -> L(r+1)^n -> L(r+2).
    based: kernel of L(r+1)^n -> L(r+2).
    rel_boundary: kernel of the free-Lie map L(r+1)^n -> L(r+2).
    """
    _check_variant(variant)
    if variant == "rel_boundary":
        mat = rel_boundary_matrix(m, r, caps)
        return mat.cols - rank(mat)
    cx = build_complex_slice(m, r, caps)
    r0 = rank(cx.d0)
    if variant == "based":
        return cx.dims[1] - r0
    return cx.dims[1] - r0 - rank(cx.d1)


def verify_surjectivity_d0(m, r, caps=None):
    cx = build_complex_slice(m, r, caps)
    return rank(cx.d0) == cx.dims[2]


def aut_rank_in_degree(n, d, k, variant):
    """Rank of pi_k: zero unless (d-1) divides k."""
    if k < 1 or k % (d - 1):
        return 0
    return aut_rank_closed(n, d, k // (d - 1), variant)
