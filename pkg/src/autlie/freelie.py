"""Free graded Lie algebras inside the tensor algebra.

All generators share one degree ``gen_degree``.  A Lie element is stored as
a noncommutative polynomial; the bracket is the graded commutator
``[x, y] = xy - (-1)^{|x||y|} yx``, which embeds the free graded Lie algebra
faithfully in the tensor algebra over Q.
"""

import itertools
import threading
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, ContractViolation, DomainError, ResourceLimitError
from .exactla import QMatrix, SparseEchelon, rank


@dataclass(frozen=True)
class GeneratorSpec:
    n: int
    gen_degree: int

    def __post_init__(self):
        if self.n < 1:
            raise ContractViolation(f"need at least one generator, got n={self.n}")
        if self.gen_degree < 1:
            raise ContractViolation(f"generator degree must be >= 1, got {self.gen_degree}")

    @classmethod
    def for_manifold(cls, n, d):
        """Generators of degree d-1, as for a (d-1)-connected 2d-manifold."""
        return cls(n, d - 1)

    @property
    def parity(self):
        return self.gen_degree % 2

    def degree(self, weight):
        return weight * self.gen_degree

    def generator(self, i):
        if not 0 <= i < self.n:
            raise ContractViolation(f"generator index {i} out of range for n={self.n}")
        return NCPoly({(i,): 1})

    def generators(self):
        return [self.generator(i) for i in range(self.n)]


@dataclass(frozen=True)
class Caps:
    """Guardrails on tensor-algebra computations."""
    max_word_length: int = 10
    max_words: int = 5_000_000

    def check(self, n, r):
        if r > self.max_word_length:
            raise ResourceLimitError("max_word_length", r, self.max_word_length)
        if n ** r > self.max_words:
            raise ResourceLimitError("max_words", n ** r, self.max_words)


DEFAULT_CAPS = Caps()


class NCPoly:
    """Noncommutative polynomial: words (tuples of generator indices) to
    nonzero rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for w, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[tuple(w)] = c
        self.terms = clean

    @classmethod
    def zero(cls):
        return cls()

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def lengths(self):
        return {len(w) for w in self.terms}

    def is_homogeneous(self):
        return len(self.lengths()) <= 1

    @property
    def weight(self):
        """Common word length, or None for the zero polynomial."""
        ls = self.lengths()
        if not ls:
            return None
        if len(ls) > 1:
            raise ContractViolation(f"inhomogeneous polynomial with word lengths {sorted(ls)}")
        return next(iter(ls))

    def _combine(self, other, sign):
        out = dict(self.terms)
        for w, c in other.terms.items():
            y = out.get(w, 0) + sign * c
            if y:
                out[w] = y
            else:
                out.pop(w, None)
        p = NCPoly()
        p.terms = out
        return p

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        p = NCPoly()
        if c:
            p.terms = {w: c * x for w, x in self.terms.items()}
        return p

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out = defaultdict(Fraction)
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                out[w1 + w2] += c1 * c2
        return NCPoly(out)

    def substitute(self, images):
        """Replace generator i by the polynomial ``images[i]``."""
        out = NCPoly()
        for w, c in self.terms.items():
            term = NCPoly({(): c})
            for i in w:
                term = term * images[i]
            out = out + term
        return out

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms):
            c = self.terms[w]
            word = "".join(f"a{i + 1}" for i in w) or "1"
            parts.append(f"{c}*{word}" if c != 1 else word)
        return " + ".join(parts)


def graded_bracket(x, y, spec):
    """Graded commutator of two homogeneous Lie elements."""
    rx, ry = x.weight, y.weight
    if rx is None or ry is None:
        return NCPoly()
    sign = -1 if (rx * ry * spec.gen_degree * spec.gen_degree) % 2 else 1
    return x * y - (y * x).scale(sign)


def mobius(n):
    if n < 1:
        raise DomainError(f"Mobius function undefined at {n}")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def divisors(n):
    return [k for k in range(1, n + 1) if n % k == 0]


def witt_dim(spec, r):
    """Dimension of the weight-r part of the free graded Lie algebra."""
    if r < 1:
        raise DomainError(f"weight must be >= 1, got {r}")
    total = 0
    for l in divisors(r):
        sigma = -1 if (spec.gen_degree * (r + r // l)) % 2 else 1
        total += sigma * mobius(l) * spec.n ** (r // l)
    if total % r:
        raise ConsistencyError(f"Witt sum {total} not divisible by {r}")
    return total // r


class LieSlice:
    """Weight-r component of L(generators)/(relations).

    ``basis`` holds tensor-algebra representatives of a basis of the
    quotient, ``ideal`` a basis of the ideal at this weight.  ``coords``
    expresses any element of the weight-r Lie component in the quotient
    basis.
    """

    def __init__(self, weight, basis, ideal, echelon):
        self.weight = weight
        self.basis = tuple(basis)
        self.ideal = tuple(ideal)
        self._ech = echelon

    @property
    def dim(self):
        return len(self.basis)

    def coords(self, v):
        if v and v.weight != self.weight:
            raise ContractViolation(f"element of weight {v.weight} given to weight-{self.weight} slice")
        rem, cof = self._ech.reduce(v.terms, full=True)
        if rem:
            raise ConsistencyError(f"element is not in the weight-{self.weight} Lie component")
        out = [Fraction(0)] * self.dim
        for k, x in cof.items():
            out[k] = x
        return out

    def is_zero(self, v):
        """True if v lies in the ideal (i.e. vanishes in the quotient)."""
        return not any(self.coords(v))


class LieTower:
    """Weight slices of a Lie algebra with weight-2 relations, built lazily.

    With no relations this is the free graded Lie algebra.  Weight r is
    spanned by [a_i, b] for b in a basis of weight r-1, and the ideal by
    [a_i, v] for v in a basis of the ideal at weight r-1, starting from the
    relations themselves in weight 2.
    """

    def __init__(self, spec, relations=(), caps=None):
        self.spec = spec
        self.caps = caps or DEFAULT_CAPS
        self.relations = tuple(p for p in relations if p)
        for p in self.relations:
            if p.weight != 2:
                raise ContractViolation("relations must be homogeneous of weight 2")
        self._slices = {}
        self._lock = threading.Lock()

    def slice(self, r):
        if r < 1:
            raise DomainError(f"weight must be >= 1, got {r}")
        with self._lock:
            for k in range(1, r + 1):
                if k not in self._slices:
                    self.caps.check(self.spec.n, k)
                    self._slices[k] = self._build(k)
            return self._slices[r]

    def dims(self, rmax):
        return {r: self.slice(r).dim for r in range(1, rmax + 1)}

    def _build(self, r):
        spec = self.spec
        gens = spec.generators()
        ech = SparseEchelon()
        if r == 1:
            ideal_span = []
        elif r == 2:
            ideal_span = list(self.relations)
        else:
            prev = self._slices[r - 1]
            ideal_span = [graded_bracket(a, v, spec) for a in gens for v in prev.ideal]
        ideal = [v for v in ideal_span if v and ech.insert(v.terms)]
        if r == 1:
            candidates = gens
        else:
            prev = self._slices[r - 1]
            candidates = [graded_bracket(a, b, spec) for a in gens for b in prev.basis]
        basis = []
        for v in candidates:
            if v and ech.insert(v.terms, {len(basis): Fraction(1)}):
                basis.append(v)
        return LieSlice(r, basis, ideal, ech)


_free_towers = {}
_free_lock = threading.Lock()


def free_tower(spec, caps=None):
    caps = caps or DEFAULT_CAPS
    key = (spec, caps)
    with _free_lock:
        t = _free_towers.get(key)
        if t is None:
            t = _free_towers[key] = LieTower(spec, (), caps)
    return t


def free_lie_weight_basis(spec, r, caps=None):
    """A basis of the weight-r component of the free Lie algebra."""
    return list(free_tower(spec, caps).slice(r).basis)


def left_normed_brackets(spec, r):
    """All n^r brackets [a_i1, [a_i2, ..., a_ir]] with their index words."""
    gens = spec.generators()
    for idx in itertools.product(range(spec.n), repeat=r):
        v = gens[idx[-1]]
        for i in reversed(idx[:-1]):
            v = graded_bracket(gens[i], v, spec)
        yield idx, v


def left_normed_rank(spec, r, caps=None):
    """Rank of the span of all left-normed brackets of weight r.

    Brute force, independent of the Witt formula and of the incremental
    construction: the span splits by letter content (brackets preserve the
    multiset of letters), so each content class is ranked separately with
    Bareiss elimination.
    """
    (caps or DEFAULT_CAPS).check(spec.n, r)
    blocks = defaultdict(list)
    for idx, v in left_normed_brackets(spec, r):
        if v:
            blocks[tuple(sorted(idx))].append(v)
    total = 0
    for vecs in blocks.values():
        words = sorted({w for v in vecs for w in v.terms})
        col = {w: j for j, w in enumerate(words)}
        rows = []
        for v in vecs:
            row = [0] * len(words)
            for w, c in v.terms.items():
                row[col[w]] = c
            rows.append(row)
        total += rank(QMatrix(rows, cols=len(words)))
    return total


def span_dim(polys):
    ech = SparseEchelon()
    return sum(1 for p in polys if p and ech.insert(p.terms))


def same_span(polys_a, polys_b):
    polys_a, polys_b = list(polys_a), list(polys_b)
    return span_dim(polys_a) == span_dim(polys_b) == span_dim(polys_a + polys_b)
