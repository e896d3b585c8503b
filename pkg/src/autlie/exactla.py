"""Exact linear algebra over the rationals.

Dense matrices of :class:`fractions.Fraction` with fraction-free (Bareiss)
rank computation, plus a sparse incremental echelon form keyed by arbitrary
sortable column labels.  The sparse form is what the Lie algebra code uses
to reduce tensor-algebra vectors against a growing basis.
"""

from fractions import Fraction
from math import lcm

from .errors import DimensionMismatch

__all__ = [
    "QMatrix",
    "rank",
    "kernel_basis",
    "column_space_dim_of_span",
    "rref",
    "rank_factorization",
    "solve",
    "SparseEchelon",
]


def _q(x):
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class QMatrix:
    """Immutable dense rational matrix.

    Entries are stored row-major as tuples of ``Fraction`` (which are always
    reduced with positive denominator).  ``cols`` must be given explicitly
    when there are no rows.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data=(), cols=None):
        data = tuple(tuple(_q(x) for x in row) for row in data)
        if cols is None:
            cols = len(data[0]) if data else 0
        for row in data:
            if len(row) != cols:
                raise DimensionMismatch(
                    f"row of length {len(row)} in a matrix with {cols} columns")
        self._data = data
        self.rows = len(data)
        self.cols = cols

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def from_columns(cls, columns, rows=None):
        columns = [list(c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        for c in columns:
            if len(c) != rows:
                raise DimensionMismatch("columns of unequal length")
        return cls([[c[i] for c in columns] for i in range(rows)],
                   cols=len(columns))

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i):
        return self._data[i]

    def column(self, j):
        return tuple(r[j] for r in self._data)

    def tolist(self):
        return [list(r) for r in self._data]

    def transpose(self):
        return QMatrix([[self._data[i][j] for i in range(self.rows)]
                        for j in range(self.cols)], cols=self.rows)

    T = property(transpose)

    def __matmul__(self, other):
        if isinstance(other, QMatrix):
            if self.cols != other.rows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            ocols = [other.column(j) for j in range(other.cols)]
            return QMatrix(
                [[sum((a * b for a, b in zip(r, c) if a and b), Fraction(0))
                  for c in ocols] for r in self._data],
                cols=other.cols)
        v = [_q(x) for x in other]
        if len(v) != self.cols:
            raise DimensionMismatch(f"cannot apply {self.shape} matrix to vector of length {len(v)}")
        return [sum((a * b for a, b in zip(r, v) if a and b), Fraction(0)) for r in self._data]

    def is_zero(self):
        return all(x == 0 for r in self._data for x in r)

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.cols, self._data))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._data)
        return f"QMatrix([{body}], cols={self.cols})"


def _integer_rows(m):
    """Scale each row by the lcm of its denominators."""
    out = []
    for r in m._data:
        den = lcm(*(x.denominator for x in r)) if r else 1
        ir = [x.numerator * (den // x.denominator) for x in r]
        if any(ir):
            out.append(ir)
    return out


def rank(m):
    """Rank over Q by fraction-free Bareiss elimination on integer rows."""
    a = _integer_rows(m)
    if not a:
        return 0
    ncols = m.cols
    nrows = len(a)
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        prow = a[r]
        p = prow[c]
        for i in range(r + 1, nrows):
            row = a[i]
            f = row[c]
            if f:
                a[i] = [(p * x - f * y) // prev for x, y in zip(row, prow)]
            else:
                a[i] = [(p * x) // prev for x in row]
        prev = p
        r += 1
    return r


def rref(m):
    """Reduced row echelon form and pivot columns."""
    a = [list(r) for r in m._data]
    pivots = []
    r = 0
    for c in range(m.cols):
        piv = next((i for i in range(r, m.rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return QMatrix(a, cols=m.cols), pivots


def rank_factorization(m):
    """Return ``(C, R)`` with ``C @ R == m``; C holds the pivot columns of m."""
    red, pivots = rref(m)
    k = len(pivots)
    c = QMatrix([[m[i, j] for j in pivots] for i in range(m.rows)], cols=k)
    r = QMatrix([red.row(i) for i in range(k)], cols=m.cols)
    return c, r


def kernel_basis(m):
    """Basis of the right null space, one vector per free column."""
    red, pivots = rref(m)
    pivset = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i, f]
        basis.append(v)
    return basis


def column_space_dim_of_span(vectors):
    vectors = [list(v) for v in vectors]
    if not vectors:
        return 0
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise DimensionMismatch("vectors of unequal length")
    return rank(QMatrix(vectors, cols=n))


def solve(m, b):
    """One solution x of ``m @ x == b``, or None if the system is inconsistent."""
    b = [_q(x) for x in b]
    if len(b) != m.rows:
        raise DimensionMismatch("right-hand side has wrong length")
    aug = QMatrix([list(m.row(i)) + [b[i]] for i in range(m.rows)], cols=m.cols + 1)
    red, pivots = rref(aug)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [Fraction(0)] * m.cols
    for i, p in enumerate(pivots):
        x[p] = red[i, m.cols]
    return x


class SparseEchelon:
    """Incremental echelon form for sparse vectors ``{label: Fraction}``.

    Every stored row is monic in its pivot, the largest label of the row.
    Each row also carries a *cofactor*: a sparse vector in some auxiliary
    coordinate space supplied by the caller, extended linearly through
    the elimination.  ``reduce`` returns the remainder together with the
    accumulated cofactor, so a vector lying in the span can be expressed
    in whatever coordinates the rows were tagged with.
    """

    def __init__(self):
        self._rows = {}

    def __len__(self):
        return len(self._rows)

    def reduce(self, vec, full=False):
        """Eliminate leading terms of ``vec``.

        Returns ``(remainder, cofactor)`` where ``vec == sum(c * row) +
        remainder`` and ``cofactor == sum(c * row.cofactor)``.  With
        ``full=False`` elimination stops at the first leading label that is
        not a pivot (enough to test membership or to insert); with
        ``full=True`` every label is reduced.
        """
        v = dict(vec)
        cof = {}
        rem = {}
        rows = self._rows
        while v:
            w = max(v)
            c = v.pop(w)
            row = rows.get(w)
            if row is None:
                rem[w] = c
                if not full:
                    rem.update(v)
                    break
                continue
            terms, rcof = row
            for k, x in terms.items():
                if k == w:
                    continue
                y = v.get(k, 0) - c * x
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
            for k, x in rcof.items():
                y = cof.get(k, 0) - c * x
                if y:
                    cof[k] = y
                else:
                    cof.pop(k, None)
        return rem, {k: -x for k, x in cof.items()}

    def insert(self, vec, cofactor=None):
        """Add ``vec`` to the span.  Returns False if it was already there."""
        rem, cof = self.reduce(vec)
        if not rem:
            return False
        # rem = vec - sum(c*row), so its cofactor is cofactor(vec) - that sum
        tag = {k: -x for k, x in cof.items()}
        for k, x in (cofactor or {}).items():
            y = tag.get(k, 0) + x
            if y:
                tag[k] = y
            else:
                tag.pop(k, None)
        w = max(rem)
        inv = 1 / rem[w]
        self._rows[w] = ({k: x * inv for k, x in rem.items()},
                         {k: x * inv for k, x in tag.items()})
        return True

    def contains(self, vec):
        rem, _ = self.reduce(vec)
        return not rem
