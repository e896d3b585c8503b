"""Truncated formal power series with exact rational coefficients."""

from fractions import Fraction
from math import comb

from .errors import ContractViolation


class PowerSeries:
    """c_0 + c_1 z + ... + c_N z^N + O(z^{N+1}).

    Arithmetic between series of different orders truncates to the smaller
    order.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order=None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ContractViolation("truncation order must be >= 0")
        cs = cs[:order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        self.coeffs = tuple(cs)

    @property
    def order(self):
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order):
        return cls([1], order)

    @classmethod
    def monomial(cls, k, order, c=1):
        cs = [0] * (order + 1)
        if k <= order:
            cs[k] = c
        return cls(cs, order)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order):
        return PowerSeries(self.coeffs, min(order, self.order))

    def __add__(self, other):
        other = _coerce(other, self.order)
        n = min(self.order, other.order)
        return PowerSeries([a + b for a, b in zip(self.coeffs[:n + 1], other.coeffs)], n)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-_coerce(other, self.order))

    def __rsub__(self, other):
        return _coerce(other, self.order) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries([c * other for c in self.coeffs], self.order)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            if a[i]:
                ai = a[i]
                for j in range(n + 1 - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return PowerSeries(out, n)

    __rmul__ = __mul__

    def inverse(self):
        if self.coeffs[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        a = self.coeffs
        inv0 = 1 / a[0]
        out = [inv0]
        for k in range(1, self.order + 1):
            s = sum((a[j] * out[k - j] for j in range(1, k + 1) if a[j]), Fraction(0))
            out.append(-s * inv0)
        return PowerSeries(out, self.order)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other, self.order) * self.inverse()

    def scale_variable(self, c):
        """f(c z)."""
        c = Fraction(c)
        return PowerSeries([x * c ** k for k, x in enumerate(self.coeffs)], self.order)

    def derivative(self):
        return PowerSeries([k * x for k, x in enumerate(self.coeffs)][1:] or [0],
                           max(self.order - 1, 0))

    def log(self):
        """log f for f with constant term 1."""
        if self.coeffs[0] != 1:
            raise ContractViolation("log needs constant term 1")
        # f'/f integrated termwise
        q = self.derivative() * self.truncate(self.order - 1).inverse() if self.order else None
        out = [Fraction(0)]
        if q is not None:
            out += [q.coeffs[k] / (k + 1) for k in range(self.order)]
        return PowerSeries(out, self.order)

    def exp(self):
        """exp f for f with zero constant term."""
        if self.coeffs[0] != 0:
            raise ContractViolation("exp needs zero constant term")
        a = self.coeffs
        out = [Fraction(1)]
        # k e_k = sum_j j a_j e_{k-j}
        for k in range(1, self.order + 1):
            s = sum((j * a[j] * out[k - j] for j in range(1, k + 1) if a[j]), Fraction(0))
            out.append(s / k)
        return PowerSeries(out, self.order)

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        out = PowerSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def integers(self):
        if not self.is_integral():
            raise ContractViolation("series has non-integer coefficients")
        return [int(c) for c in self.coeffs]

    def __repr__(self):
        return f"PowerSeries({[str(c) for c in self.coeffs]})"


def _coerce(x, order):
    if isinstance(x, PowerSeries):
        return x
    return PowerSeries([x], order)


def binomial_factor(k, e, order, exterior):
    """(1 + z^k)^e if ``exterior`` else (1 - z^k)^(-e), truncated."""
    cs = [0] * (order + 1)
    if e == 0:
        cs[0] = 1
        return PowerSeries(cs, order)
    j = 0
    while j * k <= order:
        cs[j * k] = comb(e, j) if exterior else comb(e + j - 1, j)
        j += 1
    return PowerSeries(cs, order)
