"""Truncated formal power series over exact coefficient rings.

A :class:`Series` is a fixed-length window of coefficients: indices
``0 .. order-1`` are known exactly, anything beyond is unknown (not
zero).  Binary operations truncate to the shorter operand; asking for a
coefficient past the order is an error rather than a silent zero.

Coefficients are ``Fraction`` or :class:`~riordan.rings.ParamPoly`.
Purely rational series run on the selected kernel backend (compiled
when available); series with polynomial coefficients always use the
generic pure-Python loops.
"""

from __future__ import annotations

from fractions import Fraction

from . import _purekernels
from ._backend import kernels
from .rings import ONE, ZERO, ParamPoly


def _normalize(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, ParamPoly):
        return c
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


class Series:
    """Truncated power series with exact coefficients.

    ``order`` is the number of known coefficients; it is explicit in
    every result.  Equality compares coefficients up to the common
    order.
    """

    __slots__ = ("coeffs", "order", "_rational")

    def __init__(self, coeffs=(), order: int | None = None):
        cs = [_normalize(c) for c in coeffs]
        if order is None:
            order = len(cs)
        if order < 1:
            raise ValueError("series order must be at least 1")
        if len(cs) < order:
            pad = self._zero_of(cs)
            cs.extend([pad] * (order - len(cs)))
        elif len(cs) > order:
            del cs[order:]
        self.coeffs = tuple(cs)
        self.order = order
        self._rational = all(isinstance(c, Fraction) for c in cs)

    @staticmethod
    def _zero_of(cs):
        for c in cs:
            if isinstance(c, ParamPoly):
                return ParamPoly((), c.symbol)
        return ZERO

    def _zero(self):
        return self._zero_of(self.coeffs)

    def _one(self):
        return self._zero() + 1

    # -- basic access ---------------------------------------------------

    def __getitem__(self, k: int):
        if not 0 <= k < self.order:
            raise IndexError(
                f"coefficient {k} beyond truncation order {self.order}"
            )
        return self.coeffs[k]

    def __len__(self):
        return self.order

    def valuation(self) -> int:
        """Index of the first nonzero coefficient (= order if none)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self.order

    def is_rational(self) -> bool:
        return self._rational

    def eval_param(self, value) -> "Series":
        """Substitute an exact value for the formal parameter."""
        return Series(
            [c(value) if isinstance(c, ParamPoly) else c for c in self.coeffs],
            self.order,
        )

    # -- reshaping ------------------------------------------------------

    def truncate(self, m: int) -> "Series":
        if m > self.order:
            raise ValueError(f"cannot extend order {self.order} to {m}")
        return Series(self.coeffs[:m], m)

    def pad_zeros(self, m: int) -> "Series":
        """Extend the order with zero coefficients.

        This asserts the series is polynomial beyond the stored window;
        use only when that is known (e.g. finite coefficient lists).
        """
        if m < self.order:
            return self.truncate(m)
        return Series(self.coeffs + (self._zero(),) * (m - self.order), m)

    def shift_up(self, k: int = 1, extend: bool = False) -> "Series":
        """Multiply by x^k.  With ``extend`` the order grows by ``k``
        (no information is lost); otherwise the top coefficients fall
        off the truncation window."""
        z = (self._zero(),) * k
        if extend:
            return Series(z + self.coeffs, self.order + k)
        return Series(z + self.coeffs[: self.order - k], self.order)

    def shift_down(self, k: int = 1) -> "Series":
        """Divide by x^k; the first ``k`` coefficients must vanish."""
        if any(self.coeffs[i] for i in range(min(k, self.order))):
            raise ValueError(f"series is not divisible by x^{k}")
        if self.order - k < 1:
            raise ValueError("shift_down would leave an empty series")
        return Series(self.coeffs[k:], self.order - k)

    def alternate(self) -> "Series":
        """Substitute -x for x."""
        return Series(
            [c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)],
            self.order,
        )

    def scale_arg(self, c) -> "Series":
        """Substitute c*x for x."""
        c = _normalize(c)
        out, p = [], self._one()
        for a in self.coeffs:
            out.append(a * p)
            p = p * c
        return Series(out, self.order)

    # -- ring operations ------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Fraction, ParamPoly)):
            return Series([_normalize(other)], self.order)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return Series([self.coeffs[k] + o.coeffs[k] for k in range(n)], n)

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return Series([self.coeffs[k] - o.coeffs[k] for k in range(n)], n)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ParamPoly)):
            c = _normalize(other)
            return Series([a * c for a in self.coeffs], self.order)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = list(self.coeffs[:n]), list(other.coeffs[:n])
        if self._rational and other._rational:
            return Series(kernels.mul(a, b, n), n)
        zero = self._zero_of(a) if not self._rational else self._zero_of(b)
        return Series(_purekernels.mul(a, b, n, zero), n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, ParamPoly)):
            c = _normalize(other)
            return Series([a / c for a in self.coeffs], self.order)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = list(self.coeffs[:n]), list(other.coeffs[:n])
        if self._rational and other._rational:
            return Series(kernels.div(a, b, n), n)
        zero = self._zero_of(a) if not self._rational else self._zero_of(b)
        return Series(_purekernels.div(a, b, n, zero), n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def inverse(self) -> "Series":
        """Multiplicative inverse 1/self."""
        return 1 / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("use pow_rat for non-integer exponents")
        if k < 0:
            return self.inverse() ** (-k)
        result = Series([self._one()], self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- composition ----------------------------------------------------

    def compose(self, inner: "Series") -> "Series":
        """self(inner(x)); the inner constant term must vanish."""
        n = min(self.order, inner.order)
        a, b = list(self.coeffs[:n]), list(inner.coeffs[:n])
        if b and b[0]:
            raise ValueError(
                "composition requires an inner series with zero constant term"
            )
        if self._rational and inner._rational:
            return Series(kernels.compose(a, b, n), n)
        zero = self._zero_of(a + b)
        return Series(_purekernels.compose(a, b, n, zero), n)

    def revert(self) -> "Series":
        """Compositional inverse: g with self(g(x)) = x."""
        n = self.order
        f = list(self.coeffs)
        if self._rational:
            return Series(kernels.revert(f, n), n)
        return Series(_purekernels.revert(f, n, self._zero()), n)

    # -- calculus -------------------------------------------------------

    def derivative(self) -> "Series":
        if self.order < 2:
            raise ValueError("derivative of an order-1 series is unknown")
        return Series(
            [k * self.coeffs[k] for k in range(1, self.order)], self.order - 1
        )

    def integral(self) -> "Series":
        """Term-by-term antiderivative with zero constant term."""
        out = [self._zero()]
        for k, c in enumerate(self.coeffs):
            out.append(c / (k + 1))
        return Series(out, self.order + 1)

    # -- analytic-style operations (exact recurrences) ------------------

    def sqrt(self) -> "Series":
        """Square root of a series with constant term exactly 1."""
        if self.coeffs[0] != 1:
            raise ValueError("sqrt requires constant term 1")
        one = self._one()
        out = [one]
        for k in range(1, self.order):
            acc = self.coeffs[k]
            for i in range(1, k):
                acc = acc - out[i] * out[k - i]
            out.append(acc / 2)
        return Series(out, self.order)

    def log(self) -> "Series":
        """Logarithm of a series with constant term exactly 1."""
        if self.coeffs[0] != 1:
            raise ValueError("log requires constant term 1")
        if self.order == 1:
            return Series([self._zero()], 1)
        return (self.derivative() / self.truncate(self.order - 1)).integral()

    def exp(self) -> "Series":
        """Exponential of a series with constant term exactly 0."""
        if self.coeffs[0] != 0:
            raise ValueError("exp requires constant term 0")
        one = self._one()
        out = [one]
        for k in range(1, self.order):
            acc = self._zero()
            for j in range(1, k + 1):
                aj = self.coeffs[j]
                if aj:
                    acc = acc + (j * aj) * out[k - j]
            out.append(acc / k)
        return Series(out, self.order)

    def pow_rat(self, e) -> "Series":
        """Power with rational exponent; constant term must be 1."""
        e = _normalize(e)
        return (self.log() * e).exp()

    def pow_param(self, symbol: str = "phi") -> "Series":
        """Formal power: coefficients become polynomials in a parameter.

        Specializing the parameter to any rational value gives the same
        result as :meth:`pow_rat` with that exponent.
        """
        if not self._rational:
            raise ValueError("pow_param needs purely rational coefficients")
        t = ParamPoly.param(symbol)
        scaled = Series([c * t for c in self.log().coeffs], self.order)
        return scaled.exp()

    # -- comparison and display -----------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[:n] == other.coeffs[:n]

    __hash__ = None

    def __repr__(self):
        return f"Series({[str(c) for c in self.coeffs]}, order={self.order})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = str(c)
            if isinstance(c, ParamPoly) and not c.is_constant():
                cs = f"({cs})"
            if k == 0:
                parts.append(cs)
            else:
                xk = "x" if k == 1 else f"x^{k}"
                parts.append(xk if cs == "1" else f"{cs}*{xk}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(x^{self.order})"


# -- named constructors -------------------------------------------------


def zeros(order: int) -> Series:
    return Series((), order)


def one_series(order: int) -> Series:
    return Series([ONE], order)


def x_series(order: int) -> Series:
    return Series([ZERO, ONE], order) if order > 1 else Series([ZERO], 1)


def constant_series(c, order: int) -> Series:
    return Series([_normalize(c)], order)


def geometric(order: int) -> Series:
    """1/(1-x): all coefficients 1."""
    return Series([ONE] * order, order)


def exp_series(order: int) -> Series:
    """e^x: coefficients 1/k!."""
    out, f = [], ONE
    for k in range(order):
        out.append(f)
        f /= k + 1
    return Series(out, order)


def catalan(order: int) -> Series:
    """Catalan number generating function (1 - sqrt(1-4x)) / (2x)."""
    s = Series([1, -4], order + 1).sqrt()
    return (one_series(order + 1) - s).shift_down(1) / 2


def from_coeffs(values, order: int) -> Series:
    """Series from a finite coefficient list, zero beyond the list."""
    vals = [_normalize(v) for v in values]
    if len(vals) > order:
        vals = vals[:order]
    return Series(vals, order)
