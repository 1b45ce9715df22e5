"""Logarithms and parametric powers of Bell-pair matrices (g, xg).

For g with g(0) = 1 the matrix (g, xg) has a unit diagonal, so
(g, xg) - I is nilpotent at any finite truncation and the logarithm is
a terminating sum.  Powers with arbitrary (even formal) exponents come
from exponentiating a scaled logarithm; the columns of the resulting
generating matrix are (1/n!) log^n applied to the unit column, and its
rows, read as polynomials, interpolate the coefficients of g^(phi).

The logarithm factors as (b(x), x) D^T for a generator series b(x);
the closed composition-sum formula rebuilds the row polynomials from
b alone.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .core import ConsistencyError, RiordanMatrix
from .rings import ONE, ParamPoly
from .series import Series
from .triangle import Triangle

COMPOSITION_N_LIMIT = 24  # 2^(n-1) compositions; documented practical ceiling


def _prepare(g: Series, order: int | None) -> Series:
    if order is not None:
        if order > g.order:
            raise ValueError(
                f"g is only known to order {g.order}, cannot use {order}"
            )
        g = g.truncate(order)
    if g[0] != 1:
        raise ValueError("requires g with constant term 1")
    return g


def bell_log(g: Series, order: int | None = None) -> Triangle:
    """Matrix logarithm of (g, xg) via the nilpotent power series."""
    g = _prepare(g, order)
    n = g.order
    tri = RiordanMatrix(g, g).triangle()
    k = tri.add(Triangle.identity(n).scale(-1))
    acc = k
    term = k
    for p in range(2, n):
        term = term.matmul(k)
        if term.is_zero():
            break
        acc = acc.add(term.scale(Fraction((-1) ** (p - 1), p)))
    return acc


def triangle_exp(tri: Triangle) -> Triangle:
    """Matrix exponential of a strictly lower-triangular array."""
    n = tri.nrows
    acc = Triangle.identity(n)
    term = Triangle.identity(n)
    for p in range(1, n):
        term = term.matmul(tri)
        if term.is_zero():
            break
        acc = acc.add(term.scale(Fraction(1, factorial(p))))
    return acc


@dataclass(frozen=True)
class CompositionMatrix:
    """Rows are the composition polynomials of the source series.

    Column n of ``triangle`` holds (1/n!) log(g, xg)^n applied to the
    unit column; row n read as a polynomial c_n satisfies
    sum_n c_n(phi) x^n = bell_power(g, phi).
    """

    triangle: Triangle
    source: Series

    def entry(self, n: int, m: int):
        return self.triangle.entry(n, m)

    def row_poly(self, n: int, symbol: str = "x") -> ParamPoly:
        return self.triangle.row_poly(n, symbol)

    @property
    def nrows(self) -> int:
        return self.triangle.nrows


def composition_matrix(
    g: Series, order: int | None = None, method: str = "definition"
) -> CompositionMatrix:
    """The matrix of composition polynomials of g.

    ``method="definition"`` builds columns from powers of the matrix
    logarithm; ``method="recurrence"`` rebuilds column n from column
    n-1 via  col_n = (1/n) b(x) D^T col_{n-1}  with D^T: x^k -> (k+1)
    x^{k+1}.  Both agree entrywise.
    """
    g = _prepare(g, order)
    n = g.order
    if method == "definition":
        log = bell_log(g)
        cols = []
        v = [ONE] + [Fraction(0)] * (n - 1)
        cols.append(v)
        for m in range(1, n):
            v = [c / m for c in log.apply_vec(v)]
            cols.append(v)
    elif method == "recurrence":
        b = log_generator(g)
        col = Series([ONE], n)
        cols = [list(col.coeffs)]
        for m in range(1, n):
            up = Series(
                [Fraction(0)]
                + [(k + 1) * col.coeffs[k] for k in range(n - 1)],
                n,
            )
            col = (b.pad_zeros(n) * up) / m
            cols.append(list(col.coeffs))
    else:
        raise ValueError(f"unknown method {method!r}")
    rows = [[cols[m][i] for m in range(i + 1)] for i in range(n)]
    return CompositionMatrix(Triangle(rows), g)


def log_generator(g: Series, order: int | None = None) -> Series:
    """The series b with log(g, xg) = (b(x), x) D^T.

    Computed as column 0 of the logarithm divided by x, then verified:
    b(0) must equal g'(0), and b must satisfy
    g(x)^2 b(xg(x)) = b(x) (xg(x))'.
    """
    g = _prepare(g, order)
    n = g.order
    log = bell_log(g)
    b = log.column(0).shift_down(1)
    if n >= 2 and b[0] != g[1]:
        raise ConsistencyError("log generator: b(0) != g'(0)")
    if n >= 3:
        m = b.order  # n - 1
        xg = g.truncate(m).shift_up(1, extend=True)
        lhs = g.truncate(m) ** 2 * b.compose(xg)
        rhs = b * xg.derivative()
        if lhs != rhs:
            raise ConsistencyError(
                "log generator fails g^2 b(xg) = b (xg)'"
            )
    return b


def bell_power(g: Series, phi, order: int | None = None) -> Series:
    """The series g^(phi) with (g, xg)^phi = (g^(phi), x g^(phi)).

    ``phi`` may be an exact rational or a symbol name (str), in which
    case coefficients are polynomials in that parameter.
    """
    cm = composition_matrix(g, order)
    tri = cm.triangle
    n = tri.nrows
    if isinstance(phi, str):
        return Series([ParamPoly(tri.row(i), phi) for i in range(n)], n)
    phi = Fraction(phi) if isinstance(phi, int) else phi
    return Series(
        [ParamPoly(tri.row(i), "phi")(phi) for i in range(n)], n
    )


def _compositions(n: int, parts: tuple[int, ...]):
    """Ordered compositions of n from the allowed part sizes."""
    if n == 0:
        yield ()
        return
    for p in parts:
        if p <= n:
            for rest in _compositions(n - p, parts):
                yield (p,) + rest


def composition_sum(
    b: Series, n: int, symbol: str = "phi", beta=1
) -> ParamPoly:
    """Closed composition-sum formula for [x^n] (g^(phi))^beta.

    Sums over ordered compositions n = i_1 + ... + i_m the product
    b_{i_1-1} ... b_{i_m-1} with the rising prefix factors
    beta (beta+i_1) (beta+i_1+i_2) ... ; the phi^m weight is 1/m!.
    With beta = 1 this is the composition polynomial c_n(phi).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > COMPOSITION_N_LIMIT:
        raise ValueError(
            f"composition enumeration is limited to n <= {COMPOSITION_N_LIMIT}"
        )
    beta = Fraction(beta) if isinstance(beta, int) else beta
    if n == 0:
        return ParamPoly.const(1, symbol)
    if b.order < n:
        raise ValueError(f"b needs order >= {n}, has {b.order}")
    parts = tuple(p for p in range(1, n + 1) if b[p - 1])
    by_m: dict[int, Fraction] = defaultdict(lambda: Fraction(0))
    for comp in _compositions(n, parts):
        prod = beta
        partial = 0
        for part in comp[:-1]:
            partial += part
            prod *= beta + partial
        for part in comp:
            prod *= b[part - 1]
        by_m[len(comp)] += prod
    top = max(by_m)
    return ParamPoly(
        [by_m.get(m, Fraction(0)) / factorial(m) for m in range(top + 1)],
        symbol,
    )
