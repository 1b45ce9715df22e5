"""Partition expansions for powers of Bell-subgroup series.

Three related engines live here, all driven by partitions of n into odd
parts (a partition is recorded by multiplicities: m_i counts parts of
size 2i+1, with q = sum m_i parts in total and k = sum m_i (i+1)):

* the expansion of [x^n] g^phi in the B-sequence coefficients of
  (1, xg) -- :func:`b_expand` -- and its all-parts analogue
  :func:`a_expand` for the A-sequence;
* the triangle of B-composition polynomials <B> -- rows interpolate
  the powers g^[phi] whose B-function is phi*B(x) -- built entrywise
  by the partition formula (:func:`bcomp_matrix`);
* the convolution-polynomial route: s_n(m) = [x^n] B^m rebuilds the
  same rows (:func:`bcomp_row_from_convolutions`) and generalizes to
  arbitrary powers of g^[phi] (:func:`power_poly`).

Closed forms for the classic cases B = 1/(1-x) (the RNA matrix),
B = 1+x, and B = C(x), plus the descending-diagonal bridge to the
exponential matrix (1, xB)_E, round out the module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd, perm

from .core import RiordanMatrix, from_b_sequence
from .rings import ONE, ZERO, ParamPoly, binomial, falling_factorial
from .series import Series, one_series, x_series
from .triangle import Triangle

PARTITION_N_LIMIT = 80  # counts stay in the tens of thousands here


@dataclass(frozen=True)
class OddPartition:
    """A partition of n into odd parts, stored by multiplicities.

    ``multiplicities[i]`` counts the parts of size 2i+1 (trailing
    zeros stripped).
    """

    multiplicities: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(m * (2 * i + 1) for i, m in enumerate(self.multiplicities))

    @property
    def q(self) -> int:
        """Number of parts."""
        return sum(self.multiplicities)

    @property
    def k(self) -> int:
        """sum m_i (i+1); equals (n + q) / 2."""
        return sum(m * (i + 1) for i, m in enumerate(self.multiplicities))

    def parts(self) -> list[int]:
        out = []
        for i, m in enumerate(self.multiplicities):
            out.extend([2 * i + 1] * m)
        return sorted(out, reverse=True)


def _odd_mult_tuples(n: int) -> list[tuple[int, ...]]:
    """Multiplicity tuples in ascending lexicographic order.

    Enumerates from the largest odd part downward so that part 1 can
    absorb any remainder -- every branch of the recursion produces at
    least one partition.
    """
    if n == 0:
        return [()]
    out: list[tuple[int, ...]] = []

    def rec(rem: int, idx: int, suffix: tuple[int, ...]):
        if idx == 0:
            tup = (rem,) + suffix
            while tup and tup[-1] == 0:
                tup = tup[:-1]
            out.append(tup)
            return
        part = 2 * idx + 1
        for m in range(rem // part, -1, -1):
            rec(rem - m * part, idx - 1, (m,) + suffix)

    rec(n, (n - 1) // 2, ())
    out.sort()
    return out


@lru_cache(maxsize=128)
def _odd_mults_cached(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(_odd_mult_tuples(n))


def odd_partitions(n: int) -> list[OddPartition]:
    """All partitions of n into odd parts, lexicographic on multiplicities."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > PARTITION_N_LIMIT:
        raise ValueError(
            f"partition enumeration is limited to n <= {PARTITION_N_LIMIT}"
        )
    return [OddPartition(t) for t in _odd_mults_cached(n)]


def catalan_number(n: int) -> Fraction:
    return Fraction(comb(2 * n, n), n + 1)


def _b_coeffs(b: Series, need: int) -> list[Fraction]:
    """First ``need`` coefficients of B; the window must cover them."""
    if b.order < need:
        raise ValueError(
            f"B is only known to order {b.order}; need {need} coefficients"
        )
    return list(b.coeffs[:need])


# -- formula engines ----------------------------------------------------


def b_expand(b: Series, n: int, symbol: str = "phi") -> ParamPoly:
    """[x^n] g^phi as a polynomial in phi, from the B-sequence of (1, xg).

    Sums phi (phi+k-1)_{q-1} / (m_0! ... m_p!) * prod b_i^{m_i} over
    the partitions of n into odd parts.
    """
    if n == 0:
        return ParamPoly.const(1, symbol)
    bs = _b_coeffs(b, (n + 1) // 2 if n % 2 else n // 2)
    phi = ParamPoly.param(symbol)
    total = ParamPoly((), symbol)
    for part in odd_partitions(n):
        coeff = ONE
        denom = 1
        for i, m in enumerate(part.multiplicities):
            if m:
                bi = bs[i]
                if not bi:
                    coeff = ZERO
                    break
                coeff *= bi ** m
                denom *= factorial(m)
        if not coeff:
            continue
        poly = phi * falling_factorial(phi + (part.k - 1), part.q - 1)
        total = total + poly * (coeff / denom)
    return total


def b_expand_symbolic(n: int, symbol: str = "phi") -> dict[tuple[int, ...], ParamPoly]:
    """Coefficient polynomial of each monomial prod b_i^{m_i} in b_expand.

    Keys are multiplicity tuples; values are the phi-polynomials
    phi (phi+k-1)_{q-1} / (m_0! ... m_p!).
    """
    phi = ParamPoly.param(symbol)
    out = {}
    for part in odd_partitions(n):
        if not part.multiplicities:  # n = 0: the empty product
            out[()] = ParamPoly.const(1, symbol)
            continue
        denom = 1
        for m in part.multiplicities:
            denom *= factorial(m)
        poly = phi * falling_factorial(phi + (part.k - 1), part.q - 1)
        out[part.multiplicities] = poly / denom
    return out


def _all_partition_mults(n: int):
    """Multiplicity tuples (m_1, ..., m_n) over parts of every size."""

    def rec(rem: int, part: int):
        if part > n:
            if rem == 0:
                yield ()
            return
        for m in range(rem // part + 1):
            for rest in rec(rem - m * part, part + 1):
                yield (m,) + rest

    yield from rec(n, 1)


def a_expand(a: Series, n: int, symbol: str = "phi") -> ParamPoly:
    """[x^n] g^phi from the A-sequence of (1, xg), i.e. g = a(xg).

    Sums phi (phi+n-1)_{q-1} / (m_1! ... m_n!) * prod a_i^{m_i} over
    all partitions of n; requires a(0) = 1.
    """
    if a[0] != 1:
        raise ValueError("a_expand requires an A-series with constant term 1")
    if n == 0:
        return ParamPoly.const(1, symbol)
    acoef = a.pad_zeros(n + 1).coeffs
    phi = ParamPoly.param(symbol)
    total = ParamPoly((), symbol)
    for mults in _all_partition_mults(n):
        coeff = ONE
        denom = 1
        q = 0
        for i, m in enumerate(mults, start=1):
            if m:
                ai = acoef[i]
                if not ai:
                    coeff = ZERO
                    break
                coeff *= ai ** m
                denom *= factorial(m)
                q += m
        if not coeff:
            continue
        poly = phi * falling_factorial(phi + (n - 1), q - 1)
        total = total + poly * (coeff / denom)
    return total


def binomial_series(r: int, order: int) -> Series:
    """The degree-r binomial series: solves B_r = 1 + x B_r^r.

    Coefficient n is binom(rn+1, n)/(rn+1); r = 1 gives the geometric
    series, r = 2 the Catalan series.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    return Series(
        [Fraction(comb(r * n + 1, n), r * n + 1) for n in range(order)], order
    )


def generalized_binomial(r: int, order: int, symbol: str = "phi") -> Series:
    """The power family of the degree-r binomial series.

    Coefficient n is the polynomial phi/(phi+rn) * binom(phi+rn, n) =
    phi (phi+rn-1) ... (phi+rn-n+1) / n!.  At phi = 1 this gives the
    Fuss-Catalan-type series (r = 1: geometric, r = 2: Catalan).
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    phi = ParamPoly.param(symbol)
    out = [ParamPoly.const(1, symbol)]
    for n in range(1, order):
        poly = phi * falling_factorial(phi + (r * n - 1), n - 1)
        out.append(poly / factorial(n))
    return Series(out, order)


# -- B-composition matrices ---------------------------------------------


@dataclass(frozen=True)
class BCompMatrix:
    """Triangle whose row n interpolates [x^n] g^[phi].

    g^[phi] solves g = 1 + x g * phi B(x^2 g); entry (n, m) is zero
    when n - m is odd, and column 1 carries x B(x^2).
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


def _bcomp_row(bs: list[Fraction], n: int) -> list[Fraction]:
    """Row n of <B> by the partition formula.

    The inner loop runs over every partition of n into odd parts, so it
    works on raw integer numerator/denominator pairs and normalizes
    once per entry.
    """
    if n == 0:
        return [ONE]
    pairs = [(b.numerator, b.denominator) for b in bs]
    by_q: dict[int, tuple[int, int]] = {}
    for mults in _odd_mults_cached(n):
        num = 1
        den = 1
        q = 0
        for i, m in enumerate(mults):
            if m:
                bn, bd = pairs[i]
                if not bn:
                    num = 0
                    break
                num *= bn ** m
                den *= bd ** m * factorial(m)
                q += m
        if not num:
            continue
        acc = by_q.get(q)
        if acc is None:
            by_q[q] = (num, den)
        else:
            an, ad = acc
            g = gcd(ad, den)
            by_q[q] = (an * (den // g) + num * (ad // g), ad * (den // g))
    row = [ZERO] * (n + 1)
    for q, (num, den) in by_q.items():
        k = (n + q) // 2
        row[q] = Fraction(perm(k, q - 1) * num, den)
    return row


def bcomp_matrix(b: Series, order: int) -> BCompMatrix:
    """The B-composition matrix <B> with ``order`` rows."""
    top = order - 1
    need = (top + 1) // 2 if top % 2 else top // 2
    bs = _b_coeffs(b, max(need, 1))
    rows = [_bcomp_row(bs, n) for n in range(order)]
    return BCompMatrix(Triangle(rows), b)


# -- closed forms: RNA, 1+x, C(x) ---------------------------------------


def narayana(n: int, symbol: str = "x") -> ParamPoly:
    """Narayana polynomial: N_0 = 1, N_n = (1/n) sum binom(n,m-1) binom(n,m) x^m."""
    if n == 0:
        return ParamPoly.const(1, symbol)
    coeffs = [
        Fraction(comb(n, m - 1) * comb(n, m), n) if m >= 1 else ZERO
        for m in range(n + 1)
    ]
    return ParamPoly(coeffs, symbol)


def narayana_triangle(order: int) -> Triangle:
    """Rows are the coefficients of the Narayana polynomials."""
    rows = []
    for n in range(order):
        cs = list(narayana(n).coeffs)
        rows.append(cs + [ZERO] * (n + 1 - len(cs)))
    return Triangle(rows)


def rna_row_closed(n: int, symbol: str = "x") -> ParamPoly:
    """Closed form for row n of <1/(1-x)> (the RNA composition matrix)."""
    coeffs = [ZERO] * (n + 1)
    if n == 0:
        return ParamPoly.const(1, symbol)
    if n % 2 == 0:
        h = n // 2
        for m in range(1, h + 1):
            coeffs[2 * m] = Fraction(
                comb(h + m, 2 * m - 1) * comb(h + m, 2 * m), h + m
            )
    else:
        h = (n - 1) // 2
        for m in range(h + 1):
            coeffs[2 * m + 1] = Fraction(
                comb(h + m + 1, 2 * m) * comb(h + m + 1, 2 * m + 1), h + m + 1
            )
    return ParamPoly(coeffs, symbol)


def bcomp_entry_one_plus_x(n: int, m: int) -> Fraction:
    """Entry (n, m) of <1+x>: C_{(n-m)/2} * binom((n+m)/2, (3m-n)/2)."""
    if n == m == 0:
        return ONE
    if m < 0 or m > n or (n - m) % 2:
        return ZERO
    j = (n - m) // 2
    t = (3 * m - n) // 2
    if t < 0:
        return ZERO
    return catalan_number(j) * binomial((n + m) // 2, t)


def bcomp_entry_catalan(n: int, m: int) -> Fraction:
    """Entry (n, m) of <C(x)>: C_{(n-m)/2} * binom(n-1, m-1)."""
    if n == m == 0:
        return ONE
    if m < 1 or m > n or (n - m) % 2:
        return ZERO
    return catalan_number((n - m) // 2) * binomial(n - 1, m - 1)


def dissection_poly(n: int, symbol: str = "x") -> ParamPoly:
    """Polygon-dissection polynomial:
    T_n = (1/(n+1)) sum binom(n+1, m+1) binom(n+m+2, m) x^m."""
    coeffs = [
        Fraction(comb(n + 1, m + 1) * comb(n + m + 2, m), n + 1)
        for m in range(n + 1)
    ]
    return ParamPoly(coeffs, symbol)


def dissection_matrix(order: int) -> Triangle:
    """The triangle whose column n+1 is x^{n+1} (1+x) T_n(x).

    Rows F_n of this triangle reproduce rows of <C(x)> via
    row n+1 of <C> = F_n(x^2) / x^{n-1}.
    """
    cols = [[ONE] + [ZERO] * (order - 1)]
    for m in range(1, order):
        t = dissection_poly(m - 1).coeffs
        col = [ZERO] * order
        for j, c in enumerate(t):
            if m + j < order:
                col[m + j] += c
            if m + j + 1 < order:
                col[m + j + 1] += c
        cols.append(col)
    rows = [[cols[m][i] for m in range(i + 1)] for i in range(order)]
    return Triangle(rows)


# -- convolution-polynomial route ---------------------------------------


def _power_table(b: Series, jmax: int, mmax: int) -> list[list[Fraction]]:
    """table[m][j] = [x^j] B^m for 0 <= j <= jmax, 0 <= m <= mmax."""
    base = b.pad_zeros(jmax + 1) if b.order <= jmax else b.truncate(jmax + 1)
    table = [[ONE] + [ZERO] * jmax]
    p = one_series(jmax + 1)
    for _ in range(mmax):
        p = p * base
        table.append(list(p.coeffs))
    return table


def convolution_rows(b: Series, order: int) -> Triangle:
    """Triangle of convolution polynomials: row n holds the coefficients
    of s_n(t) with B^t = sum s_n(t) x^n, from the parametric power."""
    if b[0] != 1:
        raise ValueError("convolution rows need B with constant term 1")
    p = b.truncate(order).pow_param("t") if b.order >= order else b.pad_zeros(order).pow_param("t")
    rows = []
    for n in range(order):
        cs = list(p[n].coeffs) if isinstance(p[n], ParamPoly) else [p[n]]
        rows.append(cs + [ZERO] * (n + 1 - len(cs)))
    return Triangle(rows)


def bcomp_row_from_convolutions(b: Series, n: int, symbol: str = "x") -> ParamPoly:
    """Row n of <B> rebuilt through s_j(m) = [x^j] B^m."""
    if n == 0:
        return ParamPoly.const(1, symbol)
    table = _power_table(b, n // 2, n)
    coeffs = [ZERO] * (n + 1)
    for m in range(1, n + 1):
        if (n - m) % 2:
            continue
        j = (n - m) // 2
        s = table[m][j]
        if s:
            k = (n + m) // 2
            coeffs[m] = falling_factorial(Fraction(k), m - 1) * s / factorial(m)
    return ParamPoly(coeffs, symbol)


def power_poly(b: Series, n: int, phi=1, symbol: str = "beta") -> ParamPoly:
    """[x^n] (g^[phi])^beta as a polynomial in beta, phi specialized.

    g^[phi] is the series whose B-function is phi*B; the coefficient of
    x^n in its beta-th power is
    sum_m beta (beta+(n+m)/2-1)_{m-1} s_{(n-m)/2}(m)/m! phi^m.
    """
    if n == 0:
        return ParamPoly.const(1, symbol)
    phi = Fraction(phi) if isinstance(phi, int) else phi
    table = _power_table(b, n // 2, n)
    beta = ParamPoly.param(symbol)
    total = ParamPoly((), symbol)
    pw = phi
    for m in range(1, n + 1):
        if (n - m) % 2 == 0:
            j = (n - m) // 2
            s = table[m][j]
            if s:
                k = Fraction(n + m, 2)
                poly = beta * falling_factorial(beta + (k - 1), m - 1)
                total = total + poly * (s * pw / factorial(m))
        pw *= phi
    return total


def exp_lagrange_diagonal(b: Series, n: int, order: int) -> Series:
    """Descending diagonal n of the exponential matrix (1, xB(x))_E.

    Entry m of the result is (n+m)!/m! * [x^n] B^m.
    """
    table = _power_table(b, n, order - 1)
    out = []
    for m in range(order):
        out.append(Fraction(factorial(n + m), factorial(m)) * table[m][n])
    return Series(out, order)


def is_appell_type(b: Series, order: int) -> bool:
    """Whether shifting <B> one step down the diagonal yields the
    exponential Appell matrix of B-tilde(x) = sum b_n x^{2n} / (2n)!.

    Concretely: <B>(n+1, m+1) == binom(n, m) * b_{(n-m)/2} for all
    n, m in the window (odd n-m entries vanish automatically).
    Requires b_0 = 1; true only when b_n = C_n b_1^n.
    """
    if b[0] != 1:
        raise ValueError("Appell-type check requires b_0 = 1")
    mat = bcomp_matrix(b, order)
    need = (order - 2) // 2 + 1
    bs = _b_coeffs(b, need)
    for n in range(order - 1):
        for m in range(n + 1):
            if (n - m) % 2:
                expected = ZERO
            else:
                expected = binomial(n, m) * bs[(n - m) // 2]
            if mat.entry(n + 1, m + 1) != expected:
                return False
    return True


def rna_series(order: int, beta=1, phi=1) -> Series:
    """The power family of the RNA series, by its closed form.

    Solves g = 1 + x g phi/(1 - beta x^2 g); beta = 0 degenerates to
    the geometric series in phi*x (handled by the B-function route).
    """
    beta = Fraction(beta) if isinstance(beta, int) else beta
    phi = Fraction(phi) if isinstance(phi, int) else phi
    if not beta:
        return from_b_sequence(Series([phi], 1), order).g
    poly = Series([1, -phi, beta], order + 2)
    disc = poly * poly - Series([ZERO, ZERO, 4 * beta], order + 2)
    num = poly - disc.sqrt()
    return num.shift_down(2) / (2 * beta)
