"""Reference kernels for truncated power-series arithmetic.

Each function operates on plain lists of coefficients of one fixed
truncation length ``n`` (indices 0 .. n-1) and returns a new list of the
same length.  The coefficients may be ``Fraction`` or any exact ring
element supporting ``+``, ``-``, ``*`` and, where required, ``/`` by an
invertible element; ``zero`` supplies the ring's additive identity.

The compiled module ``_fastkernels`` implements the same four routines
for ``Fraction`` coefficients only; ``_backend`` picks between the two
at import time.  Both produce identical results.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)


def mul(a: list, b: list, n: int, zero=ZERO) -> list:
    """Product of two series truncated to length ``n``."""
    out = []
    for k in range(n):
        acc = zero
        for i in range(k + 1):
            ai = a[i]
            if ai:
                acc = acc + ai * b[k - i]
        out.append(acc)
    return out


def div(a: list, b: list, n: int, zero=ZERO) -> list:
    """Quotient ``a / b``; requires an invertible leading coefficient."""
    b0 = b[0]
    if not b0:
        raise ZeroDivisionError("division by a series with zero constant term")
    out = []
    for k in range(n):
        acc = a[k]
        for i in range(1, k + 1):
            bi = b[i]
            if bi:
                acc = acc - bi * out[k - i]
        out.append(acc / b0)
    return out


def compose(a: list, b: list, n: int, zero=ZERO) -> list:
    """Composition ``a(b(x))``; requires ``b[0] == 0``.

    Horner evaluation from the top coefficient down: n series products
    of length n each.
    """
    if b[0]:
        raise ValueError("composition requires an inner series with zero constant term")
    out = [zero] * n
    for k in range(n - 1, -1, -1):
        out = mul(out, b, n, zero)
        out[0] = out[0] + a[k]
    return out


def revert(f: list, n: int, zero=ZERO) -> list:
    """Compositional inverse: the series ``g`` with ``f(g(x)) = x``.

    Requires ``f[0] == 0`` and ``f[1]`` invertible.  Solves the
    triangular system  x = sum_k g_k f(x)^k  coefficient by coefficient
    against precomputed powers of ``f``.
    """
    if f[0]:
        raise ValueError("reversion requires zero constant term")
    f1 = f[1]
    if not f1:
        raise ZeroDivisionError("reversion requires an invertible linear coefficient")
    one = f1 / f1
    # powers[k] = f(x)^k truncated to length n
    powers = [None] * n
    if n > 0:
        p = [zero] * n
        p[0] = one
        for k in range(1, n):
            p = mul(p, f, n, zero)
            powers[k] = p
    out = [zero] * n
    diag = one  # f1 ** m
    for m in range(1, n):
        diag = diag * f1
        acc = one if m == 1 else zero
        for k in range(1, m):
            c = out[k]
            if c:
                acc = acc - c * powers[k][m]
        out[m] = acc / diag
    return out
