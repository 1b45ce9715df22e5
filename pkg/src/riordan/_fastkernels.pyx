# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled kernels for truncated power-series arithmetic.

Drop-in twin of ``_purekernels``: same four routines, same semantics,
same results.  The speedup comes from working on raw integer
numerator/denominator pairs when every coefficient is a ``Fraction``
(one normalization per output entry instead of one per ring
operation), with an all-integer convolution path when the inputs have
denominator 1.  Non-Fraction coefficients (parametric polynomials)
fall back to generic object arithmetic in compiled loops.
"""

from fractions import Fraction

from math import gcd

ZERO = Fraction(0)

cdef object _FRACTION = Fraction


cdef bint _all_fractions(list a, Py_ssize_t n):
    cdef Py_ssize_t i
    for i in range(n):
        if type(a[i]) is not _FRACTION:
            return False
    return True


cdef tuple _split(list a, Py_ssize_t n):
    """Numerator list, denominator list, and whether all dens are 1."""
    cdef list nums = [], dens = []
    cdef bint integral = True
    cdef Py_ssize_t i
    cdef object c, d
    for i in range(n):
        c = a[i]
        nums.append(c.numerator)
        d = c.denominator
        dens.append(d)
        if d != 1:
            integral = False
    return nums, dens, integral


cdef list _mul_int(list anum, list bnum, Py_ssize_t n):
    cdef list out = []
    cdef Py_ssize_t k, i
    cdef object acc, ai
    for k in range(n):
        acc = 0
        for i in range(k + 1):
            ai = anum[i]
            if ai:
                acc = acc + ai * bnum[k - i]
        out.append(_FRACTION(acc))
    return out


cdef list _mul_rat(list anum, list aden, list bnum, list bden, Py_ssize_t n):
    cdef list out = []
    cdef Py_ssize_t k, i
    cdef object accn, accd, tn, td, g
    for k in range(n):
        accn, accd = 0, 1
        for i in range(k + 1):
            tn = anum[i]
            if tn:
                tn = tn * bnum[k - i]
                td = aden[i] * bden[k - i]
                g = gcd(accd, td)
                accn = accn * (td // g) + tn * (accd // g)
                accd = accd * (td // g)
        out.append(_FRACTION(accn, accd))
    return out


cdef list _mul_obj(list a, list b, Py_ssize_t n, object zero):
    cdef list out = []
    cdef Py_ssize_t k, i
    cdef object acc, ai
    for k in range(n):
        acc = zero
        for i in range(k + 1):
            ai = a[i]
            if ai:
                acc = acc + ai * b[k - i]
        out.append(acc)
    return out


cdef list _mul_impl(list a, list b, Py_ssize_t n, object zero):
    cdef list anum, aden, bnum, bden
    cdef bint aint, bint_
    if _all_fractions(a, n) and _all_fractions(b, n):
        anum, aden, aint = _split(a, n)
        bnum, bden, bint_ = _split(b, n)
        if aint and bint_:
            return _mul_int(anum, bnum, n)
        return _mul_rat(anum, aden, bnum, bden, n)
    return _mul_obj(a, b, n, zero)


def mul(a, b, n, zero=ZERO):
    """Product of two series truncated to length ``n``."""
    return _mul_impl(list(a), list(b), n, zero)


def div(a, b, n, zero=ZERO):
    """Quotient ``a / b``; requires an invertible leading coefficient."""
    cdef list la = list(a), lb = list(b)
    cdef Py_ssize_t nn = n, k, i
    cdef object b0 = lb[0]
    if not b0:
        raise ZeroDivisionError("division by a series with zero constant term")
    cdef list out, qnum, qden, bnum, bden
    cdef object acc, bi, accn, accd, tn, td, g, q
    if _all_fractions(la, nn) and _all_fractions(lb, nn):
        bnum, bden, _ = _split(lb, nn)
        out = []
        qnum = []
        qden = []
        for k in range(nn):
            accn = (<object> la[k]).numerator
            accd = (<object> la[k]).denominator
            for i in range(1, k + 1):
                tn = bnum[i]
                if tn:
                    tn = tn * qnum[k - i]
                    td = bden[i] * qden[k - i]
                    g = gcd(accd, td)
                    accn = accn * (td // g) - tn * (accd // g)
                    accd = accd * (td // g)
            q = _FRACTION(accn * bden[0], accd * bnum[0])
            out.append(q)
            qnum.append(q.numerator)
            qden.append(q.denominator)
        return out
    out = []
    for k in range(nn):
        acc = la[k]
        for i in range(1, k + 1):
            bi = lb[i]
            if bi:
                acc = acc - bi * out[k - i]
        out.append(acc / b0)
    return out


def compose(a, b, n, zero=ZERO):
    """Composition ``a(b(x))``; requires ``b[0] == 0``."""
    cdef list la = list(a), lb = list(b)
    cdef Py_ssize_t nn = n, k
    if lb[0]:
        raise ValueError("composition requires an inner series with zero constant term")
    cdef list out = [zero] * nn
    for k in range(nn - 1, -1, -1):
        out = _mul_impl(out, lb, nn, zero)
        out[0] = out[0] + la[k]
    return out


def revert(f, n, zero=ZERO):
    """Compositional inverse: the series ``g`` with ``f(g(x)) = x``."""
    cdef list lf = list(f)
    cdef Py_ssize_t nn = n, k, m
    if lf[0]:
        raise ValueError("reversion requires zero constant term")
    cdef object f1 = lf[1]
    if not f1:
        raise ZeroDivisionError("reversion requires an invertible linear coefficient")
    cdef object one = f1 / f1
    cdef list powers = [None] * nn
    cdef list p
    if nn > 0:
        p = [zero] * nn
        p[0] = one
        for k in range(1, nn):
            p = _mul_impl(p, lf, nn, zero)
            powers[k] = p
    cdef list out = [zero] * nn
    cdef object diag = one, acc, c
    for m in range(1, nn):
        diag = diag * f1
        acc = one if m == 1 else zero
        for k in range(1, m):
            c = out[k]
            if c:
                acc = acc - c * (<list> powers[k])[m]
        out[m] = acc / diag
    return out
