"""q-shifted factorials, Gaussian binomials, Rogers-Szego polynomials, and
the q-exponential operator, over exact scalar rings.

The scalar q may be a Fraction or any exact ring element (rational function,
quadratic-extension element).  Everything here is a finite sum or a truncated
series; nothing floats.
"""

from __future__ import annotations

from typing import Any

from .exactring import ExactDivisionError
from .pseries import Series
from .stcore import binom2


def _is_zero_scalar(v: Any) -> bool:
    z = getattr(v, "is_zero", None)
    if z is not None:
        return z() if callable(z) else bool(z)
    return v == 0


class QCalc:
    """Memo table for powers of q, (q;q)_n, [n]_q and Gaussian binomials.

    Gaussian binomials come from the (q;q)-ratio, which is an independent
    route from the Fibonomial falling product at (s,t)=(1+q,-q); the test
    suite plays the two against each other.
    """

    def __init__(self, q: Any):
        self.q = q
        self.one = q ** 0
        self.zero = self.one - self.one
        self._qpow = [self.one]
        self._qfact = [self.one]
        self._qint = [self.zero]
        self._binom: dict[tuple[int, int], Any] = {}

    def qpow(self, n: int) -> Any:
        if n < 0:
            return self.q ** n
        cache = self._qpow
        while len(cache) <= n:
            cache.append(cache[-1] * self.q)
        return cache[n]

    def qfact(self, n: int) -> Any:
        """(q;q)_n."""
        if n < 0:
            raise ValueError("(q;q)_n needs n >= 0")
        cache = self._qfact
        while len(cache) <= n:
            j = len(cache)
            cache.append(cache[-1] * (self.one - self.qpow(j)))
        return cache[n]

    def qint(self, n: int) -> Any:
        """[n]_q = 1 + q + ... + q^(n-1)."""
        if n < 0:
            raise ValueError("[n]_q needs n >= 0 here")
        cache = self._qint
        while len(cache) <= n:
            cache.append(cache[-1] + self.qpow(len(cache) - 1))
        return cache[n]

    def qint_fact(self, n: int) -> Any:
        """[n]_q! = [1]_q [2]_q ... [n]_q."""
        acc = self.one
        for j in range(2, n + 1):
            acc = acc * self.qint(j)
        return acc

    def qbinom(self, n: int, k: int) -> Any:
        if k < 0:
            return self.zero
        key = (n, k)
        hit = self._binom.get(key)
        if hit is not None:
            return hit
        if n >= 0:
            if k > n:
                val = self.zero
            else:
                val = self.qfact(n) / (self.qfact(k) * self.qfact(n - k))
        else:
            # [n k] = (-1)^k q^(nk - C(k,2)) [k-n-1 k], exponent may be negative
            sign = -self.one if k % 2 else self.one
            val = sign * (self.q ** (n * k - binom2(k))) * self.qbinom(k - n - 1, k)
        self._binom[key] = val
        return val


def _as_qcalc(q: Any) -> QCalc:
    return q if isinstance(q, QCalc) else QCalc(q)


def q_binom(n: int, k: int, q: Any) -> Any:
    """Gaussian binomial [n k]_q, any integer n."""
    return _as_qcalc(q).qbinom(n, k)


def _one_like(a: Any) -> Any:
    # a*0 + 1 lands in the container of `a` (Series stays Series)
    return a * 0 + 1


def q_pochhammer(a: Any, q: Any, n: int) -> Any:
    """(a;q)_n = prod_{j=0}^{n-1} (1 - a q^j).

    `a` may be a scalar or a Series; `q` a scalar or a QCalc.
    """
    if n < 0:
        raise ValueError("q_pochhammer needs n >= 0")
    qc = _as_qcalc(q)
    acc = _one_like(a)
    for j in range(n):
        acc = acc * (-(a * qc.qpow(j)) + 1)
    return acc


def qpoch_inf(z: Series, q: Any) -> Series:
    """(z;q)_inf truncated at the order of z.

    Requires z to have zero constant term, so z^m dies off and the Euler sum
    is finite at any truncation order.
    """
    if not z.valuation_at_least(1):
        raise ValueError("qpoch_inf needs a series with zero constant term")
    qc = _as_qcalc(q)
    acc = _one_like(z)
    zm = acc
    for m in range(1, z.order + 1):
        zm = zm * z
        c = qc.qpow(binom2(m)) / qc.qfact(m)
        if m % 2:
            c = -c
        acc = acc + zm * c
    return acc


def qpoch_inf_recip(z: Series, q: Any) -> Series:
    """1/(z;q)_inf truncated at the order of z, by Euler's sum."""
    if not z.valuation_at_least(1):
        raise ValueError("qpoch_inf_recip needs a series with zero constant term")
    qc = _as_qcalc(q)
    acc = _one_like(z)
    zm = acc
    for m in range(1, z.order + 1):
        zm = zm * z
        acc = acc + zm * (qc.one / qc.qfact(m))
    return acc


def rogers_szego_r(n: int, b: Any, x: Any, q: Any) -> Any:
    """r_n(x,b;q) = sum_k [n k]_q b^(n-k) x^k."""
    if n < 0:
        raise ValueError("rogers_szego_r needs n >= 0")
    qc = _as_qcalc(q)
    acc = None
    for k in range(n + 1):
        term = qc.qbinom(n, k) * (b ** (n - k)) * (x ** k)
        acc = term if acc is None else acc + term
    return acc


def rogers_szego_h(n: int, x: Any, q: Any) -> Any:
    """h_n(x;q) = sum_k [n k]_q x^k."""
    if n < 0:
        raise ValueError("rogers_szego_h needs n >= 0")
    qc = _as_qcalc(q)
    acc = None
    for k in range(n + 1):
        term = qc.qbinom(n, k) * (x ** k)
        acc = term if acc is None else acc + term
    return acc


def q_exp_operator(b: Any, f: Series, q: Any) -> Series:
    """Apply T(b D_q) = sum_n (b D_q)^n / (q;q)_n to a truncated series.

    D_q g(x) = (g(x) - g(qx))/x, so coefficientwise
    (D_q^m f)_k = ((q;q)_{k+m}/(q;q)_k) f_{k+m} and the operator collapses to

        result_k = sum_{m=0}^{N-k} [k+m m]_q b^m f_{k+m},

    exact to the full order N of f.  `b` is a scalar in the coefficient ring.
    """
    qc = _as_qcalc(q)
    n = f.order
    coeffs = []
    for k in range(n + 1):
        acc = f[k] * qc.one
        bm = qc.one
        for m in range(1, n - k + 1):
            bm = bm * b
            acc = acc + qc.qbinom(k + m, m) * bm * f[k + m]
        coeffs.append(acc)
    return Series(f.ring, f.var, coeffs, n)


def _ratio(a: Any, b: Any) -> Any:
    # a/b where b may be a Series (no __rtruediv__) or a scalar
    if isinstance(b, Series):
        r = b.reciprocal()
        return a * r if isinstance(a, Series) else r * a
    return a / b


def phi21_truncated(a1: Any, a2: Any, b1: Any, q: Any, z: Any, n_max: int) -> Any:
    """Partial sum of 2phi1(a1,a2; b1; q, z) through z^n_max.

    The arguments may be scalars or Series (the lower parameter often
    carries the series variable).  Raises ExactDivisionError naming the
    offending index if (q;q)_n or a scalar (b1;q)_n vanishes along the way.
    """
    qc = _as_qcalc(q)
    acc = None
    zn = _one_like(z)
    for n in range(n_max + 1):
        den = qc.qfact(n) * q_pochhammer(b1, qc, n)
        if not isinstance(den, Series) and _is_zero_scalar(den):
            raise ExactDivisionError(
                f"2phi1 denominator vanishes at term n={n}")
        num = q_pochhammer(a1, qc, n) * q_pochhammer(a2, qc, n)
        if n:
            zn = zn * z
        term = _ratio(zn * num, den)
        acc = term if acc is None else acc + term
    return acc
