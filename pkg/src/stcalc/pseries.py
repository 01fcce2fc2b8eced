"""Truncated formal power series in one named variable over a generic
coefficient ring, plus the deformed derivative operators.

A Series stores coefficients c_0..c_N; N is data, not a type: mixed-order
arithmetic truncates to the shorter operand.  Coefficients live in any
descriptor ring from exactring (Q, Q(q), Q(s,t,...), a quadratic
extension, or another SeriesRing, which is how bivariate objects are
built).  Derivatives shrink the known order by one per application, so a
k-fold derivative of an order-N series is honest to order N-k; callers
padding exact polynomials with zeros lose nothing.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

from .exactring import ExactDivisionError
from .stcore import STContext


class Series:
    """Coefficient list c_0..c_N in ``ring``, in the formal variable ``var``."""

    __slots__ = ("ring", "var", "coeffs", "order")

    def __init__(self, ring: Any, var: str, coeffs: Sequence[Any],
                 order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        zero = ring.zero
        if len(coeffs) < order + 1:
            coeffs = coeffs + [zero] * (order + 1 - len(coeffs))
        else:
            coeffs = coeffs[:order + 1]
        self.ring = ring
        self.var = var
        self.coeffs = coeffs
        self.order = order

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def const(ring: Any, var: str, value: Any, order: int) -> "Series":
        c = ring.coerce(value)
        return Series(ring, var, [c], order)

    @staticmethod
    def gen(ring: Any, var: str, order: int) -> "Series":
        if order < 1:
            raise ValueError("order must be >= 1 to represent the variable")
        return Series(ring, var, [ring.zero, ring.one], order)

    @staticmethod
    def from_function(ring: Any, var: str, f: Callable[[int], Any],
                      order: int) -> "Series":
        return Series(ring, var, [ring.coerce(f(n)) for n in range(order + 1)],
                      order)

    # -- queries ---------------------------------------------------------------

    def __getitem__(self, n: int) -> Any:
        if n < 0 or n > self.order:
            raise IndexError(f"coefficient {n} beyond truncation order "
                             f"{self.order}")
        return self.coeffs[n]

    def constant_term(self) -> Any:
        return self.coeffs[0]

    def valuation_at_least(self, k: int) -> bool:
        zero = self.ring.zero
        return all(self.coeffs[i] == zero for i in range(min(k, self.order + 1)))

    def is_zero(self) -> bool:
        zero = self.ring.zero
        return all(c == zero for c in self.coeffs)

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series(self.ring, self.var, self.coeffs[:order + 1], order)

    # -- arithmetic ---------------------------------------------------------------

    def _coerce_other(self, other: Any):
        if isinstance(other, Series):
            if other.var != self.var:
                raise ValueError(
                    f"series variable mismatch: {self.var!r} vs {other.var!r}")
            return other
        try:
            c = self.ring.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return Series(self.ring, self.var, [c], self.order)

    def __eq__(self, other: object) -> bool:
        # prefix equality on the common known range (joint-truncation view)
        o = self._coerce_other(other)
        if o is NotImplemented:
            return NotImplemented
        n = min(self.order, o.order)
        return self.coeffs[:n + 1] == o.coeffs[:n + 1]

    def __add__(self, other):
        o = self._coerce_other(other)
        if o is NotImplemented:
            return NotImplemented
        n = min(self.order, o.order)
        return Series(self.ring, self.var,
                      [self.coeffs[i] + o.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return Series(self.ring, self.var, [-c for c in self.coeffs],
                      self.order)

    def __sub__(self, other):
        o = self._coerce_other(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce_other(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if not isinstance(other, Series):
            try:
                c = self.ring.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
            return Series(self.ring, self.var, [a * c for a in self.coeffs],
                          self.order)
        o = self._coerce_other(other)
        n = min(self.order, o.order)
        zero = self.ring.zero
        out = [zero] * (n + 1)
        for i, a in enumerate(self.coeffs[:n + 1]):
            if a == zero:
                continue
            for j in range(n + 1 - i):
                b = o.coeffs[j]
                if b == zero:
                    continue
                out[i + j] = out[i + j] + a * b
        return Series(self.ring, self.var, out, n)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Series":
        if k < 0:
            return self.reciprocal() ** (-k)
        result = Series.const(self.ring, self.var, self.ring.one, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def reciprocal(self) -> "Series":
        """Multiplicative inverse; the constant term must be a unit."""
        c0 = self.coeffs[0]
        if c0 == self.ring.zero:
            raise ExactDivisionError(
                "series with zero constant term has no reciprocal")
        inv0 = self.ring.one / c0 if not isinstance(c0, Fraction) else 1 / c0
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = None
            for k in range(1, n + 1):
                term = self.coeffs[k] * out[n - k]
                acc = term if acc is None else acc + term
            out.append(-(inv0 * acc) if acc is not None else self.ring.zero)
        return Series(self.ring, self.var, out, self.order)

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.reciprocal()
        try:
            c = self.ring.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        inv = self.ring.one / c if not isinstance(c, Fraction) else 1 / c
        return self * inv

    # -- structural operators ---------------------------------------------------

    def scale_arg(self, c: Any) -> "Series":
        """f(x) -> f(c x): coefficient c_n picks up c^n."""
        c = self.ring.coerce(c)
        out = []
        power = self.ring.one
        for n, a in enumerate(self.coeffs):
            out.append(a * power if n else a)
            power = power * c
        return Series(self.ring, self.var, out, self.order)

    def shift_up(self, k: int = 1) -> "Series":
        """Multiply by var^k (order kept; the top k coefficients fall off)."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        zero = self.ring.zero
        return Series(self.ring, self.var,
                      [zero] * k + self.coeffs[:self.order + 1 - k], self.order)

    def map_coeffs(self, f: Callable[[Any], Any], ring: Any | None = None,
                   ) -> "Series":
        return Series(ring if ring is not None else self.ring, self.var,
                      [f(c) for c in self.coeffs], self.order)

    def __str__(self) -> str:
        parts = []
        for n, c in enumerate(self.coeffs):
            if c == self.ring.zero:
                continue
            mono = "1" if n == 0 else (self.var if n == 1 else f"{self.var}^{n}")
            cs = str(c)
            if " " in cs or "/" in cs:
                cs = f"({cs})"
            parts.append(cs if n == 0 else (mono if cs == "1" else f"{cs}*{mono}"))
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O({self.var}^{self.order + 1})"

    def __repr__(self) -> str:
        return f"Series({self})"


class SeriesRing:
    """Ring descriptor whose elements are Series; used to nest series
    (an outer Series over a SeriesRing is a bivariate truncated series)."""

    __slots__ = ("coeff_ring", "var", "order", "zero", "one")

    def __init__(self, coeff_ring: Any, var: str, order: int):
        self.coeff_ring = coeff_ring
        self.var = var
        self.order = order
        self.zero = Series(coeff_ring, var, [], order)
        self.one = Series.const(coeff_ring, var, coeff_ring.one, order)

    def coerce(self, v: Any) -> Series:
        if isinstance(v, Series):
            if v.var != self.var:
                raise TypeError(f"series in {v.var!r}, expected {self.var!r}")
            return v
        return Series.const(self.coeff_ring, self.var,
                            self.coeff_ring.coerce(v), self.order)

    def gen_series(self) -> Series:
        return Series.gen(self.coeff_ring, self.var, self.order)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, SeriesRing) and other.var == self.var
                and other.order == self.order
                and other.coeff_ring == self.coeff_ring)

    def __hash__(self) -> int:
        return hash(("SeriesRing", self.var, self.order))

    def __repr__(self) -> str:
        return f"{self.coeff_ring!r}[[{self.var}; O({self.order + 1})]]"


# ---------------------------------------------------------------------------
# constructors and operators
# ---------------------------------------------------------------------------


def geometric(ring: Any, var: str, order: int) -> Series:
    """1/(1-x) = sum x^n."""
    one = ring.one
    return Series(ring, var, [one] * (order + 1), order)


def product_linear(ring: Any, var: str, factors: Iterable[Any],
                   order: int | None = None) -> Series:
    """prod_k (1 - a_k x) as an exact polynomial Series.

    With a_k = q^k this is the q-Pochhammer (x; q)_n; with
    a_k = phi^{n-k} phi'^k it is the conjugate-symmetric product of the
    geometric-derivative theorem.
    """
    fs = [ring.coerce(a) for a in factors]
    n = order if order is not None else max(len(fs), 1)
    out = Series.const(ring, var, ring.one, n)
    for a in fs:
        out = out * Series(ring, var, [ring.one, -a], n)
    return out


def st_derive(sa: Series, ctx: STContext) -> Series:
    """D_{s,t}: coefficient of x^{n-1} becomes [[n]] c_n; order drops by 1.

    Equals (f(phi x) - f(phi' x)) / ((phi - phi') x) computed in the
    quadratic extension; that equivalence is a tested property.
    """
    if sa.order == 0:
        raise ValueError("cannot differentiate an order-0 series")
    out = [ctx.fib(n) * sa.coeffs[n] for n in range(1, sa.order + 1)]
    return Series(sa.ring, sa.var, out, sa.order - 1)


def st_derive_iter(sa: Series, ctx: STContext, k: int) -> Series:
    for _ in range(k):
        sa = st_derive(sa, ctx)
    return sa


def q_derive(sa: Series, q: Any) -> Series:
    """Jackson derivative: coefficient of x^{n-1} becomes [n]_q c_n,
    [n]_q = 1 + q + ... + q^{n-1}; at q = 1 this is the classical f'."""
    if sa.order == 0:
        raise ValueError("cannot differentiate an order-0 series")
    q = sa.ring.coerce(q)
    out = []
    qn = sa.ring.one          # [n]_q accumulator
    qpow = sa.ring.one        # q^{n-1}
    for n in range(1, sa.order + 1):
        out.append(qn * sa.coeffs[n])
        qpow = qpow * q
        qn = qn + qpow
    return Series(sa.ring, sa.var, out, sa.order - 1)


def q_delta(sa: Series, q: Any) -> Series:
    """The scale-q difference operator f -> (f(x) - f(qx))/x: coefficient of
    x^{n-1} becomes (1 - q^n) c_n.  Equals (1-q) times the Jackson form."""
    if sa.order == 0:
        raise ValueError("cannot differentiate an order-0 series")
    q = sa.ring.coerce(q)
    out = []
    qpow = q
    one = sa.ring.one
    for n in range(1, sa.order + 1):
        out.append((one - qpow) * sa.coeffs[n])
        qpow = qpow * q
    return Series(sa.ring, sa.var, out, sa.order - 1)


def q_delta_iter(sa: Series, q: Any, k: int) -> Series:
    for _ in range(k):
        sa = q_delta(sa, q)
    return sa


def st_derive_functional(sa: Series, ctx: STContext) -> Series:
    """(f(phi x) - f(phi' x)) / ((phi - phi') x) evaluated in the quadratic
    extension and projected back; raises if any delta-part survives."""
    ring = ctx.quad_ring()
    lifted = sa.map_coeffs(ring.coerce, ring)
    num = lifted.scale_arg(ctx.phi()) - lifted.scale_arg(ctx.phi_prime())
    out = []
    for n in range(1, sa.order + 1):
        c = num.coeffs[n]
        # dividing by (phi - phi') x = delta * x
        v = c / ring.delta
        if not v.delta_part() == ctx.field.zero:
            raise ExactDivisionError("functional derivative left the base field")
        out.append(v.symmetric_part())
    return Series(sa.ring, sa.var, out, sa.order - 1)
