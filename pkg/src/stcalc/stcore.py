"""Generalized Fibonacci polynomials [[n]], (s,t)-factorials and binomials
(negative upper index included), simplicial d-polytopic numbers, and the
named specializations of the parameter pair (s, t).

The pair (s, t) may be symbolic (elements of Q(s,t, ...)), numeric
(Fractions), or live in any field descriptor from exactring; everything
here is written against that generic interface.  [[n+2]] = s[[n+1]] + t[[n]]
with [[0]] = 0, [[1]] = 1, and [[-m]] = -(-t)^{-m} [[m]].
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Any

from .exactring import (
    QQ,
    ExactDivisionError,
    FracField,
    Poly,
    PolyRing,
    QuadExt,
    QuadExtRing,
    RatFunc,
    as_fraction,
)


def binom2(m: int) -> int:
    """C(m, 2) = m(m-1)/2, valid for negative m as well."""
    return m * (m - 1) // 2


class STContext:
    """A choice of (s, t) in some exact field, with memoized derived values.

    phi_pair may be supplied when the discriminant s^2+4t is a perfect
    square in the field (e.g. (1, q) at (s,t) = (1+q, -q)); otherwise phi
    and phi' live in the quadratic extension returned by quad_ring().
    Memo tables sit behind a lock so contexts can be shared across threads.
    """

    def __init__(self, field: Any, s: Any, t: Any, *, name: str = "",
                 symbolic: bool = False,
                 phi_pair: tuple[Any, Any] | None = None):
        self.field = field
        self.s = field.coerce(s)
        self.t = field.coerce(t)
        self.name = name
        self.symbolic = symbolic
        self.phi_pair = phi_pair
        self._lock = threading.Lock()
        self._fib: dict[int, Any] = {0: field.zero, 1: field.one}
        self._fib_fact: list[Any] = [field.one]
        self._binom: dict[tuple[int, int], Any] = {}
        self._quad: QuadExtRing | None = None

    # -- basic structure -----------------------------------------------------

    @property
    def discriminant(self) -> Any:
        return self.s * self.s + 4 * self.t

    @property
    def degenerate(self) -> bool:
        return self.discriminant == self.field.zero

    def quad_ring(self) -> QuadExtRing:
        """Field extension containing phi and phi'; refused when degenerate."""
        if self._quad is None:
            if self.degenerate:
                raise ExactDivisionError(
                    "s^2+4t = 0: the quadratic extension is not constructed "
                    "for degenerate specializations")
            self._quad = QuadExtRing(self.field, self.discriminant)
        return self._quad

    def phi(self) -> Any:
        """(s + delta)/2, the root of X^2 - sX - t with + sign."""
        if self.phi_pair is not None:
            return self.phi_pair[0]
        ring = self.quad_ring()
        half = Fraction(1, 2)
        return QuadExt(ring, self.s * half, self.field.one * half)

    def phi_prime(self) -> Any:
        """(s - delta)/2 = conj(phi); phi * phi' = -t and phi + phi' = s."""
        if self.phi_pair is not None:
            return self.phi_pair[1]
        ring = self.quad_ring()
        half = Fraction(1, 2)
        return QuadExt(ring, self.s * half, -(self.field.one * half))

    def embed_quad(self, x: Any) -> Any:
        """Coerce a field element alongside phi (identity when phi is exact)."""
        if self.phi_pair is not None:
            return self.field.coerce(x)
        return self.quad_ring().coerce(x)

    # -- Fibonacci tower -------------------------------------------------------

    def fib(self, n: int) -> Any:
        """[[n]] for any integer n; negative index by [[-m]] = -(-t)^{-m}[[m]]."""
        with self._lock:
            v = self._fib.get(n)
            if v is not None:
                return v
            if n >= 0:
                top = max(k for k in self._fib if k >= 0)
                a, b = self._fib[top - 1] if top >= 1 else self.field.zero, \
                    self._fib[top]
                while top < n:
                    a, b = b, self.s * b + self.t * a
                    top += 1
                    self._fib[top] = b
                return self._fib[n]
        m = -n
        v = -((-self.t) ** (-m)) * self.fib(m)
        with self._lock:
            self._fib[n] = v
        return v

    def fib_factorial(self, n: int) -> Any:
        """[[n]]! = [[1]][[2]]...[[n]]; [[0]]! = 1."""
        if n < 0:
            raise ValueError("factorial index must be nonnegative")
        with self._lock:
            while len(self._fib_fact) <= n:
                k = len(self._fib_fact)
                self._fib_fact.append(self._fib_fact[-1] * self._fib_uncached(k))
            return self._fib_fact[n]

    def _fib_uncached(self, n: int) -> Any:
        # lock already held
        v = self._fib.get(n)
        if v is not None:
            return v
        top = max(k for k in self._fib if k >= 0)
        a = self._fib[top - 1] if top >= 1 else self.field.zero
        b = self._fib[top]
        while top < n:
            a, b = b, self.s * b + self.t * a
            top += 1
            self._fib[top] = b
        return b

    def st_binom(self, alpha: int, k: int) -> Any:
        """Fibonomial {alpha over k} for any integer alpha and k >= 0.

        alpha >= 0 uses the falling product over [[k]]! with the division
        checked exact; alpha < 0 is produced by the reflection
        {-m over k} = (-1)^k (-t)^{-mk - C(k,2)} {m+k-1 over k}.
        """
        if k < 0:
            raise ValueError("lower index must be nonnegative")
        key = (alpha, k)
        with self._lock:
            v = self._binom.get(key)
        if v is not None:
            return v
        if k == 0:
            v = self.field.one
        elif alpha >= 0:
            if k > alpha:
                v = self.field.zero
            else:
                num = self.field.one
                for j in range(k):
                    num = num * self.fib(alpha - j)
                v = num / self.fib_factorial(k)
                self._check_polynomial(v, f"{{{alpha} over {k}}}")
        else:
            m = -alpha
            sign = -1 if k % 2 else 1
            v = (sign * (-self.t) ** (alpha * k - binom2(k))
                 * self.st_binom(m + k - 1, k))
        with self._lock:
            self._binom[key] = v
        return v

    def _check_polynomial(self, v: Any, label: str) -> None:
        # Fibonomial integrality: the quotient must clear its denominator
        # whenever s, t are themselves polynomial.
        if isinstance(v, RatFunc) and isinstance(self.s, RatFunc):
            if (self.s.den == self.s.field.ring.one
                    and self.t.den == self.s.field.ring.one
                    and v.den != v.field.ring.one):
                raise ExactDivisionError(f"{label} failed to be polynomial")

    # -- Pascal recurrences ----------------------------------------------------

    def pascal_left(self, alpha: int, k: int) -> Any:
        """phi^k {alpha over k} + phi'^(alpha+1-k) {alpha over k-1}."""
        if k < 1:
            raise ValueError("k must be >= 1")
        phi, phi_p = self.phi(), self.phi_prime()
        return (phi ** k * self.embed_quad(self.st_binom(alpha, k))
                + phi_p ** (alpha + 1 - k)
                * self.embed_quad(self.st_binom(alpha, k - 1)))

    def pascal_right(self, alpha: int, k: int) -> Any:
        """phi'^k {alpha over k} + phi^(alpha+1-k) {alpha over k-1}."""
        if k < 1:
            raise ValueError("k must be >= 1")
        phi, phi_p = self.phi(), self.phi_prime()
        return (phi_p ** k * self.embed_quad(self.st_binom(alpha, k))
                + phi ** (alpha + 1 - k)
                * self.embed_quad(self.st_binom(alpha, k - 1)))

    # -- polytopic numbers -------------------------------------------------------

    def polytopic(self, n: int, d: int) -> Any:
        """{n+d-1 over d} = [[n]][[n+1]]...[[n+d-1]] / [[d]]!; n >= 0, d >= 0.

        n = 0 yields 0 for d >= 1 (every family starts T_0 = 0).
        """
        if n < 0 or d < 0:
            raise ValueError("polytopic indices must be nonnegative")
        if d == 0:
            return self.field.one
        num = self.field.one
        for j in range(d):
            num = num * self.fib(n + j)
        v = num / self.fib_factorial(d)
        self._check_polynomial(v, f"polytopic({n},{d})")
        return v

    def __repr__(self) -> str:
        tag = self.name or ("symbolic" if self.symbolic else "specialized")
        return f"STContext({tag}: s={self.s}, t={self.t})"


@dataclass(frozen=True)
class PolytopicFamily:
    """The d-polytopic sequence n -> {n+d-1 over d} in a fixed context."""

    d: int
    context: STContext

    def __post_init__(self) -> None:
        if self.d < 0:
            raise ValueError("dimension must be nonnegative")

    def value(self, n: int) -> Any:
        return self.context.polytopic(n, self.d)

    def sequence(self, count: int, start: int = 0) -> list[Any]:
        return [self.value(n) for n in range(start, start + count)]


FAMILY_DIMS = {
    "triangular": 2,
    "tetrahedral": 3,
    "pentachoron": 4,
    "hexateron": 5,
}


# ---------------------------------------------------------------------------
# contexts
# ---------------------------------------------------------------------------


def symbolic_context(extra_gens: tuple[str, ...] = ()) -> STContext:
    """Fully symbolic context over Q(s, t, *extra_gens)."""
    ring = PolyRing(("s", "t") + tuple(extra_gens))
    k = ring.frac_field
    return STContext(k, k.gen("s"), k.gen("t"), name="symbolic", symbolic=True)


def qnum_context(extra_gens: tuple[str, ...] = ()) -> STContext:
    """(s, t) = (1+q, -q) over Q(q, ...): [[n]] = [n]_q with exact
    phi = 1, phi' = q (the discriminant (1-q)^2 is a square)."""
    ring = PolyRing(("q",) + tuple(extra_gens))
    k = ring.frac_field
    q = k.gen("q")
    return STContext(k, 1 + q, -q, name="qnum", symbolic=True,
                     phi_pair=(k.one, q))


def numeric_context(s0: Any, t0: Any, name: str = "") -> STContext:
    return STContext(QQ, as_fraction(s0), as_fraction(t0), name=name)


SPECIALIZATIONS: dict[str, tuple] = {
    # name -> ((s, t) or parameter recipe, description)
    "integers":   ((2, -1), "[[n]] = n (degenerate: s^2+4t = 0)"),
    "fibonacci":  ((1, 1), "Fibonacci numbers F_n"),
    "pell":       ((2, 1), "Pell numbers P_n"),
    "jacobsthal": ((1, 2), "Jacobsthal numbers J_n"),
    "mersenne":   ((3, -2), "Mersenne numbers 2^n - 1"),
    "qnum":       (None, "[[n]] = [n]_q = 1 + q + ... + q^{n-1}, symbolic q"),
    "chebyshev":  (None, "(2*t0, -1): [[n]] = U_{n-1}(t0), one parameter t0"),
    "pq":         (None, "(p+q, -p*q): [[n]] = (p^n - q^n)/(p - q), parameters p, q"),
    "pqfib":      (None, "(P, -Q): the (P, -Q)-Fibonacci numbers, parameters P, Q"),
}


def specialization(name: str, *params: Any) -> STContext:
    """Named (s, t) specialization; parameterized names take rationals."""
    if name not in SPECIALIZATIONS:
        known = ", ".join(sorted(SPECIALIZATIONS))
        raise ValueError(f"unknown specialization {name!r} (known: {known})")
    if name == "qnum":
        if params:
            q0 = as_fraction(params[0])
            return numeric_context(1 + q0, -q0, name=f"qnum(q={q0})")
        return qnum_context()
    if name == "chebyshev":
        if len(params) != 1:
            raise ValueError("chebyshev takes one parameter t0")
        t0 = as_fraction(params[0])
        return numeric_context(2 * t0, -1, name=f"chebyshev(t0={t0})")
    if name == "pq":
        if len(params) != 2:
            raise ValueError("pq takes two parameters p, q")
        p, q = (as_fraction(x) for x in params)
        return numeric_context(p + q, -p * q, name=f"pq({p},{q})")
    if name == "pqfib":
        if len(params) != 2:
            raise ValueError("pqfib takes two parameters P, Q")
        p, q = (as_fraction(x) for x in params)
        return numeric_context(p, -q, name=f"pqfib({p},{q})")
    if params:
        raise ValueError(f"specialization {name!r} takes no parameters")
    (s0, t0), _ = SPECIALIZATIONS[name]
    return numeric_context(s0, t0, name=name)


# ---------------------------------------------------------------------------
# printed reference lists
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PrintedList:
    """A sequence prefix as printed in the source material.

    offset is the n-index of the first printed entry.  known_bad holds
    printed positions that disagree with the recurrence-derived values;
    they are reported, never silently patched.
    """

    family: str
    spec_name: str
    offset: int
    values: tuple[int, ...]
    oeis: str = ""
    known_bad: tuple[int, ...] = ()


PRINTED_LISTS: tuple[PrintedList, ...] = (
    # recurrence gives 0,1,1,3,5,11,21,43,85,171: the printed "2" at n=3 is
    # spurious and shifts the whole tail
    PrintedList("fib", "jacobsthal", 0,
                (0, 1, 1, 2, 3, 5, 11, 21, 43, 85),
                known_bad=(3, 4, 5, 6, 7, 8, 9)),
    PrintedList("triangular", "fibonacci", 0,
                (0, 1, 2, 6, 15, 40, 104, 273), oeis="A001654"),
    PrintedList("triangular", "pell", 0,
                (0, 1, 5, 30, 174, 1015, 5915), oeis="A084158"),
    # J_n J_{n+1} = 0,1,3,15,55,231,903,3655,14535: the printed row inherits
    # the bad J_3 and lags one step behind from n=2 on
    PrintedList("triangular", "jacobsthal", 0,
                (0, 1, 2, 6, 15, 55, 231, 903, 3655), oeis="A084175",
                known_bad=(2, 3, 4, 5, 6, 7, 8)),
    PrintedList("triangular", "mersenne", 0,
                (0, 1, 7, 35, 155, 651, 2667, 10795, 43435, 174251),
                oeis="A006095"),
    PrintedList("tetrahedral", "fibonacci", 0,
                (0, 1, 3, 15, 60, 260, 1092, 4641, 19635), oeis="A001655"),
    PrintedList("tetrahedral", "pell", 1,
                (1, 12, 174, 2436, 34307, 482664), oeis="A099930"),
    PrintedList("tetrahedral", "jacobsthal", 0,
                (0, 1, 5, 55, 385, 3311, 25585, 208335)),
    PrintedList("tetrahedral", "mersenne", 0,
                (0, 1, 15, 155, 1395, 11811, 97155), oeis="A006096"),
)


def printed_list_for(family: str, spec_name: str) -> PrintedList | None:
    for row in PRINTED_LISTS:
        if row.family == family and row.spec_name == spec_name:
            return row
    return None


def compare_with_printed(row: PrintedList, computed: list) -> list[tuple[int, Any, int]]:
    """Return (position, computed, printed) triples where they disagree."""
    out = []
    for i, printed in enumerate(row.values):
        n = row.offset + i
        if n < len(computed) and computed[n] != printed:
            out.append((n, computed[n], printed))
    return out
