"""Exact arithmetic tower: rationals, sparse polynomials, rational
functions, and a quadratic extension adjoining delta with delta^2 = s^2+4t.

Every coefficient is a fractions.Fraction; nothing here ever rounds.
Floating output exists only in eval_at, which flags it explicitly.

Rings are described by lightweight descriptor objects exposing
``zero``, ``one`` and ``coerce``; elements implement ordinary operator
overloads.  All values are immutable after construction and safe to
share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, getcontext
from fractions import Fraction
from math import isqrt
from typing import Any, Iterable, Mapping, Sequence

F0 = Fraction(0)
F1 = Fraction(1)


class ExactDivisionError(ArithmeticError):
    """Raised when an exact division or inversion is impossible."""


def as_fraction(v: Any) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"cannot interpret {v!r} as an exact rational")


class RationalField:
    """Descriptor for the base field Q realized as fractions.Fraction."""

    zero = F0
    one = F1

    def coerce(self, v: Any) -> Fraction:
        return as_fraction(v)

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")


QQ = RationalField()


# ---------------------------------------------------------------------------
# sparse multivariate polynomials
# ---------------------------------------------------------------------------

Exps = tuple  # exponent vector, one slot per generator


def _grlex_key(e: Exps):
    # graded lexicographic: total degree first, then lex on the vector
    return (sum(e), e)


class PolyRing:
    """Polynomial ring Q[g1, ..., gk] with named generators."""

    __slots__ = ("gens", "_zero_exps", "_gen_cache", "_frac_field",
                 "zero", "one")

    def __init__(self, gens: Sequence[str]):
        if len(set(gens)) != len(gens) or not gens:
            raise ValueError("generators must be nonempty and distinct")
        self.gens: tuple[str, ...] = tuple(gens)
        self._zero_exps: Exps = (0,) * len(gens)
        self._gen_cache: dict[str, Poly] = {}
        self._frac_field: FracField | None = None
        self.zero = Poly(self, {})
        self.one = Poly(self, {self._zero_exps: F1})

    def gen(self, name: str) -> Poly:
        p = self._gen_cache.get(name)
        if p is None:
            i = self.gens.index(name)
            e = tuple(1 if j == i else 0 for j in range(len(self.gens)))
            p = Poly(self, {e: F1})
            self._gen_cache[name] = p
        return p

    def const(self, c: Any) -> Poly:
        c = as_fraction(c)
        return Poly(self, {self._zero_exps: c} if c else {})

    def coerce(self, v: Any) -> Poly:
        if isinstance(v, Poly):
            if v.ring is not self and v.ring != self:
                raise TypeError("polynomial from a different ring")
            return v
        return self.const(v)

    def monomial(self, exps: Exps, c: Any = F1) -> Poly:
        c = as_fraction(c)
        return Poly(self, {tuple(exps): c} if c else {})

    @property
    def frac_field(self) -> "FracField":
        if self._frac_field is None:
            self._frac_field = FracField(self)
        return self._frac_field

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolyRing) and other.gens == self.gens

    def __hash__(self) -> int:
        return hash(self.gens)

    def __repr__(self) -> str:
        return f"QQ[{', '.join(self.gens)}]"


class Poly:
    """Sparse polynomial: exponent tuple -> nonzero Fraction."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c}

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1
                                  and self.ring._zero_exps in self.terms)

    def const_value(self) -> Fraction:
        if not self.is_const():
            raise ValueError("not a constant polynomial")
        return self.terms.get(self.ring._zero_exps, F0)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, name: str) -> int:
        i = self.ring.gens.index(name)
        return max((e[i] for e in self.terms), default=0)

    def used_gen_indices(self) -> set[int]:
        used: set[int] = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(i)
        return used

    def leading_term(self) -> tuple[Exps, Fraction]:
        # largest monomial in graded-lex order
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    # -- arithmetic --------------------------------------------------------

    def _coerce_other(self, other: Any):
        if isinstance(other, Poly):
            if other.ring == self.ring:
                return other
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        o = self._coerce_other(other)
        if o is NotImplemented:
            return NotImplemented
        return self.terms == o.terms

    def __add__(self, other):
        o = self._coerce_other(other)
        if o is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in o.terms.items():
            v = terms.get(e, F0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return Poly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

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
        if isinstance(other, (int, Fraction)):
            c = as_fraction(other)
            if not c:
                return self.ring.zero
            return Poly(self.ring, {e: k * c for e, k in self.terms.items()})
        o = self._coerce_other(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.terms, o.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                v = out.get(e)
                out[e] = ca * cb if v is None else v + ca * cb
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ExactDivisionError("negative power of a polynomial")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_fraction(other)
            if not c:
                raise ZeroDivisionError("polynomial divided by zero")
            inv = 1 / c
            return Poly(self.ring, {e: k * inv for e, k in self.terms.items()})
        return NotImplemented

    # -- structural operations ---------------------------------------------

    def exact_div(self, d: "Poly") -> "Poly":
        """Divide by d, raising ExactDivisionError unless the division is exact."""
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if d.is_const():
            return self / d.const_value()
        r = dict(self.terms)
        out: dict = {}
        de, dc = d.leading_term()
        while r:
            le = max(r, key=_grlex_key)
            lc = r[le]
            qe = tuple(a - b for a, b in zip(le, de))
            if any(x < 0 for x in qe):
                raise ExactDivisionError("inexact polynomial division")
            qc = lc / dc
            out[qe] = out.get(qe, F0) + qc
            for e, c in d.terms.items():
                ne = tuple(a + b for a, b in zip(qe, e))
                v = r.get(ne, F0) - qc * c
                if v:
                    r[ne] = v
                else:
                    r.pop(ne, None)
        return Poly(self.ring, out)

    def eval(self, env: Mapping[str, Any]):
        """Evaluate with generator values from env (missing gens stay symbolic
        only if the polynomial does not use them).  Values may live in any
        commutative ring with int/Fraction scalar multiplication."""
        gens = self.ring.gens
        powers: list[dict[int, Any]] = [dict() for _ in gens]
        vals: list[Any] = [env.get(g) for g in gens]
        acc = None
        for e, c in self.terms.items():
            term: Any = c
            for i, k in enumerate(e):
                if not k:
                    continue
                v = vals[i]
                if v is None:
                    raise KeyError(f"no value supplied for generator {gens[i]!r}")
                pk = powers[i].get(k)
                if pk is None:
                    pk = v ** k
                    powers[i][k] = pk
                term = pk * term
            acc = term if acc is None else acc + term
        if acc is None:
            return F0
        return acc

    def subs(self, env: Mapping[str, Any]) -> "Poly":
        """Substitute some generators by ring elements, staying in this ring."""
        full = {g: env.get(g, self.ring.gen(g)) for g in self.ring.gens}
        out = self.eval(full)
        return self.ring.coerce(out)

    # -- rendering -----------------------------------------------------------

    def sorted_terms(self, descending: bool = False):
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]),
                      reverse=descending)

    def __str__(self) -> str:
        return format_terms(self.ring.gens, self.sorted_terms())

    def __repr__(self) -> str:
        return f"Poly({self})"


def format_terms(gens: Sequence[str], items: Iterable[tuple[Exps, Fraction]]) -> str:
    parts: list[str] = []
    for e, c in items:
        factors = [f"{g}^{k}" if k > 1 else g
                   for g, k in zip(gens, e) if k]
        if not factors:
            body = str(c)
        else:
            mono = "*".join(factors)
            if c == 1:
                body = mono
            elif c == -1:
                body = f"-{mono}"
            else:
                body = f"{c}*{mono}"
        if not parts:
            parts.append(body)
        elif body.startswith("-"):
            parts.append(f"- {body[1:]}")
        else:
            parts.append(f"+ {body}")
    return " ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# polynomial gcd (content / primitive-part recursion)
# ---------------------------------------------------------------------------


def _monic(p: Poly) -> Poly:
    if p.is_zero():
        return p
    _, lc = p.leading_term()
    return p / lc if lc != 1 else p


def _uni_dense(p: Poly, i: int) -> list[Fraction]:
    out = [F0] * (p.degree_in(p.ring.gens[i]) + 1)
    for e, c in p.terms.items():
        out[e[i]] = c
    return out


def _uni_from_dense(ring: PolyRing, i: int, coeffs: list[Fraction]) -> Poly:
    n = len(ring.gens)
    terms = {}
    for k, c in enumerate(coeffs):
        if c:
            terms[tuple(k if j == i else 0 for j in range(n))] = c
    return Poly(ring, terms)


def _uni_gcd_dense(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    def strip(x):
        while x and not x[-1]:
            x.pop()
        return x

    a, b = strip(list(a)), strip(list(b))
    while b:
        # a mod b
        while len(a) >= len(b):
            if not a:
                break
            q = a[-1] / b[-1]
            off = len(a) - len(b)
            for k in range(len(b)):
                a[off + k] -= q * b[k]
            strip(a)
        a, b = b, a
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _coeff_split(p: Poly, i: int) -> dict[int, Poly]:
    """View p as univariate in gen i with Poly coefficients (gen i zeroed)."""
    out: dict[int, dict] = {}
    for e, c in p.terms.items():
        k = e[i]
        rest = tuple(0 if j == i else x for j, x in enumerate(e))
        out.setdefault(k, {})[rest] = c
    return {k: Poly(p.ring, d) for k, d in out.items()}


def _coeff_join(ring: PolyRing, i: int, coeffs: dict[int, Poly]) -> Poly:
    terms: dict = {}
    for k, p in coeffs.items():
        for e, c in p.terms.items():
            ne = tuple(k if j == i else x for j, x in enumerate(e))
            terms[ne] = terms.get(ne, F0) + c
    return Poly(ring, terms)


def _prem(a: dict[int, Poly], b: dict[int, Poly]) -> dict[int, Poly]:
    """Pseudo-remainder of a by b (both univariate-with-Poly-coefficient views)."""
    a = dict(a)
    db = max(b)
    lb = b[db]
    while a and max(a) >= db:
        da = max(a)
        la = a[da]
        new: dict[int, Poly] = {}
        for d, c in a.items():
            new[d] = lb * c
        for d, c in b.items():
            nd = d + da - db
            prev = new.get(nd)
            term = la * c
            new[nd] = (-term) if prev is None else prev - term
        a = {d: c for d, c in new.items() if not c.is_zero()}
    return a


def _gcd_many(ps: Iterable[Poly]) -> Poly:
    g: Poly | None = None
    for p in ps:
        g = p if g is None else poly_gcd(g, p)
        if g is not None and g.is_const() and not g.is_zero():
            return _monic(g)
    assert g is not None
    return g


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over Q[gens]; Q-coefficient content is irrelevant (field)."""
    ring = p.ring
    if p.is_zero():
        return _monic(q)
    if q.is_zero():
        return _monic(p)
    if p.is_const() or q.is_const():
        return ring.one
    if p.is_monomial() or q.is_monomial():
        # gcd with a monomial: componentwise min over the other's support
        n = len(ring.gens)
        mins = [min(e[i] for e in p.terms) for i in range(n)]
        mins = [min(m, min(e[i] for e in q.terms)) for i, m in enumerate(mins)]
        return ring.monomial(tuple(mins))
    up, uq = p.used_gen_indices(), q.used_gen_indices()
    common = up & uq
    if not common:
        return ring.one
    if up == uq and len(up) == 1:
        i = next(iter(up))
        g = _uni_gcd_dense(_uni_dense(p, i), _uni_dense(q, i))
        return _uni_from_dense(ring, i, g)
    # strip any shared monomial factor first (cheap and very common here)
    n = len(ring.gens)
    shared = tuple(min(min(e[i] for e in p.terms), min(e[i] for e in q.terms))
                   for i in range(n))
    if any(shared):
        mono = ring.monomial(shared)
        pr = p.exact_div(mono)
        qr = q.exact_div(mono)
        return _monic(mono * poly_gcd(pr, qr))
    i = min(common)
    ap, aq = _coeff_split(p, i), _coeff_split(q, i)
    cont_p = _gcd_many(ap.values())
    cont_q = _gcd_many(aq.values())
    cont = poly_gcd(cont_p, cont_q)
    pp = {k: v.exact_div(cont_p) for k, v in ap.items()}
    qq = {k: v.exact_div(cont_q) for k, v in aq.items()}
    if max(pp) < max(qq):
        pp, qq = qq, pp
    while qq:
        r = _prem(pp, qq)
        if not r:
            break
        rc = _gcd_many(r.values())
        r = {k: v.exact_div(rc) for k, v in r.items()}
        pp, qq = qq, r
    if qq:
        pp = qq
    gp = _coeff_join(ring, i, pp)
    return _monic(cont * gp)


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


class FracField:
    """Descriptor for the fraction field of a PolyRing."""

    __slots__ = ("ring", "zero", "one")

    def __init__(self, ring: PolyRing):
        self.ring = ring
        self.zero = RatFunc(self, ring.zero, ring.one, reduce=False)
        self.one = RatFunc(self, ring.one, ring.one, reduce=False)

    @property
    def gens(self) -> tuple[str, ...]:
        return self.ring.gens

    def gen(self, name: str) -> "RatFunc":
        return RatFunc(self, self.ring.gen(name), self.ring.one, reduce=False)

    def coerce(self, v: Any) -> "RatFunc":
        if isinstance(v, RatFunc):
            if v.field == self:
                return v
            raise TypeError("rational function from a different field")
        if isinstance(v, Poly):
            return RatFunc(self, self.ring.coerce(v), self.ring.one,
                           reduce=False)
        return RatFunc(self, self.ring.const(v), self.ring.one, reduce=False)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FracField) and other.ring == self.ring

    def __hash__(self) -> int:
        return hash(("FracField", self.ring.gens))

    def __repr__(self) -> str:
        return f"QQ({', '.join(self.ring.gens)})"


class RatFunc:
    """Reduced fraction of polynomials; the denominator is monic in graded-lex."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: FracField, num: Poly, den: Poly,
                 reduce: bool = True):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if reduce:
            if den.is_const():
                num = num / den.const_value()
                den = field.ring.one
            elif num.is_zero():
                den = field.ring.one
            else:
                g = poly_gcd(num, den)
                if not (g.is_const() and g.const_value() == 1):
                    num = num.exact_div(g)
                    den = den.exact_div(g)
                _, lc = den.leading_term()
                if lc != 1:
                    num = num / lc
                    den = den / lc
        self.field = field
        self.num = num
        self.den = den

    # -- helpers -----------------------------------------------------------

    def _coerce_other(self, other: Any):
        if isinstance(other, RatFunc):
            if other.field == self.field:
                return other
            return NotImplemented
        if isinstance(other, (int, Fraction, Poly)):
            try:
                return self.field.coerce(other)
            except TypeError:
                return NotImplemented
        return NotImplemented

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_const(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def const_value(self) -> Fraction:
        return self.num.const_value() / self.den.const_value()

    # -- arithmetic ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        o = self._coerce_other(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __add__(self, other):
        o = self._coerce_other(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.field, self.num + o.num, self.den)
        return RatFunc(self.field, self.num * o.den + o.num * self.den,
                       self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(self.field, -self.num, self.den, reduce=False)

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
        if isinstance(other, (int, Fraction)):
            c = as_fraction(other)
            if not c:
                return self.field.zero
            return RatFunc(self.field, self.num * c, self.den, reduce=False)
        o = self._coerce_other(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(self.field, self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce_other(other)
        if o is NotImplemented:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.field, self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce_other(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def inv(self) -> "RatFunc":
        if self.num.is_zero():
            raise ExactDivisionError("inverting zero")
        return RatFunc(self.field, self.den, self.num)

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- substitution ----------------------------------------------------------

    def subs(self, env: Mapping[str, Any]) -> "RatFunc":
        """Substitute generators by elements of this same field."""
        full = {g: env.get(g, self.field.gen(g)) for g in self.field.gens}
        num = self.num.eval(full)
        den = self.den.eval(full)
        return self.field.coerce(num) / self.field.coerce(den)

    def eval(self, env: Mapping[str, Any]):
        """Evaluate in an arbitrary ring; the denominator must be a unit there."""
        num = self.num.eval(env)
        den = self.den.eval(env)
        if isinstance(den, Fraction):
            if not den:
                raise ZeroDivisionError("denominator vanishes at this point")
            if isinstance(num, Fraction):
                return num / den
            return num * (1 / den)
        return num / den

    def __str__(self) -> str:
        if self.den == self.field.ring.one:
            return str(self.num)
        ns, ds = str(self.num), str(self.den)
        if " " in ns or ns.startswith("-"):
            ns = f"({ns})"
        if " " in ds:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


# ---------------------------------------------------------------------------
# quadratic extension
# ---------------------------------------------------------------------------


class QuadExtRing:
    """Descriptor for K[delta]/(delta^2 - D) over a base field descriptor K."""

    __slots__ = ("base", "delta_sq", "zero", "one", "delta")

    def __init__(self, base: Any, delta_sq: Any):
        self.base = base
        self.delta_sq = base.coerce(delta_sq)
        self.zero = QuadExt(self, base.zero, base.zero)
        self.one = QuadExt(self, base.one, base.zero)
        self.delta = QuadExt(self, base.zero, base.one)

    def coerce(self, v: Any) -> "QuadExt":
        if isinstance(v, QuadExt):
            if v.ring == self:
                return v
            raise TypeError("element of a different quadratic extension")
        return QuadExt(self, self.base.coerce(v), self.base.zero)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, QuadExtRing) and other.base == self.base
                and other.delta_sq == self.delta_sq)

    def __hash__(self) -> int:
        return hash(("QuadExtRing", id(self.base)))

    def __repr__(self) -> str:
        return f"{self.base!r}[delta]"


class QuadExt:
    """a + b*delta with delta^2 = ring.delta_sq; a, b in the base field."""

    __slots__ = ("ring", "a", "b")

    def __init__(self, ring: QuadExtRing, a: Any, b: Any):
        self.ring = ring
        self.a = a
        self.b = b

    # -- structure ---------------------------------------------------------

    def conj(self) -> "QuadExt":
        return QuadExt(self.ring, self.a, -self.b)

    def delta_part(self):
        return self.b

    def symmetric_part(self):
        return self.a

    def is_zero(self) -> bool:
        z = self.ring.base.zero
        return self.a == z and self.b == z

    # -- arithmetic -----------------------------------------------------------

    def _coerce_other(self, other: Any):
        if isinstance(other, QuadExt):
            if other.ring == self.ring:
                return other
            return NotImplemented
        try:
            return self.ring.coerce(other)
        except (TypeError, ZeroDivisionError):
            return NotImplemented

    def __eq__(self, other: object) -> bool:
        o = self._coerce_other(other)
        if o is NotImplemented:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __add__(self, other):
        o = self._coerce_other(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(self.ring, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(self.ring, -self.a, -self.b)

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
        if isinstance(other, (int, Fraction)):
            return QuadExt(self.ring, self.a * other, self.b * other)
        o = self._coerce_other(other)
        if o is NotImplemented:
            return NotImplemented
        d = self.ring.delta_sq
        return QuadExt(self.ring,
                       self.a * o.a + self.b * o.b * d,
                       self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def norm(self):
        # x * conj(x), landing in the base field
        return self.a * self.a - self.b * self.b * self.ring.delta_sq

    def inv(self) -> "QuadExt":
        n = self.norm()
        zero = self.ring.base.zero
        if n == zero:
            raise ExactDivisionError("non-unit in quadratic extension")
        if isinstance(n, Fraction):
            ninv = 1 / n
        else:
            ninv = self.ring.base.one / n
        return QuadExt(self.ring, self.a * ninv, -self.b * ninv)

    def __truediv__(self, other):
        o = self._coerce_other(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce_other(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __str__(self) -> str:
        if self.b == self.ring.base.zero:
            return str(self.a)
        return f"({self.a}) + ({self.b})*delta"

    def __repr__(self) -> str:
        return f"QuadExt({self})"


# ---------------------------------------------------------------------------
# numeric evaluation
# ---------------------------------------------------------------------------


def _sqrt_exact(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class ExtNumeric:
    """Value a + b*sqrt(disc) whose square root is irrational.

    ``flagged`` is always True: any consumer sees explicitly that approx()
    is the only numeric view and is not exact.
    """

    a: Fraction
    b: Fraction
    disc: Fraction
    flagged: bool = True

    def approx(self, digits: int = 50) -> Decimal:
        getcontext().prec = digits + 10
        root = (Decimal(self.disc.numerator) / Decimal(self.disc.denominator)).sqrt()
        val = (Decimal(self.a.numerator) / Decimal(self.a.denominator)
               + (Decimal(self.b.numerator) / Decimal(self.b.denominator)) * root)
        return +val

    def __str__(self) -> str:
        return f"{self.a} + {self.b}*sqrt({self.disc}) ~ {self.approx(30)} (inexact)"


def eval_at(x: Any, s0: Any, t0: Any):
    """Evaluate a tower element at rational (s0, t0).

    Returns a Fraction when the result is rational; a flagged ExtNumeric when
    a QuadExt element needs an irrational square root.  Raises
    ZeroDivisionError naming the vanishing denominator at a pole.
    """
    s0, t0 = as_fraction(s0), as_fraction(t0)
    env = {"s": s0, "t": t0}
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Poly):
        return x.eval(env)
    if isinstance(x, RatFunc):
        den = x.den.eval(env)
        if not den:
            raise ZeroDivisionError(
                f"denominator {x.den} vanishes at (s,t)=({s0},{t0})")
        return x.num.eval(env) / den
    if isinstance(x, QuadExt):
        a = eval_at(x.a, s0, t0)
        b = eval_at(x.b, s0, t0)
        disc = eval_at(x.ring.delta_sq, s0, t0)
        if not b:
            return a
        root = _sqrt_exact(disc)
        if root is not None:
            return a + b * root
        return ExtNumeric(a, b, disc)
    raise TypeError(f"cannot evaluate {type(x).__name__} at a point")
