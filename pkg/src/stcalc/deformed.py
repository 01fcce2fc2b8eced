"""Deformed binomial and trinomial series, the deformed translation
operator, and derivatives of the partial theta function.

The central object is

    (x (+)_{u,v} y)^(alpha) = sum_k {alpha k} u^C(alpha-k,2) v^C(k,2)
                                      x^(alpha-k) y^k,

a finite sum for alpha >= 0 and a series for alpha < 0.  Slots may be ring
elements, truncated Series, or PairSlot compounds whose k-th power is the
deformed k-th power of an inner pair; that is what makes nested trinomial
groupings expressible with one builder.  The minus variant negates the
second slot.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Any

from .pseries import Series
from .stcore import STContext, binom2


@dataclass(frozen=True)
class PairSlot:
    """Compound slot scalar*(first (+)_{u,v} second).

    Raising to the k-th power means scalar^k times the deformed k-th
    binomial power of the pair, never a plain product power.
    """

    first: Any
    second: Any
    u: Any
    v: Any
    scalar: Any = 1


def negate_slot(slot: Any) -> Any:
    if isinstance(slot, PairSlot):
        return replace(slot, scalar=-slot.scalar)
    return -slot


def slot_power(slot: Any, k: int, ctx: STContext, order: int | None = None) -> Any:
    if isinstance(slot, PairSlot):
        body = deformed_binom(slot.first, slot.second, slot.u, slot.v, k,
                              ctx, order=order)
        c = slot.scalar
        if isinstance(c, int):
            if c == 1:
                return body
            c = Fraction(c)
        return (c ** k) * body
    if isinstance(slot, int):
        slot = Fraction(slot)
    return slot ** k


def deformed_binom(x: Any, y: Any, u: Any, v: Any, alpha: int,
                   ctx: STContext, *, order: int | None = None,
                   minus: bool = False) -> Any:
    """(x (+)_{u,v} y)^(alpha), or the (-) variant when minus is set.

    alpha >= 0: the finite sum, in whatever ring the slots live in.
    alpha < 0: a series; `order` bounds the expansion index and the second
    slot must gain valuation, meaning a Series with zero constant term or a
    PairSlot (whose joint-valuation bookkeeping is the caller's).  The first
    slot is then raised to negative powers, so it must be a unit.
    """
    if minus:
        y = negate_slot(y)
    if alpha >= 0:
        k_top = alpha
    else:
        if order is None:
            raise ValueError("negative alpha needs an expansion order")
        if not isinstance(y, PairSlot) and not (
                isinstance(y, Series) and y.valuation_at_least(1)):
            raise ValueError(
                "negative alpha needs a second slot with positive valuation")
        k_top = order
    acc = None
    for k in range(k_top + 1):
        c = ctx.st_binom(alpha, k)
        cu = u ** binom2(alpha - k)
        cv = v ** binom2(k)
        term = slot_power(x, alpha - k, ctx, order) \
            * slot_power(y, k, ctx, order)
        term = term * c * cu * cv
        acc = term if acc is None else acc + term
    return acc


def deformed_trinom(x: Any, y: Any, z: Any, u: Any, v: Any, w: Any,
                    alpha: int, ctx: STContext, *,
                    order: int | None = None) -> Any:
    """(x (+)_{u,1} (y (+)_{v,w} z))^(alpha)."""
    return deformed_binom(x, PairSlot(y, z, v, w), u, 1, alpha, ctx,
                          order=order)


def trinomial_form(idx: int, x: Any, y: Any, z: Any, u: Any, v: Any, w: Any,
                   alpha: int, ctx: STContext, *,
                   order: int | None = None) -> Any:
    """One of the twelve nested readings of the deformed trinomial.

    Grouping rule: a lone slot keeps its own deformation parameter on its
    side of the outer pair; a compound slot contributes 1 there.  Forms
    1-4 lead with x, 5-8 with y, 9-12 with z; for negative alpha only
    forms that share a leading variable expand in the same completion.
    """
    P = PairSlot
    B = deformed_binom
    if idx == 1:
        return B(x, P(y, z, v, w), u, 1, alpha, ctx, order=order)
    if idx == 2:
        return B(P(x, y, u, v), z, 1, w, alpha, ctx, order=order)
    if idx == 3:
        return B(x, P(z, y, w, v), u, 1, alpha, ctx, order=order)
    if idx == 4:
        return B(P(x, z, u, w), y, 1, v, alpha, ctx, order=order)
    if idx == 5:
        return B(P(y, x, v, u), z, 1, w, alpha, ctx, order=order)
    if idx == 6:
        return B(y, P(x, z, u, w), v, 1, alpha, ctx, order=order)
    if idx == 7:
        return B(y, P(z, x, w, u), v, 1, alpha, ctx, order=order)
    if idx == 8:
        return B(P(y, z, v, w), x, 1, u, alpha, ctx, order=order)
    if idx == 9:
        return B(z, P(x, y, u, v), w, 1, alpha, ctx, order=order)
    if idx == 10:
        return B(P(z, x, w, u), y, 1, v, alpha, ctx, order=order)
    if idx == 11:
        return B(z, P(y, x, v, u), w, 1, alpha, ctx, order=order)
    if idx == 12:
        return B(P(z, y, w, v), x, 1, u, alpha, ctx, order=order)
    raise ValueError("form index must be 1..12")


def deformed_exp(z: Any, u: Any, ctx: STContext,
                 n_terms: int | None = None) -> Any:
    """exp_{s,t}(z, u) = sum_n u^C(n,2) z^n / [[n]]!.

    u = 0 collapses to 1 + z on its own (0^0 = 1 in every ring here).
    n_terms defaults to the order of a Series argument with positive
    valuation; otherwise it is required.
    """
    if n_terms is None:
        if isinstance(z, Series) and z.valuation_at_least(1):
            n_terms = z.order
        else:
            raise ValueError("deformed_exp needs an explicit term count here")
    one = ctx.field.one
    acc = None
    for n in range(n_terms + 1):
        c = (u ** binom2(n)) * (one / ctx.fib_factorial(n))
        term = slot_power(z, n, ctx) * c
        acc = term if acc is None else acc + term
    return acc


def deformed_exp_pair(x: Any, y: Any, u: Any, v: Any, ctx: STContext,
                      n_terms: int) -> Any:
    """exp_{s,t}(x (+)_{u,v} y) = sum_n (x (+)_{u,v} y)^(n) / [[n]]!."""
    one = ctx.field.one
    acc = None
    for n in range(n_terms + 1):
        term = deformed_binom(x, y, u, v, n, ctx) * (one / ctx.fib_factorial(n))
        acc = term if acc is None else acc + term
    return acc


def _fib_rising(ctx: STContext, k: int, n: int) -> Any:
    """[[k+n]]!/[[k]]! as the product [[k+1]]...[[k+n]]; no division."""
    acc = ctx.field.one
    for j in range(k + 1, k + n + 1):
        acc = acc * ctx.fib(j)
    return acc


def translation_apply(y: Any, u: Any, v: Any, f: Series,
                      ctx: STContext) -> Series:
    """Apply e(y T_{u^-1} D, v) to a series in its own variable.

    y, u, v are scalars in the coefficient ring (u a unit).  The operator
    collapses coefficientwise to

        result_k = sum_n {k+n n} v^C(n,2) y^n u^-(nk + C(n,2)) f_{k+n},

    which is exact to the full order of f.
    """
    field = ctx.field
    u = field.coerce(u) if isinstance(u, (int, Fraction)) else u
    n_top = f.order
    coeffs = []
    for k in range(n_top + 1):
        acc = f[k] * field.one
        yn = field.one
        for n in range(1, n_top - k + 1):
            yn = yn * y
            c = ctx.st_binom(k + n, n) * (v ** binom2(n)) * yn \
                * u ** (-(n * k + binom2(n)))
            acc = acc + c * f[k + n]
        coeffs.append(acc)
    return Series(f.ring, f.var, coeffs, n_top)


def td_power(g: Series, n: int, u: Any, ctx: STContext) -> Series:
    """(T_{u^-1} D)^n g; the order drops by n.

    Coefficientwise: g_k picks up [[k+1]]...[[k+n]] and u^-(nk + C(n,2)).
    """
    if n == 0:
        return g
    if g.order < n:
        raise ValueError("series order too small for this derivative power")
    field = ctx.field
    u = field.coerce(u) if isinstance(u, (int, Fraction)) else u
    coeffs = []
    for k in range(g.order - n + 1):
        c = _fib_rising(ctx, k, n) * u ** (-(n * k + binom2(n)))
        coeffs.append(c * g[k + n])
    return Series(g.ring, g.var, coeffs, g.order - n)


def translation_apply_outer(u: Any, v: Any, f: Series,
                            ctx: STContext) -> Series:
    """Apply e(Y T_{u^-1} D, v) to a nested series whose outer variable is
    the displacement Y itself; D differentiates the inner variable.

    Outer coefficient j of the result is
        sum_{n<=j} v^C(n,2) (T_{u^-1} D)^n {f_{j-n}} / [[n]]!.
    Inner orders shrink with n; cells beyond the joint truncation window
    are dropped, so compare results on i_inner + j_outer <= N only.
    """
    field = ctx.field
    coeffs = []
    for j in range(f.order + 1):
        acc = None
        for n in range(j + 1):
            g = f[j - n]
            if g.order < n:
                continue
            c = (v ** binom2(n)) * (field.one / ctx.fib_factorial(n))
            term = td_power(g, n, u, ctx) * c
            acc = term if acc is None else acc + term
        coeffs.append(acc if acc is not None else f.ring.zero)
    return Series(f.ring, f.var, coeffs, f.order)


def theta_partial(q: Any, ring: Any, var: str, order: int) -> Series:
    """Theta_0(x, q) = sum_n q^C(n,2) x^n, truncated."""
    q = ring.coerce(q)
    return Series(ring, var, [q ** binom2(n) for n in range(order + 1)], order)


def theta_deriv(n: int, q: Any, ctx: STContext, var: str, order: int,
                mode: str = "closed") -> Series:
    """n-th (s,t)-derivative of Theta_0(x, q), to the given order.

    mode "direct" builds the termwise derivative
        sum_m q^C(m+n,2) ([[m+n]]!/[[m]]!) x^m;
    mode "closed" builds
        [[n]]! q^C(n,2) (1 (+)_{1,-tq} (-tq)^n t x)^(-n-1).
    The two agreeing is one of the verified identities.
    """
    field = ctx.field
    q = field.coerce(q)
    if mode == "direct":
        coeffs = [q ** binom2(m + n) * _fib_rising(ctx, m, n)
                  for m in range(order + 1)]
        return Series(field, var, coeffs, order)
    if mode != "closed":
        raise ValueError("mode must be 'closed' or 'direct'")
    tq = ctx.t * q
    x = Series.gen(field, var, order) * ((-tq) ** n * ctx.t)
    body = deformed_binom(field.one, x, 1, -tq, -n - 1, ctx, order=order)
    return body * (ctx.fib_factorial(n) * q ** binom2(n))
