"""Truncated power series in ``t`` with polynomial coefficients.

Rational generating functions are expanded as numerator times the series
inverse of the denominator, so everything stays in exact integer
polynomial arithmetic. Denominators must have constant term ``+1`` or ``-1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Sequence

from .families import HPowers, _params, fib, fib_term_coeff, lucas, lucas_term_coeff
from .incomplete import fib_incomplete, lucas_incomplete
from .polynomial import ONE, ZERO, Polynomial, binomial, format_poly, from_json, to_json


class NotAUnit(ArithmeticError):
    """The series has no inverse: its constant term is not +1 or -1."""


def _as_poly(c) -> Polynomial:
    return c if isinstance(c, Polynomial) else Polynomial.constant(c)


class PolySeries:
    """``sum coeffs[i] t^i``, known modulo ``t^(order+1)``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence = (), order: int | None = None):
        cs = [_as_poly(c) for c in coeffs]
        if order is None:
            order = max(len(cs) - 1, 0)
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = cs[: order + 1]
        cs.extend([ZERO] * (order + 1 - len(cs)))
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("PolySeries is immutable")

    def __getitem__(self, i: int) -> Polynomial:
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, PolySeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"PolySeries([{', '.join(format_poly(c) for c in self.coeffs)}], order={self.order})"

    def __neg__(self):
        return series_scale(self, -1)

    def __add__(self, other):
        return series_add(self, other)

    def __sub__(self, other):
        return series_add(self, series_scale(other, -1))

    def __mul__(self, other):
        if isinstance(other, PolySeries):
            return series_mul(self, other)
        return series_scale(self, other)

    __rmul__ = __mul__

    def truncate(self, order: int) -> "PolySeries":
        return PolySeries(self.coeffs, min(order, self.order))

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "PolySeries":
        return cls([from_json(c) for c in obj["coeffs"]], obj["order"])


def one(order: int) -> PolySeries:
    return PolySeries([ONE], order)


def series_add(a: PolySeries, b: PolySeries) -> PolySeries:
    order = min(a.order, b.order)
    return PolySeries([a.coeffs[i] + b.coeffs[i] for i in range(order + 1)], order)


def series_scale(a: PolySeries, c) -> PolySeries:
    c = _as_poly(c)
    return PolySeries([x * c for x in a.coeffs], a.order)


def series_shift(a: PolySeries, k: int) -> PolySeries:
    """Multiply by ``t^k``, keeping the order."""
    return PolySeries([ZERO] * k + list(a.coeffs), a.order)


def series_mul(a: PolySeries, b: PolySeries) -> PolySeries:
    """Cauchy product truncated to ``min(a.order, b.order)``."""
    order = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    nz_b = [j for j in range(order + 1) if bc[j]]
    out = []
    for n in range(order + 1):
        acc = ZERO
        for j in nz_b:
            if j > n:
                break
            if ac[n - j]:
                acc = acc + ac[n - j] * bc[j]
        out.append(acc)
    return PolySeries(out, order)


def series_inverse(a: PolySeries) -> PolySeries:
    """``b`` with ``a*b = 1`` to ``a.order``; constant term must be +-1."""
    a0 = a.coeffs[0]
    if a0 != ONE and a0 != -ONE:
        raise NotAUnit(f"constant term {format_poly(a0)} is not a unit")
    sign = a0.coeffs[0]
    ac = a.coeffs
    nz = [k for k in range(1, a.order + 1) if ac[k]]
    b = [a0]
    for n in range(1, a.order + 1):
        acc = ZERO
        for k in nz:
            if k > n:
                break
            acc = acc + ac[k] * b[n - k]
        b.append(acc * -sign)
    return PolySeries(b, a.order)


def expand_negative_binomial(h: Polynomial, exponent: int, order: int) -> PolySeries:
    """``(1 - h t)^(-exponent)``: coefficient of ``t^n`` is ``C(n+exponent-1, n) h^n``."""
    if exponent < 1:
        raise ValueError(f"exponent must be >= 1, got {exponent}")
    pw = HPowers(h)
    return PolySeries([pw[n] * binomial(n + exponent - 1, n) for n in range(order + 1)], order)


@dataclass(frozen=True)
class GfSpec:
    """Rational function ``numerator(t) / denominator(t)``, coefficients in ``Z[x]``."""

    numerator: tuple[Polynomial, ...]
    denominator: tuple[Polynomial, ...]

    def __post_init__(self):
        den = tuple(_as_poly(c) for c in self.denominator)
        object.__setattr__(self, "numerator", tuple(_as_poly(c) for c in self.numerator))
        object.__setattr__(self, "denominator", den)
        if not den or (den[0] != ONE and den[0] != -ONE):
            raise NotAUnit("denominator constant term must be +1 or -1")

    def expand(self, order: int) -> PolySeries:
        return series_mul(PolySeries(self.numerator, order),
                          series_inverse(PolySeries(self.denominator, order)))


def tpoly_mul(a: Sequence[Polynomial], b: Sequence[Polynomial]) -> list[Polynomial]:
    """Exact product of two finite polynomials in ``t``."""
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    return out


def tpoly_pow(a: Sequence[Polynomial], k: int) -> list[Polynomial]:
    out = [ONE]
    for _ in range(k):
        out = tpoly_mul(out, a)
    return out


def tpoly_add(a: Sequence[Polynomial], b: Sequence[Polynomial]) -> list[Polynomial]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else ZERO) + (b[i] if i < len(b) else ZERO) for i in range(n)]


def solve_nonhomogeneous_gf(a: Polynomial, b: Polynomial, g: PolySeries,
                            s0: Polynomial, s1: Polynomial,
                            r0: Polynomial = ZERO, r1: Polynomial = ZERO) -> PolySeries:
    """Generating function of ``s_n = a s_{n-1} + b s_{n-2} + r_n`` (n >= 2).

    ``g`` is the series of the forcing terms ``r_n``; ``r0``/``r1`` are its
    first two entries, which the recurrence never uses. The result has the
    order of ``g``.
    """
    a, b, s0, s1, r0, r1 = map(_as_poly, (a, b, s0, s1, r0, r1))
    order = g.order
    head = PolySeries([s0 - r0, s1 - s0 * a - r1], order)
    den = PolySeries([ONE, -a, -b], order)
    return series_mul(g + head, series_inverse(den))


def fib_complete_gf(params, order: int) -> PolySeries:
    """``t / (1 - h t - t^2)``."""
    h = _params(params).h
    return solve_nonhomogeneous_gf(h, ONE, PolySeries([], order), ZERO, ONE)


def lucas_complete_gf(params, order: int) -> PolySeries:
    """``(2 - h t) / (1 - h t - t^2)``."""
    h = _params(params).h
    return solve_nonhomogeneous_gf(h, ONE, PolySeries([], order), Polynomial.constant(2), h)


def default_order(l: int) -> int:
    return 2 * l + 26


def _closed_form(h: Polynomial, shift: int, first: Polynomial, second: Polynomial,
                 inner: list[Polynomial], l: int, order: int) -> PolySeries:
    # t^shift [first + (second - h first) t - inner / (1-ht)^(l+1)] / (1-ht-t^2),
    # put over the common denominator (1-ht)^(l+1) (1-ht-t^2)
    base = tpoly_pow([ONE, -h], l + 1)
    bracket = tpoly_mul([first, second - h * first], base)
    numerator = [ZERO] * shift + tpoly_add(bracket, [-c for c in inner])
    denominator = tpoly_mul(base, [ONE, -h, -ONE])
    return GfSpec(tuple(numerator), tuple(denominator)).expand(order)


def gf_fib_incomplete_closed(params, l: int, order: int | None = None) -> PolySeries:
    """Closed-form generating function of ``n -> F^l_{h,n}`` (zero below support)."""
    if l < 0:
        raise ValueError(f"l must be nonnegative, got {l}")
    order = default_order(l) if order is None else order
    if order < 2 * l + 1:
        raise ValueError(f"order must be >= 2l+1 = {2 * l + 1}")
    h = _params(params).h
    return _closed_form(h, 2 * l + 1, fib(h, 2 * l + 1), fib(h, 2 * l + 2),
                        [ZERO, ZERO, ONE], l, order)


class Variant(enum.Enum):
    """Which inner numerator to use in the Lucas closed form.

    ``AS_PRINTED`` subtracts ``t^2 (2 - t)``; ``CORRECTED_CANDIDATE``
    subtracts ``t^2 (2 - h t)``.
    """

    AS_PRINTED = "printed"
    CORRECTED_CANDIDATE = "candidate"


def gf_lucas_incomplete_closed(params, l: int, order: int | None = None,
                               variant: Variant = Variant.AS_PRINTED) -> PolySeries:
    """Closed-form generating function of ``n -> L^l_{h,n}`` in either variant."""
    if l < 0:
        raise ValueError(f"l must be nonnegative, got {l}")
    order = default_order(l) if order is None else order
    if order < 2 * l:
        raise ValueError(f"order must be >= 2l = {2 * l}")
    h = _params(params).h
    tail = -ONE if variant is Variant.AS_PRINTED else -h
    inner = [ZERO, ZERO, Polynomial.constant(2), tail]
    return _closed_form(h, 2 * l, lucas(h, 2 * l), lucas(h, 2 * l + 1), inner, l, order)


# -- forcing sequences for the shifted recurrences ------------------------

def fib_forcing(h: Polynomial, l: int, n: int) -> Polynomial:
    """``r_n`` for ``s_n = F^l_{h,n+2l+1}``: ``-C(n+l-2, n-2) h^(n-2)`` (0 for n < 2)."""
    if n < 2:
        return ZERO
    return -(h ** (n - 2)) * binomial(n + l - 2, n - 2)


def lucas_forcing(h: Polynomial, l: int, n: int) -> Polynomial:
    """``r_n`` for ``s_n = L^l_{h,n+2l}``: minus the dropped Lucas term.

    At ``n = 2`` this is ``-2`` for every ``l``, including ``l = 0``.
    """
    if n < 2:
        return ZERO
    m = n + 2 * l - 2
    return -(h ** (n - 2)) * lucas_term_coeff(m, l)


def forcing_series(forcing: Callable[[Polynomial, int, int], Polynomial],
                   h: Polynomial, l: int, order: int) -> PolySeries:
    return PolySeries([forcing(h, l, n) for n in range(order + 1)], order)


def fib_incomplete_via_forcing(params, l: int, order: int) -> PolySeries:
    """Series of ``F^l_{h,n}`` built from the shifted recurrence and its forcing."""
    h = _params(params).h
    inner_order = max(order - (2 * l + 1), 0)
    g = forcing_series(fib_forcing, h, l, inner_order)
    u = solve_nonhomogeneous_gf(h, ONE, g, fib(h, 2 * l + 1), fib(h, 2 * l + 2))
    return PolySeries([ZERO] * (2 * l + 1) + list(u.coeffs), order)


def lucas_incomplete_via_forcing(params, l: int, order: int) -> PolySeries:
    h = _params(params).h
    inner_order = max(order - 2 * l, 0)
    g = forcing_series(lucas_forcing, h, l, inner_order)
    u = solve_nonhomogeneous_gf(h, ONE, g, lucas(h, 2 * l), lucas(h, 2 * l + 1))
    return PolySeries([ZERO] * (2 * l) + list(u.coeffs), order)


# -- comparison against direct sequences ----------------------------------

@dataclass(frozen=True)
class Comparison:
    order: int
    first_mismatch: int | None = None
    closed: Polynomial | None = None
    direct: Polynomial | None = None

    @property
    def all_match(self) -> bool:
        return self.first_mismatch is None

    def to_json(self) -> dict:
        if self.all_match:
            return {"order": self.order, "status": "all_match"}
        return {
            "order": self.order,
            "status": "mismatch",
            "first_mismatch": self.first_mismatch,
            "closed": format_poly(self.closed),
            "direct": format_poly(self.direct),
        }


def compare_gf_to_sequence(closed: PolySeries, direct: Callable[[int], Polynomial],
                           order: int | None = None) -> Comparison:
    """Compare ``closed[n]`` with ``direct(n)`` for ``n = 0..order``."""
    order = closed.order if order is None else min(order, closed.order)
    for n in range(order + 1):
        d = direct(n)
        if closed.coeffs[n] != d:
            return Comparison(order, n, closed.coeffs[n], d)
    return Comparison(order)


def fib_incomplete_direct(params, l: int) -> Callable[[int], Polynomial]:
    """``n -> F^l_{h,n}`` from the truncated sum, zero-padded below support."""
    h = _params(params).h
    pw = HPowers(h)
    return lambda n: fib_incomplete(h, n, l, extended=True, powers=pw)


def lucas_incomplete_direct(params, l: int) -> Callable[[int], Polynomial]:
    h = _params(params).h
    pw = HPowers(h)
    return lambda n: lucas_incomplete(h, n, l, extended=True, powers=pw)


def adjudicate_lucas(params, l: int, order: int | None = None) -> dict[Variant, Comparison]:
    """Compare both Lucas closed-form variants with the direct sequence."""
    direct = lucas_incomplete_direct(params, l)
    return {
        v: compare_gf_to_sequence(gf_lucas_incomplete_closed(params, l, order, v), direct)
        for v in Variant
    }


__all__ = [
    "Comparison",
    "GfSpec",
    "NotAUnit",
    "PolySeries",
    "Variant",
    "adjudicate_lucas",
    "compare_gf_to_sequence",
    "expand_negative_binomial",
    "fib_complete_gf",
    "fib_forcing",
    "fib_incomplete_direct",
    "fib_term_coeff",
    "gf_fib_incomplete_closed",
    "gf_lucas_incomplete_closed",
    "lucas_complete_gf",
    "lucas_forcing",
    "lucas_incomplete_direct",
    "series_add",
    "series_inverse",
    "series_mul",
    "solve_nonhomogeneous_gf",
]
