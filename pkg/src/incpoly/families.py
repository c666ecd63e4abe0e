"""Complete h(x)-Fibonacci and h(x)-Lucas polynomials.

Both families satisfy ``P(n+1) = h*P(n) + P(n-1)``; the Fibonacci kind
starts from ``0, 1`` and the Lucas kind from ``2, h``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polynomial import ONE, ZERO, Polynomial, binomial


@dataclass(frozen=True)
class FamilyParams:
    """The generating polynomial ``h``. Any polynomial is admissible."""

    h: Polynomial


class HPowers:
    """Lazily extended list ``h**0, h**1, ...`` for one ``h``.

    Each instance is private to its caller; nothing is shared globally.
    """

    def __init__(self, h: Polynomial):
        self.h = h
        self._pows = [ONE]

    def __getitem__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError(f"negative power {k}")
        pows = self._pows
        while len(pows) <= k:
            pows.append(pows[-1] * self.h)
        return pows[k]


def _params(params) -> FamilyParams:
    if isinstance(params, Polynomial):
        return FamilyParams(params)
    return params


def _rolling(h: Polynomial, a: Polynomial, b: Polynomial, n: int) -> Polynomial:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    for _ in range(n):
        a, b = b, h * b + a
    return a


def fib(params, n: int) -> Polynomial:
    """``F_{h,n}`` by the recurrence from ``F_0 = 0``, ``F_1 = 1``."""
    return _rolling(_params(params).h, ZERO, ONE, n)


def lucas(params, n: int) -> Polynomial:
    """``L_{h,n}`` by the recurrence from ``L_0 = 2``, ``L_1 = h``."""
    h = _params(params).h
    return _rolling(h, Polynomial.constant(2), h, n)


def fib_sequence(params, n_max: int) -> list[Polynomial]:
    """``[F_{h,0}, ..., F_{h,n_max}]``."""
    h = _params(params).h
    out = [ZERO, ONE]
    while len(out) <= n_max:
        out.append(h * out[-1] + out[-2])
    return out[: n_max + 1]


def lucas_sequence(params, n_max: int) -> list[Polynomial]:
    h = _params(params).h
    out = [Polynomial.constant(2), h]
    while len(out) <= n_max:
        out.append(h * out[-1] + out[-2])
    return out[: n_max + 1]


def fib_term_coeff(n: int, i: int) -> int:
    """Coefficient ``C(n-1-i, i)`` of ``h^(n-1-2i)`` in the Fibonacci sum."""
    return binomial(n - 1 - i, i)


def lucas_term_coeff(n: int, i: int) -> int:
    """Coefficient ``n/(n-i) * C(n-i, i)`` of ``h^(n-2i)`` in the Lucas sum.

    Computed as ``n*C(n-i, i) // (n-i)``, which is always exact. The 0/0 case
    ``n = i = 0`` is defined as 2 so that the sum gives ``L_0 = 2``.
    """
    if n == 0 and i == 0:
        return 2
    c = binomial(n - i, i)
    if not c:
        return 0
    q, r = divmod(n * c, n - i)
    if r:
        raise ArithmeticError(f"non-integral Lucas coefficient at n={n}, i={i}")
    return q


def fib_explicit(params, n: int, *, powers: HPowers | None = None) -> Polynomial:
    """``F_{h,n}`` from the binomial sum; requires ``n >= 1``."""
    if n < 1:
        raise ValueError(f"explicit formula needs n >= 1, got {n}")
    pw = powers or HPowers(_params(params).h)
    total = ZERO
    for i in range((n - 1) // 2 + 1):
        total = total + pw[n - 1 - 2 * i] * fib_term_coeff(n, i)
    return total


def lucas_explicit(params, n: int, *, powers: HPowers | None = None) -> Polynomial:
    """``L_{h,n}`` from the weighted binomial sum; requires ``n >= 1``."""
    if n < 1:
        raise ValueError(f"explicit formula needs n >= 1, got {n}")
    pw = powers or HPowers(_params(params).h)
    total = ZERO
    for i in range(n // 2 + 1):
        total = total + pw[n - 2 * i] * lucas_term_coeff(n, i)
    return total
