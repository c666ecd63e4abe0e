"""Incomplete h(x)-Fibonacci and h(x)-Lucas polynomials.

``F^l_{h,n}`` keeps the first ``l+1`` terms of the binomial sum for
``F_{h,n}``; ``L^l_{h,n}`` does the same for ``L_{h,n}``. Strict indices
are ``0 <= l <= (n-1)//2`` (Fibonacci, ``n >= 1``) and ``0 <= l <= n//2``
(Lucas, ``n >= 0``).

With ``extended=True`` two zero conventions apply: a negative ``l`` is the
empty sum, and an index below the support (``n < 2l+1`` for Fibonacci,
``n < 2l`` for Lucas) is 0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .families import (
    FamilyParams,
    HPowers,
    _params,
    fib,
    fib_sequence,
    fib_term_coeff,
    lucas,
    lucas_sequence,
    lucas_term_coeff,
)
from .polynomial import ONE, ZERO, Polynomial


class IndexOutOfRange(ValueError):
    pass


class Kind(enum.Enum):
    FIBONACCI = "fib"
    LUCAS = "lucas"


@dataclass(frozen=True)
class IncompleteIndex:
    n: int
    l: int
    kind: Kind = Kind.FIBONACCI

    def max_l(self) -> int:
        return max_l(self.kind, self.n)

    def is_strict(self) -> bool:
        if self.kind is Kind.FIBONACCI:
            return self.n >= 1 and 0 <= self.l <= (self.n - 1) // 2
        return self.n >= 0 and 0 <= self.l <= self.n // 2

    def in_support(self) -> bool:
        """False where the extended convention forces the value 0."""
        if self.l < 0:
            return False
        if self.kind is Kind.FIBONACCI:
            return self.n >= 2 * self.l + 1
        return self.n >= 2 * self.l


def max_l(kind: Kind, n: int) -> int:
    return (n - 1) // 2 if kind is Kind.FIBONACCI else n // 2


def _check(idx: IncompleteIndex, extended: bool) -> bool:
    """Return False if the value is a conventional zero; raise if invalid."""
    if idx.is_strict():
        return True
    if extended and not idx.in_support():
        return False
    raise IndexOutOfRange(
        f"{idx.kind.value} incomplete index n={idx.n}, l={idx.l} outside "
        f"0 <= l <= {max_l(idx.kind, idx.n)}"
    )


def fib_incomplete(params, n: int, l: int, *, extended: bool = False,
                   powers: HPowers | None = None) -> Polynomial:
    """``F^l_{h,n} = sum_{i<=l} C(n-1-i, i) h^(n-1-2i)``."""
    if not _check(IncompleteIndex(n, l, Kind.FIBONACCI), extended):
        return ZERO
    pw = powers or HPowers(_params(params).h)
    total = ZERO
    for i in range(l + 1):
        total = total + pw[n - 1 - 2 * i] * fib_term_coeff(n, i)
    return total


def lucas_incomplete(params, n: int, l: int, *, extended: bool = False,
                     powers: HPowers | None = None) -> Polynomial:
    """``L^l_{h,n} = sum_{i<=l} n/(n-i) C(n-i, i) h^(n-2i)``; ``L^0_{h,0} = 2``."""
    if not _check(IncompleteIndex(n, l, Kind.LUCAS), extended):
        return ZERO
    pw = powers or HPowers(_params(params).h)
    total = ZERO
    for i in range(l + 1):
        total = total + pw[n - 2 * i] * lucas_term_coeff(n, i)
    return total


def incomplete(params, idx: IncompleteIndex, *, extended: bool = False) -> Polynomial:
    if idx.kind is Kind.FIBONACCI:
        return fib_incomplete(params, idx.n, idx.l, extended=extended)
    return lucas_incomplete(params, idx.n, idx.l, extended=extended)


class Special(enum.Enum):
    L0 = "l0"
    L1 = "l1"
    L2 = "l2"
    FULL = "full"
    PENULTIMATE = "penultimate"


_FIB_MIN_N = {Special.L0: 1, Special.L1: 3, Special.L2: 5, Special.FULL: 1,
              Special.PENULTIMATE: 3}
_LUCAS_MIN_N = {Special.L0: 1, Special.L1: 2, Special.L2: 4, Special.FULL: 1,
                Special.PENULTIMATE: 2}


def fib_incomplete_special(params, n: int, which: Special) -> Polynomial:
    """Closed forms of ``F^l_{h,n}`` for ``l`` in {0, 1, 2, max, max-1}."""
    if n < _FIB_MIN_N[which]:
        raise IndexOutOfRange(f"{which.value} needs n >= {_FIB_MIN_N[which]}, got {n}")
    h = _params(params).h
    pw = HPowers(h)
    if which is Special.L0:
        return pw[n - 1]
    if which is Special.L1:
        return pw[n - 1] + (n - 2) * pw[n - 3]
    if which is Special.L2:
        return pw[n - 1] + (n - 2) * pw[n - 3] + ((n - 4) * (n - 3) // 2) * pw[n - 5]
    full = fib(h, n)
    if which is Special.FULL:
        return full
    if n % 2 == 0:
        return full - (n // 2) * h
    return full - ONE


def lucas_incomplete_special(params, n: int, which: Special) -> Polynomial:
    """Closed forms of ``L^l_{h,n}`` for ``l`` in {0, 1, 2, max, max-1}."""
    if n < _LUCAS_MIN_N[which]:
        raise IndexOutOfRange(f"{which.value} needs n >= {_LUCAS_MIN_N[which]}, got {n}")
    h = _params(params).h
    pw = HPowers(h)
    if which is Special.L0:
        return pw[n]
    if which is Special.L1:
        return pw[n] + n * pw[n - 2]
    if which is Special.L2:
        return pw[n] + n * pw[n - 2] + (n * (n - 3) // 2) * pw[n - 4]
    full = lucas(h, n)
    if which is Special.FULL:
        return full
    if n % 2 == 0:
        return full - 2
    return full - n * h


def special_l(kind: Kind, n: int, which: Special) -> int:
    """The superscript ``l`` a special case refers to."""
    return {
        Special.L0: 0,
        Special.L1: 1,
        Special.L2: 2,
        Special.FULL: max_l(kind, n),
        Special.PENULTIMATE: max_l(kind, n) - 1,
    }[which]


# -- recurrence route ------------------------------------------------------

def fib_incomplete_by_recurrence(params, l: int, n_max: int) -> list[Polynomial]:
    """``[F^l_{h,0}, ..., F^l_{h,n_max}]`` with below-support zeros.

    Seeds ``F^l_{h,2l+1} = F_{h,2l+1}`` and ``F^l_{h,2l+2} = F_{h,2l+2}``, then
    ``F^l_{n+2} = h F^l_{n+1} + F^l_n - C(n-1-l, l) h^(n-1-2l)`` for
    ``n >= 2l+1``. Independent of the truncated-sum definition.
    """
    h = _params(params).h
    pw = HPowers(h)
    full = fib_sequence(h, max(n_max, 2 * l + 2))
    out = [ZERO] * (n_max + 1)
    for m in (2 * l + 1, 2 * l + 2):
        if m <= n_max:
            out[m] = full[m]
    for m in range(2 * l + 3, n_max + 1):
        n = m - 2
        out[m] = h * out[m - 1] + out[m - 2] - fib_term_coeff(n, l) * pw[n - 1 - 2 * l]
    return out


def lucas_incomplete_by_recurrence(params, l: int, n_max: int) -> list[Polynomial]:
    """``[L^l_{h,0}, ..., L^l_{h,n_max}]`` from seeds ``L_{h,2l}``, ``L_{h,2l+1}``.

    Uses ``L^l_{n+2} = h L^l_{n+1} + L^l_n - n/(n-l) C(n-l, l) h^(n-2l)``
    for ``n >= 2l``.
    """
    h = _params(params).h
    pw = HPowers(h)
    full = lucas_sequence(h, max(n_max, 2 * l + 1))
    out = [ZERO] * (n_max + 1)
    for m in (2 * l, 2 * l + 1):
        if m <= n_max:
            out[m] = full[m]
    for m in range(2 * l + 2, n_max + 1):
        n = m - 2
        out[m] = h * out[m - 1] + out[m - 2] - lucas_term_coeff(n, l) * pw[n - 2 * l]
    return out


class IncompleteTable:
    """Memoized ``F^l_{h,n}``, ``L^l_{h,n}``, ``F_{h,n}``, ``L_{h,n}`` for one ``h``.

    Values use the extended conventions. A table is owned by a single sweep
    and never shared between callers.
    """

    def __init__(self, h: Polynomial | FamilyParams):
        self.h = _params(h).h
        self.powers = HPowers(self.h)
        self._fib_rows: dict[int, list[Polynomial]] = {}
        self._lucas_rows: dict[int, list[Polynomial]] = {}
        self._fib: list[Polynomial] = [ZERO, ONE]
        self._lucas: list[Polynomial] = [Polynomial.constant(2), self.h]

    def fib(self, n: int) -> Polynomial:
        seq = self._fib
        while len(seq) <= n:
            seq.append(self.h * seq[-1] + seq[-2])
        return seq[n]

    def lucas(self, n: int) -> Polynomial:
        seq = self._lucas
        while len(seq) <= n:
            seq.append(self.h * seq[-1] + seq[-2])
        return seq[n]

    def _row(self, rows, n, kind):
        row = rows.get(n)
        if row is None:
            # partial sums over l = 0..max_l
            row = []
            total = ZERO
            term = fib_term_coeff if kind is Kind.FIBONACCI else lucas_term_coeff
            top = n - 1 if kind is Kind.FIBONACCI else n
            for i in range(max_l(kind, n) + 1):
                total = total + self.powers[top - 2 * i] * term(n, i)
                row.append(total)
            rows[n] = row
        return row

    def F(self, n: int, l: int) -> Polynomial:
        """Extended ``F^l_{h,n}``."""
        if l < 0 or n < 2 * l + 1:
            return ZERO
        return self._row(self._fib_rows, n, Kind.FIBONACCI)[l]

    def L(self, n: int, l: int) -> Polynomial:
        """Extended ``L^l_{h,n}``."""
        if l < 0 or n < 2 * l:
            return ZERO
        return self._row(self._lucas_rows, n, Kind.LUCAS)[l]
