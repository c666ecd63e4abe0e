"""Catalog of identities for the incomplete polynomials, and a grid checker.

Every identity is stored as a pair of polynomial side-expressions. Where
an identity carries a rational factor, both sides are already multiplied
by the exact denominator, so checking reduces to polynomial equality.
Incomplete values with a negative superscript or an index below the
support read as 0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .families import _params, fib_term_coeff, lucas_term_coeff
from .incomplete import IncompleteTable
from .polynomial import ZERO, Polynomial, binomial, derivative, format_poly, to_json

#: counterexamples kept per report
MAX_COUNTEREXAMPLES = 16


class ConstraintViolation(ValueError):
    """Arguments fall outside the identity's domain."""


class IdentityId(enum.Enum):
    FIB_REC_SHIFT = "FIB_REC_SHIFT"
    FIB_REC_NONHOM = "FIB_REC_NONHOM"
    FIB_BINOM_SUM = "FIB_BINOM_SUM"
    FIB_GEOM_SUM = "FIB_GEOM_SUM"
    DERIV_FIB = "DERIV_FIB"
    WEIGHTED_SUM_FIB = "WEIGHTED_SUM_FIB"
    ROW_SUM_FIB = "ROW_SUM_FIB"
    LUCAS_FROM_FIB = "LUCAS_FROM_FIB"
    LUCAS_REC_SHIFT = "LUCAS_REC_SHIFT"
    LUCAS_REC_NONHOM = "LUCAS_REC_NONHOM"
    H_LUCAS_DIFF = "H_LUCAS_DIFF"
    LUCAS_BINOM_SUM = "LUCAS_BINOM_SUM"
    LUCAS_GEOM_SUM = "LUCAS_GEOM_SUM"
    WEIGHTED_SUM_LUCAS = "WEIGHTED_SUM_LUCAS"
    ROW_SUM_LUCAS = "ROW_SUM_LUCAS"
    SPECIAL_FIB_PENULT = "SPECIAL_FIB_PENULT"
    SPECIAL_LUCAS_PENULT = "SPECIAL_LUCAS_PENULT"
    LUCAS_COMPLETE_RELATION = "LUCAS_COMPLETE_RELATION"


Args = dict
Sides = Callable[[IncompleteTable, Args], "tuple[Polynomial, Polynomial]"]


@dataclass(frozen=True)
class Identity:
    """One checkable identity.

    ``admissible`` decides whether an argument dict lies in the domain;
    ``grid`` yields the admissible arguments with every index parameter at
    most ``n_max`` (sweep order: n, then l, then s).
    """

    tag: IdentityId
    statement: str
    arity: tuple[str, ...]
    admissible: Callable[[Args], bool]
    grid: Callable[[int], Iterator[Args]]
    sides: Sides
    clearing: str = "1"


# -- grids -----------------------------------------------------------------

def _n_grid(n_min: int):
    def grid(n_max):
        for n in range(n_min, n_max + 1):
            yield {"n": n}
    return grid


def _nl_grid(n_min: int, l_top: Callable[[int], int]):
    def grid(n_max):
        for n in range(n_min, n_max + 1):
            for l in range(l_top(n) + 1):
                yield {"n": n, "l": l}
    return grid


def _has(args, names):
    return all(isinstance(args.get(k), int) for k in names)


# -- side expressions ------------------------------------------------------

def _fib_rec_shift(t, a):
    n, l = a["n"], a["l"]
    return t.F(n + 2, l + 1), t.h * t.F(n + 1, l + 1) + t.F(n, l)


def _fib_rec_nonhom(t, a):
    n, l = a["n"], a["l"]
    forcing = t.powers[n - 1 - 2 * l] * fib_term_coeff(n, l)
    return t.F(n + 2, l), t.h * t.F(n + 1, l) + t.F(n, l) - forcing


def _fib_binom_sum(t, a):
    n, l, s = a["n"], a["l"], a["s"]
    lhs = ZERO
    for i in range(s + 1):
        lhs = lhs + t.F(n + i, l + i) * t.powers[i] * binomial(s, i)
    return lhs, t.F(n + 2 * s, l + s)


def _fib_geom_sum(t, a):
    n, l, s = a["n"], a["l"], a["s"]
    lhs = ZERO
    for i in range(s):
        lhs = lhs + t.F(n + i, l) * t.powers[s - 1 - i]
    return lhs, t.F(n + s + 1, l + 1) - t.powers[s] * t.F(n + 1, l + 1)


def _h2p4(t):
    return t.powers[2] + 4


def _deriv_fib(t, a):
    n = a["n"]
    lhs = _h2p4(t) * derivative(t.fib(n))
    rhs = derivative(t.h) * (n * t.lucas(n) - t.h * t.fib(n))
    return lhs, rhs


def _weighted_fib(t, n):
    total = ZERO
    for i in range((n - 1) // 2 + 1):
        total = total + t.powers[n - 1 - 2 * i] * (i * fib_term_coeff(n, i))
    return total


def _weighted_sum_fib(t, a):
    n = a["n"]
    q = _h2p4(t)
    lhs = 2 * q * _weighted_fib(t, n)
    rhs = (n * q - 4) * t.fib(n) - n * t.h * t.lucas(n)
    return lhs, rhs


def _row_sum_fib(t, a):
    n = a["n"]
    q = _h2p4(t)
    total = ZERO
    for l in range((n - 1) // 2 + 1):
        total = total + t.F(n, l)
    lead = 4 if n % 2 == 0 else t.powers[2] + 8
    return 2 * q * total, lead * t.fib(n) + n * t.h * t.lucas(n)


def _lucas_from_fib(t, a):
    n, l = a["n"], a["l"]
    return t.L(n, l), t.F(n - 1, l - 1) + t.F(n + 1, l)


def _lucas_rec_shift(t, a):
    n, l = a["n"], a["l"]
    return t.L(n + 2, l + 1), t.h * t.L(n + 1, l + 1) + t.L(n, l)


def _lucas_rec_nonhom(t, a):
    n, l = a["n"], a["l"]
    forcing = t.powers[n - 2 * l] * lucas_term_coeff(n, l)
    return t.L(n + 2, l), t.h * t.L(n + 1, l) + t.L(n, l) - forcing


def _h_lucas_diff(t, a):
    n, l = a["n"], a["l"]
    return t.h * t.L(n, l), t.F(n + 2, l) - t.F(n - 2, l - 2)


def _lucas_binom_sum(t, a):
    n, l, s = a["n"], a["l"], a["s"]
    lhs = ZERO
    for i in range(s + 1):
        lhs = lhs + t.L(n + i, l + i) * t.powers[i] * binomial(s, i)
    return lhs, t.L(n + 2 * s, l + s)


def _lucas_geom_sum(t, a):
    n, l, s = a["n"], a["l"], a["s"]
    lhs = ZERO
    for i in range(s):
        lhs = lhs + t.L(n + i, l) * t.powers[s - 1 - i]
    return lhs, t.L(n + s + 1, l + 1) - t.powers[s] * t.L(n + 1, l + 1)


def _weighted_sum_lucas(t, a):
    n = a["n"]
    total = ZERO
    for i in range(n // 2 + 1):
        total = total + t.powers[n - 2 * i] * (i * lucas_term_coeff(n, i))
    return 2 * total, n * (t.lucas(n) - t.h * t.fib(n))


def _row_sum_lucas(t, a):
    n = a["n"]
    total = ZERO
    for l in range(n // 2 + 1):
        total = total + t.L(n, l)
    lead = 2 if n % 2 == 0 else 1
    return 2 * total, lead * t.lucas(n) + n * t.h * t.fib(n)


def _special_fib_penult(t, a):
    n = a["n"]
    lhs = 2 * t.F(n, (n - 3) // 2)
    if n % 2 == 0:
        return lhs, 2 * t.fib(n) - n * t.h
    return lhs, 2 * (t.fib(n) - 1)


def _special_lucas_penult(t, a):
    n = a["n"]
    lhs = t.L(n, (n - 2) // 2)
    if n % 2 == 0:
        return lhs, t.lucas(n) - 2
    return lhs, t.lucas(n) - n * t.h


def _lucas_complete(t, a):
    n = a["n"]
    return t.lucas(n), t.fib(n - 1) + t.fib(n + 1)


# -- domains ---------------------------------------------------------------

def _binom_grid(l_top):
    def grid(n_max):
        for n in range(1, n_max + 1):
            for l in range(n + 1):
                for s in range(n + 1):
                    if l <= l_top(n, s):
                        yield {"n": n, "l": l, "s": s}
    return grid


def _geom_grid(n_floor):
    # s >= 1 and n + s <= n_max keep every sweep finite
    def grid(n_max):
        for n in range(1, n_max + 1):
            for l in range(n + 1):
                if n < n_floor(l):
                    continue
                for s in range(1, n_max - n + 1):
                    yield {"n": n, "l": l, "s": s}
    return grid


def _catalog() -> dict[IdentityId, Identity]:
    I = IdentityId
    entries = [
        Identity(
            I.FIB_REC_SHIFT,
            "F[l+1](n+2) = h F[l+1](n+1) + F[l](n),  0 <= l <= (n-2)/2",
            ("n", "l"),
            lambda a: _has(a, "nl") and a["n"] >= 2 and 0 <= a["l"] <= (a["n"] - 2) // 2,
            _nl_grid(2, lambda n: (n - 2) // 2),
            _fib_rec_shift,
        ),
        Identity(
            I.FIB_REC_NONHOM,
            "F[l](n+2) = h F[l](n+1) + F[l](n) - C(n-1-l, l) h^(n-1-2l),  n >= 2l+1",
            ("n", "l"),
            lambda a: _has(a, "nl") and a["l"] >= 0 and a["n"] >= 2 * a["l"] + 1,
            _nl_grid(1, lambda n: (n - 1) // 2),
            _fib_rec_nonhom,
        ),
        Identity(
            I.FIB_BINOM_SUM,
            "sum_i C(s,i) F[l+i](n+i) h^i = F[l+s](n+2s),  0 <= l <= (n-s-1)/2",
            ("n", "l", "s"),
            lambda a: _has(a, "nls") and a["s"] >= 0 and 0 <= a["l"]
            and 2 * a["l"] <= a["n"] - a["s"] - 1,
            _binom_grid(lambda n, s: (n - s - 1) // 2),
            _fib_binom_sum,
        ),
        Identity(
            I.FIB_GEOM_SUM,
            "sum_{i<s} F[l](n+i) h^(s-1-i) = F[l+1](n+s+1) - h^s F[l+1](n+1),  n >= 2l+2",
            ("n", "l", "s"),
            lambda a: _has(a, "nls") and a["l"] >= 0 and a["s"] >= 1
            and a["n"] >= 2 * a["l"] + 2,
            _geom_grid(lambda l: 2 * l + 2),
            _fib_geom_sum,
        ),
        Identity(
            I.DERIV_FIB,
            "(h^2+4) F'(n) = h' (n L(n) - h F(n))",
            ("n",),
            lambda a: _has(a, "n") and a["n"] >= 1,
            _n_grid(1),
            _deriv_fib,
            "h^2+4",
        ),
        Identity(
            I.WEIGHTED_SUM_FIB,
            "2(h^2+4) sum_i i C(n-1-i,i) h^(n-1-2i) = ((h^2+4)n - 4) F(n) - n h L(n)",
            ("n",),
            lambda a: _has(a, "n") and a["n"] >= 1,
            _n_grid(1),
            _weighted_sum_fib,
            "2(h^2+4)",
        ),
        Identity(
            I.ROW_SUM_FIB,
            "2(h^2+4) sum_l F[l](n) = 4F(n) + nhL(n) (n even), (h^2+8)F(n) + nhL(n) (n odd)",
            ("n",),
            lambda a: _has(a, "n") and a["n"] >= 1,
            _n_grid(1),
            _row_sum_fib,
            "2(h^2+4)",
        ),
        Identity(
            I.LUCAS_FROM_FIB,
            "L[l](n) = F[l-1](n-1) + F[l](n+1),  0 <= l <= n/2",
            ("n", "l"),
            lambda a: _has(a, "nl") and a["n"] >= 1 and 0 <= a["l"] <= a["n"] // 2,
            _nl_grid(1, lambda n: n // 2),
            _lucas_from_fib,
        ),
        Identity(
            I.LUCAS_REC_SHIFT,
            "L[l+1](n+2) = h L[l+1](n+1) + L[l](n),  0 <= l <= (n-1)/2",
            ("n", "l"),
            lambda a: _has(a, "nl") and a["n"] >= 1 and 0 <= a["l"] <= (a["n"] - 1) // 2,
            _nl_grid(1, lambda n: (n - 1) // 2),
            _lucas_rec_shift,
        ),
        Identity(
            I.LUCAS_REC_NONHOM,
            "L[l](n+2) = h L[l](n+1) + L[l](n) - n/(n-l) C(n-l,l) h^(n-2l),  n >= 2l",
            ("n", "l"),
            lambda a: _has(a, "nl") and a["l"] >= 0 and a["n"] >= 2 * a["l"],
            _nl_grid(0, lambda n: n // 2),
            _lucas_rec_nonhom,
        ),
        Identity(
            I.H_LUCAS_DIFF,
            "h L[l](n) = F[l](n+2) - F[l-2](n-2),  0 <= l <= (n-1)/2",
            ("n", "l"),
            lambda a: _has(a, "nl") and a["n"] >= 1 and 0 <= a["l"] <= (a["n"] - 1) // 2,
            _nl_grid(1, lambda n: (n - 1) // 2),
            _h_lucas_diff,
        ),
        Identity(
            I.LUCAS_BINOM_SUM,
            "sum_i C(s,i) L[l+i](n+i) h^i = L[l+s](n+2s),  0 <= l <= (n-s)/2",
            ("n", "l", "s"),
            lambda a: _has(a, "nls") and a["s"] >= 0 and 0 <= a["l"]
            and 2 * a["l"] <= a["n"] - a["s"],
            _binom_grid(lambda n, s: (n - s) // 2),
            _lucas_binom_sum,
        ),
        Identity(
            I.LUCAS_GEOM_SUM,
            "sum_{i<s} L[l](n+i) h^(s-1-i) = L[l+1](n+s+1) - h^s L[l+1](n+1),  n >= 2l+1",
            ("n", "l", "s"),
            lambda a: _has(a, "nls") and a["l"] >= 0 and a["s"] >= 1
            and a["n"] >= 2 * a["l"] + 1,
            _geom_grid(lambda l: 2 * l + 1),
            _lucas_geom_sum,
        ),
        Identity(
            I.WEIGHTED_SUM_LUCAS,
            "2 sum_i i n/(n-i) C(n-i,i) h^(n-2i) = n (L(n) - h F(n))",
            ("n",),
            lambda a: _has(a, "n") and a["n"] >= 1,
            _n_grid(1),
            _weighted_sum_lucas,
            "2",
        ),
        Identity(
            I.ROW_SUM_LUCAS,
            "2 sum_l L[l](n) = 2L(n) + nhF(n) (n even), L(n) + nhF(n) (n odd)",
            ("n",),
            lambda a: _has(a, "n") and a["n"] >= 1,
            _n_grid(1),
            _row_sum_lucas,
            "2",
        ),
        Identity(
            I.SPECIAL_FIB_PENULT,
            "2 F[(n-3)/2](n) = 2F(n) - nh (n even), 2F(n) - 2 (n odd),  n >= 3",
            ("n",),
            lambda a: _has(a, "n") and a["n"] >= 3,
            _n_grid(3),
            _special_fib_penult,
            "2",
        ),
        Identity(
            I.SPECIAL_LUCAS_PENULT,
            "L[(n-2)/2](n) = L(n) - 2 (n even), L(n) - nh (n odd),  n >= 2",
            ("n",),
            lambda a: _has(a, "n") and a["n"] >= 2,
            _n_grid(2),
            _special_lucas_penult,
        ),
        Identity(
            I.LUCAS_COMPLETE_RELATION,
            "L(n) = F(n-1) + F(n+1),  n >= 1",
            ("n",),
            lambda a: _has(a, "n") and a["n"] >= 1,
            _n_grid(1),
            _lucas_complete,
        ),
    ]
    return {e.tag: e for e in entries}


CATALOG: dict[IdentityId, Identity] = _catalog()


def _resolve(identity) -> Identity:
    if isinstance(identity, Identity):
        return identity
    if isinstance(identity, str):
        identity = IdentityId(identity)
    return CATALOG[identity]


def identity_sides(identity, params, args: Args, *, table: IncompleteTable | None = None):
    """Return ``(lhs, rhs)`` for one identity at one argument point.

    Raises :class:`ConstraintViolation` when ``args`` is outside the domain.
    """
    ident = _resolve(identity)
    if not ident.admissible(args):
        raise ConstraintViolation(f"{ident.tag.value}: arguments {args} outside {ident.statement!r}")
    t = table if table is not None else IncompleteTable(_params(params).h)
    return ident.sides(t, args)


@dataclass(frozen=True)
class Counterexample:
    args: Args
    lhs: Polynomial
    rhs: Polynomial

    def to_json(self) -> dict:
        return {"args": dict(self.args), "lhs": to_json(self.lhs), "rhs": to_json(self.rhs)}


@dataclass(frozen=True)
class IdentityReport:
    identity: IdentityId
    h_description: str
    n_max: int
    points: int
    counterexamples: tuple[Counterexample, ...] = field(default=())
    failures: int = 0

    @property
    def status(self) -> str:
        return "all_pass" if not self.counterexamples else "falsified"

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "identity": self.identity.value,
            "h": self.h_description,
            "n_max": self.n_max,
            "points": self.points,
            "status": self.status,
            "failures": self.failures,
            "counterexamples": [c.to_json() for c in self.counterexamples],
        }


def verify_identity_range(identity, params, n_max: int, *,
                          table: IncompleteTable | None = None) -> IdentityReport:
    """Check an identity at every admissible grid point with indices <= ``n_max``."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    ident = _resolve(identity)
    h = _params(params).h
    t = table if table is not None else IncompleteTable(h)
    points = 0
    failures = 0
    bad: list[Counterexample] = []
    for args in ident.grid(n_max):
        points += 1
        lhs, rhs = ident.sides(t, args)
        if lhs != rhs:
            failures += 1
            if len(bad) < MAX_COUNTEREXAMPLES:
                bad.append(Counterexample(dict(args), lhs, rhs))
    return IdentityReport(ident.tag, format_poly(h), n_max, points, tuple(bad), failures)


def verify_catalog(params, n_max: int, identities=None) -> list[IdentityReport]:
    """Run every identity (or the given ones) for one ``h``, sharing one table."""
    h = _params(params).h
    t = IncompleteTable(h)
    chosen = list(CATALOG.values()) if identities is None else [_resolve(i) for i in identities]
    return [verify_identity_range(i, h, n_max, table=t) for i in chosen]
