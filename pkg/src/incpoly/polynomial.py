"""Dense univariate polynomials over the integers.

Coefficients are stored degree-ascending as a tuple of Python ints, with
trailing zeros stripped; the zero polynomial has no coefficients.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Sequence

from .kernels import convolve, horner

#: degree of the zero polynomial; compares below every int
NEG_INF = float("-inf")


class NotDivisible(ArithmeticError):
    """Raised by :func:`divide_exact` when the divisor does not divide exactly."""


class PolynomialSyntaxError(ValueError):
    """Malformed polynomial text. ``pos`` is the 0-based offending offset."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


def _strip(coeffs: list[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Polynomial:
    """Immutable integer polynomial in ``x``."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
            cs.append(int(c))
        object.__setattr__(self, "coeffs", _strip(cs))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, coeffs) -> "Polynomial":
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", _strip(list(coeffs)))
        object.__setattr__(p, "_hash", None)
        return p

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls._raw([c])

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "Polynomial":
        return cls._raw([0] * degree + [c])

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int) and not isinstance(other, bool):
            return self.coeffs == _strip([other])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.coeffs))
        return self._hash

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    def __neg__(self):
        return Polynomial._raw([-c for c in self.coeffs])

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return scale(self, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return pow_(self, k)

    def __call__(self, v: int) -> int:
        return eval_int(self, v)


def _coerce(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Polynomial._raw([value])
    return NotImplemented


ZERO = Polynomial()
ONE = Polynomial([1])
X = Polynomial([0, 1])


def add(a: Polynomial, b: Polynomial) -> Polynomial:
    ca, cb = a.coeffs, b.coeffs
    if len(ca) < len(cb):
        ca, cb = cb, ca
    out = list(ca)
    for i, c in enumerate(cb):
        out[i] += c
    return Polynomial._raw(out)


def sub(a: Polynomial, b: Polynomial) -> Polynomial:
    return add(a, -b)


def scale(a: Polynomial, k: int) -> Polynomial:
    if not k:
        return ZERO
    return Polynomial._raw([k * c for c in a.coeffs])


def mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return Polynomial._raw(convolve(a.coeffs, b.coeffs))


def pow_(a: Polynomial, k: int) -> Polynomial:
    """Return ``a**k`` by repeated squaring; ``pow_(0, 0) == 1``."""
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    result = ONE
    base = a
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def derivative(a: Polynomial) -> Polynomial:
    return Polynomial._raw([i * c for i, c in enumerate(a.coeffs)][1:])


def divide_exact(a: Polynomial, b: Polynomial) -> Polynomial:
    """Return ``q`` with ``q * b == a``.

    Raises :class:`NotDivisible` if the integer long division leaves a
    remainder or needs a non-integral quotient coefficient, and
    :class:`ZeroDivisionError` if ``b`` is zero.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    lb = b.coeffs[-1]
    if len(rem) - 1 < db:
        if rem:
            raise NotDivisible(f"{format_poly(b)} does not divide {format_poly(a)}")
        return ZERO
    q = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if not c:
            continue
        qc, r = divmod(c, lb)
        if r:
            raise NotDivisible(f"{format_poly(b)} does not divide {format_poly(a)}")
        q[k - db] = qc
        for j, bc in enumerate(b.coeffs):
            rem[k - db + j] -= qc * bc
    if any(rem[:db]):
        raise NotDivisible(f"{format_poly(b)} does not divide {format_poly(a)}")
    return Polynomial._raw(q)


def eval_int(a: Polynomial, v: int) -> int:
    return horner(a.coeffs, v)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with ``C(n, k) = 0`` for ``k < 0`` or ``k > n``.

    Negative ``n`` (which arises from shifted indices in the identity
    checks) also yields 0.
    """
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


# -- text form -------------------------------------------------------------

def format_poly(p: Polynomial, var: str = "x", times: str = "*", spaced: bool = True) -> str:
    """Render ``p`` degree-descending, e.g. ``3*x^2 - x + 1``.

    ``times`` joins a coefficient to the variable; pass ``""`` for the
    juxtaposed style ``3h^2``.
    """
    if not p.coeffs:
        return "0"
    parts = []
    for d in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[d]
        if not c:
            continue
        mag = abs(c)
        if d == 0:
            body = str(mag)
        else:
            mono = var if d == 1 else f"{var}^{d}"
            body = mono if mag == 1 else f"{mag}{times}{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            sep = (" - " if c < 0 else " + ") if spaced else ("-" if c < 0 else "+")
            parts.append(sep + body)
    return "".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+)|(x)|(\^)|(\*)|([+-]))")


def _tokenize(text: str):
    pos = 0
    toks = []
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolynomialSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        start = m.start(m.lastindex)
        kind = ("int", "x", "^", "*", "sign")[m.lastindex - 1]
        toks.append((kind, m.group(m.lastindex), start))
        pos = m.end()
    toks.append(("end", "", n))
    return toks


def parse(text: str) -> Polynomial:
    """Parse a polynomial in ``x`` such as ``"3*x^2 - x + 1"``.

    Grammar: a sum of terms joined by ``+``/``-``, each term an integer, an
    integer times ``x`` (``3*x^4``) or a bare power of ``x``. A leading sign
    and signed integer literals are accepted. Whitespace is ignored.
    """
    toks = _tokenize(text)
    i = 0

    def peek():
        return toks[i]

    def expect(kind):
        nonlocal i
        tok = toks[i]
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolynomialSyntaxError(f"expected {kind}, found {what}", text, tok[2])
        i += 1
        return tok

    def power():
        nonlocal i
        if peek()[0] == "^":
            i += 1
            return int(expect("int")[1])
        return 1

    def term(sign):
        nonlocal i
        kind, val, _ = peek()
        if kind == "sign":
            # signed integer literal, or unary sign before x
            i += 1
            if val == "-":
                sign = -sign
            kind, val, _ = peek()
        if kind == "int":
            i += 1
            c = int(val)
            if peek()[0] == "*":
                i += 1
                expect("x")
                return sign * c, power()
            return sign * c, 0
        if kind == "x":
            i += 1
            return sign, power()
        expect("int")

    acc: dict[int, int] = {}
    c, d = term(1)
    acc[d] = acc.get(d, 0) + c
    while peek()[0] == "sign":
        sign = -1 if peek()[1] == "-" else 1
        i += 1
        c, d = term(sign)
        acc[d] = acc.get(d, 0) + c
    expect("end")
    if not acc:
        return ZERO
    out = [0] * (max(acc) + 1)
    for d, c in acc.items():
        out[d] += c
    return Polynomial._raw(out)


# -- JSON form -------------------------------------------------------------

def to_json(p: Polynomial) -> dict:
    return {"coeffs": [str(c) for c in p.coeffs]}


def from_json(obj: dict) -> Polynomial:
    coeffs = obj["coeffs"]
    return Polynomial(int(c) for c in coeffs)


def from_coeffs(coeffs: Sequence[int]) -> Polynomial:
    return Polynomial(coeffs)
