"""Exact h(x)-Fibonacci and h(x)-Lucas polynomials, complete and incomplete."""

from .families import FamilyParams, fib, fib_explicit, lucas, lucas_explicit
from .incomplete import (
    IncompleteIndex,
    IndexOutOfRange,
    Kind,
    Special,
    fib_incomplete,
    fib_incomplete_special,
    lucas_incomplete,
    lucas_incomplete_special,
)
from .kernels import BACKEND
from .polynomial import (
    NotDivisible,
    Polynomial,
    PolynomialSyntaxError,
    binomial,
    derivative,
    divide_exact,
    eval_int,
    format_poly,
    parse,
)

__version__ = "0.1.0"
