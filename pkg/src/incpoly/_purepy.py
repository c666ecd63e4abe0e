"""Pure-Python coefficient kernels.

Reference implementations of the hot loops. The compiled module
``incpoly._speedups`` exposes the same functions with the same results.
"""


def convolve(a, b):
    """Return the coefficient list of the product of two coefficient sequences."""
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a):
                out[i + j] += ai * bj
    return out


def horner(coeffs, v):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * v + c
    return acc
