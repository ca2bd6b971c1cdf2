"""Pure-Python integer kernels.

Mirror of ``_kernels.pyx``; used when the compiled extension is unavailable
or when ``DEGENFE_PURE=1`` is set.  All inputs and outputs are lists of
Python ints; callers handle denominators.
"""

BACKEND = "python"


def int_poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def int_taylor_shift(c, s):
    """Coefficients of sum_i c[i] * (z + s)**i for integer s."""
    out = list(c)
    if s == 0:
        return out
    n = len(out)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] += s * out[j + 1]
    return out


def int_horner(c, s, d):
    """Return sum_i c[i] * s**i * d**(n-1-i), n = len(c)."""
    acc = 0
    dpow = 1
    for ci in reversed(c):
        acc = acc * s + ci * dpow
        dpow *= d
    return acc


def int_binomial_convolve(a, b, binom_rows):
    """EGF convolution of integer sequences: out[n] = sum_k C(n,k) a[k] b[n-k]."""
    n = min(len(a), len(b))
    out = [0] * n
    for m in range(n):
        row = binom_rows[m]
        acc = 0
        for k in range(m + 1):
            acc += row[k] * a[k] * b[m - k]
        out[m] = acc
    return out
