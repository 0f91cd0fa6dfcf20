"""Pure-Python kernels.

Reference implementation of everything in ``_ckernels.pyx``.  Python
integers never overflow, so these are also the exact fallback when the
compiled kernels hit their 64-bit limits.
"""

# generator codes shared with the compiled kernels
X, Y, DELTA, W = 0, 1, 2, 3


def word_matrix(codes, exps):
    """Entries (a, b, c, d) of the product of generator powers, left to right.

    X^k = [[1, k], [0, 1]], Y^k = [[1, 0], [-k, 1]], DELTA^k = I,
    W^k = (-1)^k I.
    """
    a, b, c, d = 1, 0, 0, 1
    for g, k in zip(codes, exps):
        if g == X:
            b += a * k
            d += c * k
        elif g == Y:
            a -= b * k
            c -= d * k
        elif g == W:
            if k & 1:
                a, b, c, d = -a, -b, -c, -d
        elif g != DELTA:
            raise ValueError(f"unknown generator code {g}")
    return a, b, c, d


def gof_hits(m):
    """All (beta, family, p, q) with beta = 2q + 1 hitting m.

    family 1: m = 2pq + p + q with p, q > 1
    family 2: m = 2pq + p + q + 1 with p, q > 0

    Exhaustive over 1 <= p, q <= m, no early exit.
    """
    hits = []
    for q in range(1, m + 1):
        for p in range(1, m + 1):
            v = 2 * p * q + p + q
            if v == m and p > 1 and q > 1:
                hits.append((2 * q + 1, 1, p, q))
            elif v + 1 == m:
                hits.append((2 * q + 1, 2, p, q))
    return hits
