"""Independent Pell oracles: a direct y-scan and a minimality certificate."""

import math

SCAN_LIMIT = 20000


def scan(D, limit=SCAN_LIMIT):
    """Least (x, y) with x^2 - D y^2 = 1 and y <= limit, else None."""
    for y in range(1, limit + 1):
        v = 1 + D * y * y
        x = math.isqrt(v)
        if x * x == v:
            return x, y
    return None


def chebyshev(k, x0):
    """T_k(x0): the x coordinate of (x0 + y0 sqrt(D))^k."""
    a, b = 1, x0
    for _ in range(k - 1):
        a, b = b, 2 * x0 * b - a
    return b if k else a


def is_proper_power(x, D):
    """Is x + y sqrt(D) the k-th power, k >= 2, of a smaller solution x0 + y0 sqrt(D)?"""
    for k in range(2, x.bit_length() + 1):
        lo, hi = 2, x
        while lo <= hi:
            mid = (lo + hi) // 2
            v = chebyshev(k, mid)
            if v == x:
                y2, rem = divmod(mid * mid - 1, D)
                if rem == 0 and math.isqrt(y2) ** 2 == y2:
                    return True
                break
            if v < x:
                lo = mid + 1
            else:
                hi = mid - 1
    return False


def brute_unit(D):
    """Least t, u > 0 with t^2 - D u^2 = +-4, by scanning u; limited to small units."""
    for u in range(1, SCAN_LIMIT + 1):
        for s in (-4, 4):
            v = D * u * u + s
            if v > 0:
                t = math.isqrt(v)
                if t * t == v:
                    return t, u, s // 4
    return None
