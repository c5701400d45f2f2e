"""Brute-force reference implementations used to check the fast paths.

Deliberately naive: linear scans and trial division, no shared code with the
package under test.
"""

import math


def naive_pow(base, exp, m):
    r = 1 % m
    for _ in range(exp):
        r = r * base % m
    return r


def trial_isprime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def trial_factor(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def brute_phi(m):
    return sum(1 for x in range(1, m + 1) if math.gcd(x, m) == 1)


def brute_order(a, m):
    x, n = a % m, 1
    while x != 1:
        x = x * a % m
        n += 1
        if n > m:
            raise ValueError("not a unit")
    return n


def brute_roots(m):
    """All x in [0, m) with x^2 == x + 1 (mod m)."""
    return [x for x in range(m) if (x * x - x - 1) % m == 0]


def brute_sqrts(a, p):
    return [r for r in range(p) if r * r % p == a % p]


def brute_dlog(alpha, target, m):
    x = 1 % m
    for lam in range(m + 1):
        if x == target % m:
            return lam
        x = x * alpha % m
    return None
