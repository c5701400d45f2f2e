"""Arbitrary-precision modular arithmetic.

Primality, factorization, inverses, orders, square roots mod p, Hensel
lifting of roots of x^2 - x - 1 and CRT recombination. All functions are
pure and operate on Python ints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterable, Iterator

from .errors import (
    CrtConflictError,
    InvalidModulusError,
    NonSimpleRootError,
    NoSquareRootError,
    NotAUnitError,
    NotInvertibleError,
    NotPfsGeneratorError,
    UndefinedGcdError,
)

TRIAL_DIVISION_BOUND = 1 << 20

# First 12 primes as witnesses are deterministic below this bound, which is
# itself the smallest strong pseudoprime to all of them.
_MR_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_LIMIT = 318665857834031151167461
# Above the limit: fixed extra witnesses, so results stay reproducible.
_MR_EXTRA_BASES = (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as an ascending tuple of ``(prime, exponent)``.

    The empty factorization stands for 1 (useful for phi(2) = 1).
    """

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        factors = tuple((int(p), int(e)) for p, e in self.factors)
        object.__setattr__(self, "factors", factors)
        prev = 1
        for p, e in factors:
            if p <= prev:
                raise ValueError(f"primes must be strictly ascending, got {p} after {prev}")
            if e < 1:
                raise ValueError(f"exponent of {p} must be >= 1, got {e}")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            prev = p

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> Factorization:
        return cls(tuple(sorted((p, e) for p, e in d.items() if e > 0)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    @property
    def value(self) -> int:
        return math.prod(p**e for p, e in self.factors)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"{p}^{e}" for p, e in self.factors)


def _check_modulus(m: int) -> None:
    if m < 2:
        raise InvalidModulusError(f"modulus must be >= 2, got {m}")


def mod_pow(base: int, exp: int, m: int) -> int:
    """Return ``base**exp mod m`` by square-and-multiply (CPython's ``pow``)."""
    _check_modulus(m)
    if exp < 0:
        raise ValueError(f"exponent must be nonnegative, got {exp}")
    return pow(base, exp, m)


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``g = gcd(a, b) = s*a + t*b`` and ``g >= 1``."""
    if a == 0 and b == 0:
        raise UndefinedGcdError("gcd(0, 0) is undefined")
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def mod_inv(a: int, m: int) -> int:
    _check_modulus(m)
    g, s, _ = egcd(a % m, m)
    if g != 1:
        raise NotInvertibleError(a, m, g)
    return s % m


# --- primality and factorization -------------------------------------------


@lru_cache(maxsize=None)
def _primes_below(limit: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _miller_rabin(n: int, bases: Iterable[int]) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Miller-Rabin; deterministic below 3.18e23, fixed 32 witnesses above."""
    if n < 2:
        return False
    for p in _MR_DETERMINISTIC_BASES:
        if n % p == 0:
            return n == p
    if n < _MR_DETERMINISTIC_LIMIT:
        return _miller_rabin(n, _MR_DETERMINISTIC_BASES)
    return _miller_rabin(n, _MR_DETERMINISTIC_BASES + _MR_EXTRA_BASES)


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than ``n``."""
    if n < 2:
        return 2
    c = n + 1
    if c > 2 and c % 2 == 0:
        c += 1
    while not is_prime(c):
        c += 2
    return c


def prev_prime(n: int) -> int:
    """Largest prime strictly less than ``n``."""
    if n <= 2:
        raise ValueError(f"no prime below {n}")
    if n == 3:
        return 2
    c = n - 1
    if c % 2 == 0:
        c -= 1
    while not is_prime(c):
        c -= 2
    return c


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # batched gcd overshot; step one at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"Pollard rho failed on {n}")


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _split(d, out)
    _split(n // d, out)


def factorize(n: int) -> Factorization:
    """Complete factorization: trial division to 2**20, then Pollard-Brent rho."""
    if n < 2:
        raise ValueError(f"factorize needs n >= 2, got {n}")
    if is_prime(n):
        return Factorization(((n, 1),))
    found: dict[int, int] = {}
    # sieve only as far as trial division can reach; power-of-two sizes keep the cache small
    reach = min(TRIAL_DIVISION_BOUND, 1 << math.isqrt(n).bit_length())
    for p in _primes_below(reach):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
            if n > 1 and is_prime(n):
                break
    else:
        _split(n, found)
        n = 1
    if n > 1:
        found[n] = found.get(n, 0) + 1
    return Factorization.from_dict(found)


def euler_phi(f: Factorization) -> int:
    return math.prod(p ** (e - 1) * (p - 1) for p, e in f)


def phi_factorization(f: Factorization) -> Factorization:
    """Factorization of ``euler_phi(f)``, built from the factors of each p - 1."""
    acc: dict[int, int] = {}
    for p, e in f:
        if e > 1:
            acc[p] = acc.get(p, 0) + e - 1
        if p > 2:
            for q, k in factorize(p - 1):
                acc[q] = acc.get(q, 0) + k
    return Factorization.from_dict(acc)


def multiplicative_order(a: int, m: int, phi_f: Factorization | None = None) -> int:
    """Least ``n >= 1`` with ``a**n == 1 (mod m)``.

    Starts from phi(m) and strips prime factors while the power stays 1.
    ``phi_f`` is the factorization of phi(m); computed when omitted.
    """
    _check_modulus(m)
    a %= m
    if math.gcd(a, m) != 1:
        raise NotAUnitError(f"{a} is not a unit mod {m}")
    if phi_f is None:
        phi_f = phi_factorization(factorize(m))
    order = phi_f.value
    for q, e in phi_f:
        order //= q**e
        x = pow(a, order, m)
        while x != 1:
            x = pow(x, q, m)
            order *= q
    return order


def divisors(f: Factorization) -> list[int]:
    """All positive divisors of ``f.value``, ascending."""
    divs = [1]
    for p, e in f:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def is_primitive_root(g: int, p: int) -> bool:
    """True iff ``g`` generates the full unit group mod the prime ``p``."""
    g %= p
    if g == 0:
        return False
    if p == 2:
        return g == 1
    return all(pow(g, (p - 1) // q, p) != 1 for q in factorize(p - 1).primes)


def smallest_primitive_root(p: int) -> int:
    if not is_prime(p):
        raise InvalidModulusError(f"{p} is not prime")
    if p == 2:
        return 1
    qs = factorize(p - 1).primes
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    raise ArithmeticError(f"no primitive root mod {p}")  # unreachable for primes


# --- roots ------------------------------------------------------------------


def sqrt_mod_prime(a: int, p: int) -> int:
    """Smaller square root of ``a`` modulo the odd prime ``p`` (Tonelli-Shanks)."""
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise InvalidModulusError(f"{p} is not an odd prime")
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise NoSquareRootError(f"{a} is not a quadratic residue mod {p}")

    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return min(r, p - r)

    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = pow(z, q, p)
    r = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (s - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        s = i
    return min(r, p - r)


def hensel_lift_root(r: int, p: int, e: int) -> int:
    """Lift a simple root of x^2 - x - 1 from mod ``p`` to mod ``p**e``.

    Newton iteration doubles the precision each step.
    """
    if e < 1:
        raise ValueError(f"exponent must be >= 1, got {e}")
    r %= p
    if (r * r - r - 1) % p:
        raise NotPfsGeneratorError(f"{r} is not a root of x^2 - x - 1 mod {p}")
    if (2 * r - 1) % p == 0:
        raise NonSimpleRootError(f"{r} is a repeated root mod {p}; cannot lift")
    target = p**e
    mod = p
    while mod < target:
        mod = min(mod * mod, target)
        fx = r * r - r - 1
        r = (r - fx * mod_inv(2 * r - 1, mod)) % mod
    return r


def crt_combine(residues: Iterable[tuple[int, int]]) -> int:
    """Unique ``x`` in ``[0, prod m_i)`` with ``x == r_i (mod m_i)``."""
    pairs = list(residues)
    if not pairs:
        raise ValueError("crt_combine needs at least one residue")

    def step(acc: tuple[int, int], item: tuple[int, int]) -> tuple[int, int]:
        x, m = acc
        r, mi = item
        if math.gcd(m, mi) != 1:
            raise CrtConflictError(f"moduli {m} and {mi} are not coprime")
        # x + m*t == r (mod mi)
        t = (r - x) * mod_inv(m, mi) % mi if mi > 1 else 0
        return x + m * t, m * mi

    r0, m0 = pairs[0]
    x, m = reduce(step, pairs[1:], (r0 % m0, m0))
    return x % m
