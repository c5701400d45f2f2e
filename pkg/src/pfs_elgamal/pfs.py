"""Power Fibonacci sequences modulo m.

A sequence 1, a, a^2, ... (mod m) obeys the Fibonacci recurrence exactly
when a^2 == a + 1 (mod m). Such sequences exist only for moduli built from
primes congruent to +-1 mod 10, optionally times a single factor of 5, and
there are 2**k of them where k counts the +-1 mod 10 primes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import NotPfsGeneratorError, SubgroupTooLargeError, UnsupportedModulusError
from .modmath import (
    Factorization,
    crt_combine,
    factorize,
    hensel_lift_root,
    multiplicative_order,
    phi_factorization,
    sqrt_mod_prime,
)

DEFAULT_SUBGROUP_CAP = 1 << 20


@dataclass(frozen=True)
class PfsModulus:
    m: int
    factorization: Factorization
    k: int
    has_five: bool
    expected_count: int


@dataclass(frozen=True)
class PfsGroup:
    """The cyclic subgroup generated by a power Fibonacci generator."""

    m: int
    alpha: int
    order: int
    mode = "pfs"


def classify_modulus(m: int, factorization: Factorization | None = None) -> PfsModulus:
    """Validate ``m`` and count its power Fibonacci sequences.

    Raises ``UnsupportedModulusError`` naming the offending factor when no
    sequence exists. Pass ``factorization`` when m is too large to factor
    here (anyone who built m from chosen primes knows it).
    """
    if m < 2:
        raise UnsupportedModulusError(m, "modulus must be >= 2")
    if factorization is None:
        f = factorize(m)
    elif factorization.value != m:
        raise ValueError(f"factorization {factorization} does not multiply out to {m}")
    else:
        f = factorization
    k = 0
    has_five = False
    for p, e in f:
        if p == 5:
            if e > 1:
                raise UnsupportedModulusError(m, "25 divides m; x^2 = x + 1 has no root mod 25", factor=5)
            has_five = True
        elif p % 10 in (1, 9):
            k += 1
        else:
            raise UnsupportedModulusError(m, f"prime factor {p} is not congruent to +-1 mod 10", factor=p)
    return PfsModulus(m=m, factorization=f, k=k, has_five=has_five, expected_count=2**k)


def count_sequences(m: int) -> int:
    """Number of power Fibonacci sequences mod ``m``; 0 when unsupported."""
    try:
        return classify_modulus(m).expected_count
    except UnsupportedModulusError:
        return 0


def _roots_mod_prime_power(p: int, e: int) -> list[int]:
    if p == 5:
        return [3]
    s = sqrt_mod_prime(5, p)
    half = (p + 1) // 2
    roots = {(1 + s) * half % p, (1 - s) * half % p}
    return sorted(hensel_lift_root(r, p, e) for r in roots)


def find_generators(pm: PfsModulus) -> list[int]:
    """All roots of x^2 - x - 1 mod m, ascending.

    Roots mod p are (1 +- sqrt 5) / 2, lifted to p**e and glued with CRT
    over every sign choice.
    """
    per_prime = [
        [(r, p**e) for r in _roots_mod_prime_power(p, e)] for p, e in pm.factorization
    ]
    return sorted(crt_combine(choice) for choice in itertools.product(*per_prime))


def make_group(m: int, alpha: int, phi_f: Factorization | None = None) -> PfsGroup:
    if not 1 < alpha < m or (alpha * alpha - alpha - 1) % m:
        raise NotPfsGeneratorError(f"{alpha} is not a power Fibonacci generator mod {m}: alpha^2 != alpha + 1")
    # alpha * (alpha - 1) == 1, so alpha is automatically a unit
    if phi_f is None:
        phi_f = phi_factorization(factorize(m))
    return PfsGroup(m=m, alpha=alpha, order=multiplicative_order(alpha, m, phi_f))


def groups_for(m: int, factorization: Factorization | None = None) -> list[PfsGroup]:
    """One group per generator of ``m``, in generator order."""
    pm = classify_modulus(m, factorization)
    phi_f = phi_factorization(pm.factorization)
    return [make_group(m, a, phi_f) for a in find_generators(pm)]


def sequence_terms(g: PfsGroup, count: int) -> list[int]:
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    terms = [1, g.alpha % g.m]
    while len(terms) < count:
        terms.append((terms[-1] + terms[-2]) % g.m)
    return terms[:count]


def subgroup_elements(g: PfsGroup, cap: int = DEFAULT_SUBGROUP_CAP) -> frozenset[int]:
    """The ``g.order`` distinct powers of alpha.

    Refuses with ``SubgroupTooLargeError`` (which carries the order) when the
    subgroup is bigger than ``cap``.
    """
    if g.order > cap:
        raise SubgroupTooLargeError(g.order, cap)
    out = []
    x = 1
    for _ in range(g.order):
        out.append(x)
        x = x * g.alpha % g.m
    return frozenset(out)
