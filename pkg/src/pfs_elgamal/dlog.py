"""Discrete logarithms in <alpha> mod m.

The solvers only see public data ``(m, alpha, target, n)`` and always return
the least nonnegative exponent. They serve as test oracles for each other and
as the attack side of the cost report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .elgamal import PublicKey
from .errors import DlogConsistencyError, NoSolutionError
from .modmath import Factorization, crt_combine, factorize, mod_inv, prev_prime


@dataclass(frozen=True)
class DlogInstance:
    m: int
    alpha: int
    target: int
    n: int

    @classmethod
    def from_public_key(cls, pk: PublicKey) -> DlogInstance:
        return cls(m=pk.m, alpha=pk.alpha, target=pk.beta, n=pk.n)


def ceil_sqrt(n: int) -> int:
    return math.isqrt(n - 1) + 1 if n > 0 else 0


def dlog_brute(inst: DlogInstance) -> int:
    m, target = inst.m, inst.target % inst.m
    x = 1 % m
    for lam in range(inst.n):
        if x == target:
            return lam
        x = x * inst.alpha % m
    raise NoSolutionError(f"{inst.target} is not a power of {inst.alpha} mod {m}")


def _bsgs(m: int, g: int, h: int, order: int) -> int:
    s = ceil_sqrt(order)
    baby: dict[int, int] = {}
    x = 1 % m
    for j in range(s):
        baby.setdefault(x, j)
        x = x * g % m
    giant = mod_inv(pow(g, s, m), m)
    gamma = h % m
    for i in range(s):
        j = baby.get(gamma)
        if j is not None:
            return (i * s + j) % order
        gamma = gamma * giant % m
    raise NoSolutionError(f"{h} is not a power of {g} mod {m}")


def dlog_bsgs(inst: DlogInstance) -> int:
    """Baby-step giant-step with a ceil(sqrt(n)) table."""
    return _bsgs(inst.m, inst.alpha, inst.target, inst.n)


def dlog_pohlig_hellman(inst: DlogInstance, n_factored: Factorization | None = None) -> int:
    """Solve in each prime-power piece of n digit by digit, then glue by CRT."""
    m, alpha, target, n = inst.m, inst.alpha, inst.target % inst.m, inst.n
    if n_factored is None:
        n_factored = factorize(n) if n > 1 else Factorization(())
    if n_factored.value != n:
        raise ValueError(f"factorization {n_factored} does not match n={n}")
    if pow(target, n, m) != 1 % m:
        raise NoSolutionError(f"{target} has order not dividing {n} mod {m}")
    if n == 1:
        return 0

    residues = []
    for q, e in n_factored:
        qe = q**e
        g = pow(alpha, n // qe, m)  # order divides q^e
        h = pow(target, n // qe, m)
        gamma = pow(g, q ** (e - 1), m)  # order q
        g_inv = mod_inv(g, m)
        x = 0
        for j in range(e):
            hj = pow(pow(g_inv, x, m) * h % m, q ** (e - 1 - j), m)
            x += _bsgs(m, gamma, hj, q) * q**j
        residues.append((x, qe))
    lam = crt_combine(residues)
    if pow(alpha, lam, m) != target:
        raise DlogConsistencyError(
            f"sub-logarithms recombine to {lam} but {alpha}^{lam} != {target} mod {m}"
        )
    return lam


SOLVERS = {
    "brute": dlog_brute,
    "bsgs": dlog_bsgs,
    "ph": dlog_pohlig_hellman,
}


@dataclass(frozen=True)
class AttackReport:
    mode: str
    m: int
    plaintext_space: int
    n: int
    brute_cost: int
    bsgs_cost: int
    n_factorization: str
    largest_prime_factor: int
    ph_cost: int
    classic_p: int
    classic_plaintext_space: int
    classic_n: int
    classic_bsgs_cost: int
    classic_largest_prime_factor: int

    def lines(self) -> list[str]:
        return [f"{k}={v}" for k, v in self.__dict__.items()]


def _order_profile(n: int) -> tuple[Factorization, int, int]:
    f = factorize(n) if n > 1 else Factorization(())
    largest = max(f.primes, default=1)
    ph = sum(e * ceil_sqrt(q) for q, e in f)
    return f, largest, ph


def attack_report(pk: PublicKey) -> AttackReport:
    """Search-space and attack-cost figures for a public key.

    Costs count group operations: n for exhaustive search, ceil(sqrt n) for
    BSGS and sum(e * ceil(sqrt q)) for Pohlig-Hellman. The classic columns
    describe ElGamal over the largest prime with the same bit length as m.
    """
    f, largest, ph = _order_profile(pk.n)
    bits = max(pk.m.bit_length(), 2)
    p = prev_prime(1 << bits)
    _, classic_largest, _ = _order_profile(p - 1)
    return AttackReport(
        mode=pk.mode,
        m=pk.m,
        plaintext_space=pk.m - 1,
        n=pk.n,
        brute_cost=pk.n,
        bsgs_cost=ceil_sqrt(pk.n),
        n_factorization=str(f),
        largest_prime_factor=largest,
        ph_cost=ph,
        classic_p=p,
        classic_plaintext_space=p - 1,
        classic_n=p - 1,
        classic_bsgs_cost=ceil_sqrt(p - 1),
        classic_largest_prime_factor=classic_largest,
    )
