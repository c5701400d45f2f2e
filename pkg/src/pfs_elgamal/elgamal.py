"""ElGamal over a cyclic subgroup of Z*_m.

Two flavours share one code path:

* ``pfs``: m is a power-Fibonacci modulus (usually composite) and alpha is a
  root of x^2 - x - 1; the exponent domain is the order of <alpha>.
* ``classic``: m = p is prime and alpha a primitive root, n = p - 1.

Plaintexts range over [1, m - 1] in both modes and need not be coprime to m.
"""

from __future__ import annotations

import math
import re
import secrets
from dataclasses import dataclass
from typing import Protocol

from .errors import (
    CiphertextOutsideSubgroupError,
    InvalidModulusError,
    InvalidNonceError,
    InvalidPrivateKeyError,
    InvalidPublicKeyError,
    KeyFormatError,
    MalformedCiphertextError,
    NotPrimitiveRootError,
    PfsError,
    PlaintextOutOfRangeError,
)
from .modmath import is_prime, is_primitive_root, mod_inv, smallest_primitive_root
from .pfs import PfsGroup

MODES = ("classic", "pfs")


class RandomSource(Protocol):
    def randrange(self, start: int, stop: int) -> int: ...


class Group(Protocol):
    m: int
    alpha: int
    order: int
    mode: str


@dataclass(frozen=True)
class ClassicGroup:
    """Z*_p with a primitive root."""

    m: int
    alpha: int
    order: int
    mode = "classic"


def make_classic_group(p: int, alpha: int | None = None) -> ClassicGroup:
    """Validate a prime and primitive root; ``alpha`` defaults to the smallest one."""
    if p < 3 or not is_prime(p):
        raise InvalidModulusError(f"classic ElGamal needs an odd prime modulus, got {p}")
    if alpha is None:
        alpha = smallest_primitive_root(p)
    elif not 1 < alpha < p or not is_primitive_root(alpha, p):
        raise NotPrimitiveRootError(f"{alpha} is not a primitive root mod {p}")
    return ClassicGroup(m=p, alpha=alpha, order=p - 1)


@dataclass(frozen=True)
class PublicKey:
    mode: str
    m: int
    alpha: int
    beta: int
    n: int

    def __post_init__(self):
        _check_group_params(self.mode, self.m, self.alpha, self.n, InvalidPublicKeyError)
        if not 1 <= self.beta < self.m or pow(self.beta, self.n, self.m) != 1:
            raise InvalidPublicKeyError(f"beta={self.beta} is not in the subgroup generated by alpha")


@dataclass(frozen=True)
class PrivateKey:
    """Private half; ``lam`` is the secret exponent, kept reduced into [1, n)."""

    mode: str
    m: int
    alpha: int
    n: int
    lam: int

    def __post_init__(self):
        _check_group_params(self.mode, self.m, self.alpha, self.n, InvalidPrivateKeyError)
        if not 1 <= self.lam < self.n:
            raise InvalidPrivateKeyError(f"lambda={self.lam} outside [1, {self.n})")

    def public_key(self) -> PublicKey:
        return PublicKey(self.mode, self.m, self.alpha, pow(self.alpha, self.lam, self.m), self.n)


@dataclass(frozen=True)
class Ciphertext:
    y1: int
    y2: int


def _check_group_params(mode, m, alpha, n, exc) -> None:
    # cheap structural checks only; full order verification is left to make_group
    if mode not in MODES:
        raise exc(f"unknown mode {mode!r}")
    if m < 2 or n < 1:
        raise exc(f"bad modulus/order m={m}, n={n}")
    if not 1 < alpha < m or pow(alpha, n, m) != 1:
        raise exc(f"alpha={alpha} does not have order dividing n={n} mod {m}")
    if mode == "pfs" and (alpha * alpha - alpha - 1) % m:
        raise exc(f"alpha={alpha} is not a root of x^2 - x - 1 mod {m}")
    if mode == "classic" and (n != m - 1 or not is_prime(m)):
        raise exc(f"classic keys need a prime modulus with n = m - 1 (m={m}, n={n})")


def keygen(
    group: PfsGroup | ClassicGroup,
    lam: int | None = None,
    rng: RandomSource | None = None,
) -> tuple[PublicKey, PrivateKey]:
    """Derive ``beta = alpha**lam mod m``.

    A supplied ``lam`` may be any positive integer not divisible by the
    subgroup order; it is stored reduced mod n. Without one, ``lam`` is drawn
    uniformly from [1, n) using ``rng`` (system entropy by default).
    """
    n = group.order
    if lam is None:
        rng = rng or secrets.SystemRandom()
        lam = rng.randrange(1, n)
    elif lam < 1:
        raise InvalidPrivateKeyError(f"lambda must be positive, got {lam}")
    elif lam % n == 0:
        raise InvalidPrivateKeyError(f"lambda={lam} is a multiple of the subgroup order {n}; beta would be 1")
    sk = PrivateKey(group.mode, group.m, group.alpha, n, lam % n)
    return sk.public_key(), sk


def encrypt(pk: PublicKey, x: int, k: int | None = None, rng: RandomSource | None = None) -> Ciphertext:
    """Return ``(alpha**k, x * beta**k) mod m`` with nonce k in [1, n)."""
    if not 1 <= x <= pk.m - 1:
        raise PlaintextOutOfRangeError(x, pk.m - 1)
    if k is None:
        rng = rng or secrets.SystemRandom()
        k = rng.randrange(1, pk.n)
    elif not 1 <= k < pk.n:
        raise InvalidNonceError(f"nonce k={k} outside [1, {pk.n})")
    return Ciphertext(pow(pk.alpha, k, pk.m), x * pow(pk.beta, k, pk.m) % pk.m)


def decrypt(sk: PrivateKey, c: Ciphertext) -> int:
    m = sk.m
    if not (1 <= c.y1 < m and 1 <= c.y2 < m):
        raise MalformedCiphertextError(f"ciphertext components must lie in [1, {m})")
    if math.gcd(c.y1, m) != 1:
        raise MalformedCiphertextError(f"y1={c.y1} is not a unit mod {m}")
    if pow(c.y1, sk.n, m) != 1:
        raise CiphertextOutsideSubgroupError(f"y1={c.y1} is not in the subgroup of order {sk.n}")
    return c.y2 * mod_inv(pow(c.y1, sk.lam, m), m) % m


# --- text serialization -----------------------------------------------------

PUBLIC_TAG = "PFS-ELGAMAL PUBLIC v1"
PRIVATE_TAG = "PFS-ELGAMAL PRIVATE v1"
CIPHERTEXT_TAG = "PFS-ELGAMAL CIPHERTEXT v1"

_PUBLIC_FIELDS = ("mode", "m", "alpha", "beta", "n")
_PRIVATE_FIELDS = ("mode", "m", "alpha", "n", "lambda")
_CIPHERTEXT_FIELDS = ("y1", "y2")

_DECIMAL = re.compile(r"[0-9]+")


def _dump(tag: str, pairs: list[tuple[str, object]]) -> str:
    return "\n".join([tag, *(f"{k}={v}" for k, v in pairs)]) + "\n"


def _load(text: str, tag: str, fields: tuple[str, ...]) -> dict[str, object]:
    if "\r" in text:
        raise KeyFormatError("CR characters are not allowed; use LF line endings")
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != tag:
        raise KeyFormatError(f"expected header {tag!r}", line=1)
    values: dict[str, object] = {}
    for i, field in enumerate(fields):
        lineno = i + 2
        if lineno > len(lines):
            raise KeyFormatError(f"missing {field}= line", line=lineno, field=field)
        key, sep, raw = lines[lineno - 1].partition("=")
        if not sep:
            raise KeyFormatError(f"expected {field}=<value>, got {lines[lineno - 1]!r}", line=lineno, field=field)
        if key != field:
            known = key in fields
            msg = f"expected {field}=, found {key}=" if known else f"unknown key {key!r} where {field}= was expected"
            raise KeyFormatError(msg, line=lineno, field=field)
        if field == "mode":
            if raw not in MODES:
                raise KeyFormatError(f"mode must be one of {MODES}, got {raw!r}", line=lineno, field=field)
            values[field] = raw
        else:
            if not _DECIMAL.fullmatch(raw):
                raise KeyFormatError(f"expected a decimal integer, got {raw!r}", line=lineno, field=field)
            values[field] = int(raw)
    if len(lines) > len(fields) + 1:
        raise KeyFormatError("unexpected trailing content", line=len(fields) + 2)
    return values


def serialize_public(pk: PublicKey) -> str:
    return _dump(PUBLIC_TAG, [("mode", pk.mode), ("m", pk.m), ("alpha", pk.alpha), ("beta", pk.beta), ("n", pk.n)])


def serialize_private(sk: PrivateKey) -> str:
    return _dump(PRIVATE_TAG, [("mode", sk.mode), ("m", sk.m), ("alpha", sk.alpha), ("n", sk.n), ("lambda", sk.lam)])


def serialize_ciphertext(c: Ciphertext) -> str:
    return _dump(CIPHERTEXT_TAG, [("y1", c.y1), ("y2", c.y2)])


def parse_public(text: str) -> PublicKey:
    v = _load(text, PUBLIC_TAG, _PUBLIC_FIELDS)
    try:
        return PublicKey(v["mode"], v["m"], v["alpha"], v["beta"], v["n"])
    except PfsError as e:
        raise KeyFormatError(f"inconsistent public key: {e}") from e


def parse_private(text: str) -> PrivateKey:
    v = _load(text, PRIVATE_TAG, _PRIVATE_FIELDS)
    try:
        return PrivateKey(v["mode"], v["m"], v["alpha"], v["n"], v["lambda"])
    except PfsError as e:
        raise KeyFormatError(f"inconsistent private key: {e}") from e


def parse_ciphertext(text: str) -> Ciphertext:
    v = _load(text, CIPHERTEXT_TAG, _CIPHERTEXT_FIELDS)
    return Ciphertext(v["y1"], v["y2"])
