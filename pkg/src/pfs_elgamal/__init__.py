"""ElGamal encryption over power Fibonacci subgroups of Z*_m."""

from .dlog import AttackReport, DlogInstance, attack_report, dlog_brute, dlog_bsgs, dlog_pohlig_hellman
from .elgamal import (
    Ciphertext,
    ClassicGroup,
    PrivateKey,
    PublicKey,
    decrypt,
    encrypt,
    keygen,
    make_classic_group,
    parse_ciphertext,
    parse_private,
    parse_public,
    serialize_ciphertext,
    serialize_private,
    serialize_public,
)
from .pfs import (
    PfsGroup,
    PfsModulus,
    classify_modulus,
    count_sequences,
    find_generators,
    groups_for,
    make_group,
    sequence_terms,
    subgroup_elements,
)
from .rng import SplitMix64

__version__ = "0.1.0"

__all__ = [
    "Ciphertext",
    "ClassicGroup",
    "PrivateKey",
    "PublicKey",
    "decrypt",
    "encrypt",
    "keygen",
    "make_classic_group",
    "parse_ciphertext",
    "parse_private",
    "parse_public",
    "serialize_ciphertext",
    "serialize_private",
    "serialize_public",
    "PfsGroup",
    "PfsModulus",
    "classify_modulus",
    "count_sequences",
    "find_generators",
    "groups_for",
    "make_group",
    "sequence_terms",
    "subgroup_elements",
    "AttackReport",
    "DlogInstance",
    "attack_report",
    "dlog_brute",
    "dlog_bsgs",
    "dlog_pohlig_hellman",
    "SplitMix64",
]
