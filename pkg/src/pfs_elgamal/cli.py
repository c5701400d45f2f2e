"""Command-line front end.

stdout carries ``key=value`` lines (or raw sequence terms); human-readable
messages go to stderr. Exit codes: 0 ok, 1 usage or other invalid input,
2 unsupported modulus, 3 plaintext out of range, 4 malformed key or
ciphertext file, 5 attack refused by the size guard.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import dlog, elgamal, pfs
from .errors import (
    InvalidModulusError,
    KeyFormatError,
    MalformedCiphertextError,
    PfsError,
    PlaintextOutOfRangeError,
    UnsupportedModulusError,
)
from .rng import SplitMix64

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNSUPPORTED = 2
EXIT_PLAINTEXT_RANGE = 3
EXIT_FILE_FORMAT = 4
EXIT_ATTACK_GUARD = 5

ATTACK_GUARDS = {"brute": 1 << 24, "bsgs": 1 << 48, "ph": 1 << 48}


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; 2 is reserved for unsupported moduli
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _Refused(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _out(key: str, value) -> None:
    print(f"{key}={value}")


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _rng(seed: int | None):
    return SplitMix64(seed) if seed is not None else None


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise KeyFormatError(f"cannot read {path}: {e}") from e


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def cmd_info(args) -> int:
    m = args.m
    try:
        pm = pfs.classify_modulus(m)
    except UnsupportedModulusError as e:
        _out("valid", "false")
        _out("m", m)
        if e.factor is not None:
            _out("offending_factor", e.factor)
        _err(str(e))
        return EXIT_UNSUPPORTED
    groups = pfs.groups_for(m)
    _out("valid", "true")
    _out("m", m)
    _out("factorization", pm.factorization)
    _out("k", pm.k)
    _out("count", pm.expected_count)
    _out("generators", ",".join(str(g.alpha) for g in groups))
    _out("orders", ",".join(str(g.order) for g in groups))
    _err(f"{m} admits {pm.expected_count} power Fibonacci sequence(s):")
    for g in groups:
        _err(f"  alpha={g.alpha}  subgroup order {g.order}")
    return EXIT_OK


def cmd_sequences(args) -> int:
    if args.limit < 1:
        raise _Refused("--limit must be >= 1", EXIT_USAGE)
    for g in pfs.groups_for(args.m):
        print(" ".join(map(str, pfs.sequence_terms(g, args.limit))))
    return EXIT_OK


def cmd_keygen(args) -> int:
    if args.classic:
        group = elgamal.make_classic_group(args.modulus, args.alpha)
    else:
        pm = pfs.classify_modulus(args.modulus)
        alpha = args.alpha if args.alpha is not None else pfs.find_generators(pm)[0]
        group = pfs.make_group(args.modulus, alpha)
    pk, sk = elgamal.keygen(group, args.lam, rng=_rng(args.seed))
    _write(args.out_pub, elgamal.serialize_public(pk))
    _write(args.out_priv, elgamal.serialize_private(sk))
    _out("mode", pk.mode)
    _out("m", pk.m)
    _out("alpha", pk.alpha)
    _out("n", pk.n)
    _out("beta", pk.beta)
    _out("public_key", args.out_pub)
    _out("private_key", args.out_priv)
    _err(f"wrote {args.out_pub} and {args.out_priv}")
    return EXIT_OK


def cmd_encrypt(args) -> int:
    pk = elgamal.parse_public(_read(args.pub))
    c = elgamal.encrypt(pk, args.plaintext, args.k, rng=_rng(args.seed))
    text = elgamal.serialize_ciphertext(c)
    if args.out:
        _write(args.out, text)
        _out("y1", c.y1)
        _out("y2", c.y2)
        _err(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_decrypt(args) -> int:
    sk = elgamal.parse_private(_read(args.priv))
    c = elgamal.parse_ciphertext(_read(args.ciphertext))
    _out("plaintext", elgamal.decrypt(sk, c))
    return EXIT_OK


def cmd_attack(args) -> int:
    pk = elgamal.parse_public(_read(args.pub))
    guard = ATTACK_GUARDS[args.method]
    if pk.n > guard:
        raise _Refused(
            f"subgroup order {pk.n} exceeds the {args.method} guard of {guard}; refusing to run",
            EXIT_ATTACK_GUARD,
        )
    inst = dlog.DlogInstance.from_public_key(pk)
    lam = dlog.SOLVERS[args.method](inst)
    verified = pow(pk.alpha, lam, pk.m) == pk.beta
    _out("method", args.method)
    _out("lambda", lam)
    _out("verified", str(verified).lower())
    for line in dlog.attack_report(pk).lines():
        print(line)
    _err(f"recovered lambda={lam} from public data only")
    return EXIT_OK if verified else EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pfs-elgamal", description="ElGamal over power Fibonacci subgroups of Z*_m.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("info", help="classify a modulus and list its generators")
    s.add_argument("m", type=int)
    s.set_defaults(func=cmd_info)

    s = sub.add_parser("sequences", help="print the first terms of every power Fibonacci sequence")
    s.add_argument("m", type=int)
    s.add_argument("--limit", type=int, default=20)
    s.set_defaults(func=cmd_sequences)

    s = sub.add_parser("keygen", help="generate a key pair")
    s.add_argument("--modulus", type=int, required=True)
    s.add_argument("--alpha", type=int)
    s.add_argument("--lambda", dest="lam", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--classic", action="store_true", help="classic ElGamal: prime modulus, primitive root")
    s.add_argument("--out-pub", default="key.pub")
    s.add_argument("--out-priv", default="key.priv")
    s.set_defaults(func=cmd_keygen)

    s = sub.add_parser("encrypt", help="encrypt an integer plaintext")
    s.add_argument("--pub", required=True)
    s.add_argument("--plaintext", type=int, required=True)
    s.add_argument("--k", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_encrypt)

    s = sub.add_parser("decrypt", help="decrypt a ciphertext file")
    s.add_argument("--priv", required=True)
    s.add_argument("--ciphertext", required=True)
    s.set_defaults(func=cmd_decrypt)

    s = sub.add_parser("attack", help="recover the private exponent from a public key")
    s.add_argument("--pub", required=True)
    s.add_argument("--method", choices=sorted(ATTACK_GUARDS), default="ph")
    s.set_defaults(func=cmd_attack)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "seed", None) is not None and args.seed < 0:
        _err("--seed must be nonnegative")
        return EXIT_USAGE
    try:
        return args.func(args)
    except _Refused as e:
        _err(str(e))
        return e.code
    except (UnsupportedModulusError, InvalidModulusError) as e:
        _err(str(e))
        return EXIT_UNSUPPORTED
    except PlaintextOutOfRangeError as e:
        _out("plaintext_bound", e.bound)
        _err(str(e))
        return EXIT_PLAINTEXT_RANGE
    except (KeyFormatError, MalformedCiphertextError) as e:
        _err(str(e))
        return EXIT_FILE_FORMAT
    except PfsError as e:
        _err(str(e))
        return EXIT_USAGE
    except OSError as e:
        _err(str(e))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
