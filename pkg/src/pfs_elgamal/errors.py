"""Exception types raised across the package.

Everything derives from ``ValueError`` so callers that only care about
"bad input" can catch that; the CLI maps the concrete classes onto exit codes.
"""


class PfsError(ValueError):
    """Base class for all errors raised by this package."""


# --- modular arithmetic -----------------------------------------------------


class InvalidModulusError(PfsError):
    pass


class UndefinedGcdError(PfsError):
    pass


class NotInvertibleError(PfsError):
    def __init__(self, a: int, m: int, gcd: int):
        super().__init__(f"{a} is not invertible mod {m} (gcd={gcd})")
        self.a = a
        self.m = m
        self.gcd = gcd


class NotAUnitError(PfsError):
    pass


class NoSquareRootError(PfsError):
    pass


class NonSimpleRootError(PfsError):
    pass


class CrtConflictError(PfsError):
    pass


# --- power Fibonacci moduli and groups --------------------------------------


class UnsupportedModulusError(PfsError):
    def __init__(self, m: int, reason: str, factor: int | None = None):
        super().__init__(f"no power Fibonacci sequences modulo {m}: {reason}")
        self.m = m
        self.reason = reason
        self.factor = factor


class NotPfsGeneratorError(PfsError):
    pass


class NotPrimitiveRootError(PfsError):
    pass


class SubgroupTooLargeError(PfsError):
    """Raised instead of materializing a subgroup above the size cap."""

    def __init__(self, order: int, cap: int):
        super().__init__(f"subgroup has {order} elements, above the cap of {cap}")
        self.order = order
        self.cap = cap


# --- ElGamal ----------------------------------------------------------------


class InvalidPrivateKeyError(PfsError):
    pass


class InvalidPublicKeyError(PfsError):
    pass


class PlaintextOutOfRangeError(PfsError):
    def __init__(self, x: int, bound: int):
        super().__init__(f"plaintext {x} outside [1, {bound}]; the plaintext must be at most m - 1 = {bound}")
        self.x = x
        self.bound = bound


class InvalidNonceError(PfsError):
    pass


class MalformedCiphertextError(PfsError):
    pass


class CiphertextOutsideSubgroupError(MalformedCiphertextError):
    pass


class KeyFormatError(PfsError):
    """A key or ciphertext text block could not be parsed."""

    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
        self.line = line
        self.field = field


# --- discrete logarithms ----------------------------------------------------


class NoSolutionError(PfsError):
    pass


class DlogConsistencyError(PfsError):
    pass
