"""Exact max-plus arithmetic and its symmetrization.

Max-plus scalars are plain Python ints, with ``BOT = -inf`` standing for the
tropical zero.  Finite values never go through floating point: ``BOT`` is only
a marker, and every finite result is checked against the signed 64-bit range.

Signed scalars (elements of the symmetrized semiring) carry a modulus and one
of four sign tags.  ``+`` is the tropical sum, ``*`` the tropical product and
unary ``-`` the involution ``x -> (minus) x``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from numbers import Integral

__all__ = [
    "BOT",
    "INT64_MAX",
    "INT64_MIN",
    "is_bot",
    "as_maxplus",
    "oplus",
    "otimes",
    "mp_power",
    "format_maxplus",
    "parse_maxplus",
    "Sign",
    "SignedScalar",
    "splus",
    "stimes",
    "negate",
    "balances",
    "ZERO",
    "ONE",
    "MINUS_ONE",
]

BOT = -math.inf
INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)


def is_bot(a) -> bool:
    return a == BOT


def _checked(value: int) -> int:
    if value > INT64_MAX or value < INT64_MIN:
        raise OverflowError(f"max-plus value {value} does not fit in 64 bits")
    return value


def as_maxplus(a):
    """Coerce ``a`` to a max-plus scalar (an int, or ``BOT``).

    Accepts Python or numpy integers, ``-inf`` and the string ``"-inf"``.
    Floats other than ``-inf`` are rejected so that no rounding can sneak in.
    """
    if isinstance(a, str):
        return parse_maxplus(a)
    if isinstance(a, bool):
        raise TypeError("booleans are not max-plus scalars")
    if isinstance(a, Integral):
        return _checked(int(a))
    if isinstance(a, float):
        if a == BOT:
            return BOT
        if a.is_integer() and math.isfinite(a):
            return _checked(int(a))
    raise TypeError(f"not an exact max-plus scalar: {a!r}")


def oplus(a, b):
    """Tropical sum (max)."""
    return a if a >= b else b


def otimes(a, b):
    """Tropical product (integer addition), ``BOT`` absorbing."""
    if a == BOT or b == BOT:
        return BOT
    return _checked(a + b)


def mp_power(a, n: int):
    """Tropical power ``a^n = n * a`` for ``n >= 0``."""
    if n < 0:
        raise ValueError("negative tropical powers are not used here")
    if n == 0:
        return 0
    if a == BOT:
        return BOT
    return _checked(n * a)


def format_maxplus(a) -> str:
    return "-inf" if a == BOT else str(int(a))


def parse_maxplus(text: str):
    s = text.strip()
    if s in ("-inf", "-∞", "⊥"):
        return BOT
    try:
        return _checked(int(s))
    except ValueError:
        raise ValueError(f"cannot parse max-plus scalar {text!r}") from None


class Sign(enum.Enum):
    POS = "pos"
    NEG = "neg"
    BAL = "bal"
    ZERO = "zero"


_NEG_PREFIXES = ("~", "⊖")
_BAL_SUFFIXES = ("*", "•")


@dataclass(frozen=True)
class SignedScalar:
    """Element ``a``, ``(minus) a`` or ``a*`` of the symmetrized semiring."""

    modulus: int | float
    sign: Sign

    def __post_init__(self):
        m = as_maxplus(self.modulus)
        object.__setattr__(self, "modulus", m)
        if (m == BOT) != (self.sign is Sign.ZERO):
            raise ValueError(
                f"sign {self.sign.value} is inconsistent with modulus {format_maxplus(m)}"
            )

    @classmethod
    def pos(cls, a) -> SignedScalar:
        a = as_maxplus(a)
        return ZERO if a == BOT else cls(a, Sign.POS)

    @classmethod
    def neg(cls, a) -> SignedScalar:
        a = as_maxplus(a)
        return ZERO if a == BOT else cls(a, Sign.NEG)

    @classmethod
    def bal(cls, a) -> SignedScalar:
        a = as_maxplus(a)
        return ZERO if a == BOT else cls(a, Sign.BAL)

    @classmethod
    def from_sign(cls, s: int, a=0) -> SignedScalar:
        """``s * a`` for an integer sign ``s`` in {+1, -1}."""
        if s == 1:
            return cls.pos(a)
        if s == -1:
            return cls.neg(a)
        raise ValueError(f"sign must be +1 or -1, got {s!r}")

    @property
    def is_zero(self) -> bool:
        return self.sign is Sign.ZERO

    @property
    def is_signed(self) -> bool:
        """Positive, negative, or zero (zero is both signed and balanced)."""
        return self.sign is not Sign.BAL

    @property
    def is_balanced(self) -> bool:
        return self.sign in (Sign.BAL, Sign.ZERO)

    @property
    def sgn(self) -> int:
        return {Sign.POS: 1, Sign.NEG: -1}.get(self.sign, 0)

    def __add__(self, other: SignedScalar) -> SignedScalar:
        return splus(self, other)

    def __mul__(self, other: SignedScalar) -> SignedScalar:
        return stimes(self, other)

    def __neg__(self) -> SignedScalar:
        return negate(self)

    def __sub__(self, other: SignedScalar) -> SignedScalar:
        return splus(self, negate(other))

    def __str__(self) -> str:
        return self.format()

    def format(self, unicode: bool = False) -> str:
        m = format_maxplus(self.modulus)
        if self.sign is Sign.NEG:
            return ("⊖" if unicode else "~") + m
        if self.sign is Sign.BAL:
            return m + ("•" if unicode else "*")
        return m

    @classmethod
    def parse(cls, text: str) -> SignedScalar:
        s = text.strip()
        if s.startswith(_NEG_PREFIXES):
            return cls.neg(parse_maxplus(s[1:]))
        if s.endswith(_BAL_SUFFIXES):
            return cls.bal(parse_maxplus(s[:-1]))
        return cls.pos(parse_maxplus(s))


ZERO = SignedScalar(BOT, Sign.ZERO)
ONE = SignedScalar(0, Sign.POS)
MINUS_ONE = SignedScalar(0, Sign.NEG)


def splus(x: SignedScalar, y: SignedScalar) -> SignedScalar:
    if x.modulus > y.modulus:
        return x
    if y.modulus > x.modulus:
        return y
    # equal moduli
    if x.sign is y.sign:
        return x
    if x.is_zero:
        return y
    if y.is_zero:
        return x
    return SignedScalar(x.modulus, Sign.BAL)


_PRODUCT_SIGN = {
    (Sign.POS, Sign.POS): Sign.POS,
    (Sign.NEG, Sign.NEG): Sign.POS,
    (Sign.POS, Sign.NEG): Sign.NEG,
    (Sign.NEG, Sign.POS): Sign.NEG,
}


def stimes(x: SignedScalar, y: SignedScalar) -> SignedScalar:
    if x.is_zero or y.is_zero:
        return ZERO
    sign = _PRODUCT_SIGN.get((x.sign, y.sign), Sign.BAL)
    return SignedScalar(otimes(x.modulus, y.modulus), sign)


def negate(x: SignedScalar) -> SignedScalar:
    if x.sign is Sign.POS:
        return SignedScalar(x.modulus, Sign.NEG)
    if x.sign is Sign.NEG:
        return SignedScalar(x.modulus, Sign.POS)
    return x


def balances(x: SignedScalar, y: SignedScalar) -> bool:
    """The balance relation: ``x (minus) y`` is balanced."""
    return splus(x, negate(y)).is_balanced
