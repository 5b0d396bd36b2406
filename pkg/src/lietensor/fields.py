"""Exact scalar arithmetic over the rationals and over prime fields GF(p).

Rational scalars are arbitrary-precision fractions in lowest terms with a
positive denominator (gmpy2.mpq when available, fractions.Fraction otherwise).
GF(p) scalars are canonical residues in [0, p), implemented as int subclasses
so that all linear algebra can be written once in terms of +, -, *, / and
truthiness tests.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

try:
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _rational

Scalar = Any

_SCALAR_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=None)
def _residue_class(p: int) -> type:
    """Build the element type of GF(p): an int subclass reduced mod p."""

    class Residue(int):
        __slots__ = ()
        modulus = p

        def __new__(cls, value):
            return int.__new__(cls, value % p)

        def __add__(self, other):
            return Residue(int(self) + int(other))

        __radd__ = __add__

        def __sub__(self, other):
            return Residue(int(self) - int(other))

        def __rsub__(self, other):
            return Residue(int(other) - int(self))

        def __mul__(self, other):
            return Residue(int(self) * int(other))

        __rmul__ = __mul__

        def __neg__(self):
            return Residue(-int(self))

        def __truediv__(self, other):
            return Residue(int(self) * pow(int(other), -1, p))

        def __rtruediv__(self, other):
            return Residue(int(other) * pow(int(self), -1, p))

        def __repr__(self):
            return "%d" % int(self)

    Residue.__name__ = f"ResidueMod{p}"
    return Residue


@dataclass(frozen=True)
class Field:
    """The coefficient field: the rationals (characteristic 0) or GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def name(self) -> str:
        return "Q" if self.is_rational else f"F{self.characteristic}"

    def descriptor(self):
        """JSON-facing field descriptor: "Q" or {"Fp": p}."""
        return "Q" if self.is_rational else {"Fp": self.characteristic}

    def scalar(self, value: int) -> Scalar:
        if self.is_rational:
            return _rational(value)
        return _residue_class(self.characteristic)(value)

    @property
    def zero(self) -> Scalar:
        return self.scalar(0)

    @property
    def one(self) -> Scalar:
        return self.scalar(1)

    def parse(self, text: str) -> Scalar:
        """Parse an exact scalar string: "3", "-4", or "num/den" over Q."""
        text = text.strip()
        if not _SCALAR_RE.match(text):
            raise ValueError(f"cannot parse scalar {text!r}")
        if self.is_rational:
            return _rational(text)
        if "/" in text:
            num, den = text.split("/")
            return self.scalar(int(num)) / self.scalar(int(den))
        return self.scalar(int(text))

    def to_str(self, value: Scalar) -> str:
        return str(value)


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


def field_from_descriptor(desc) -> Field:
    """Inverse of Field.descriptor, for parsing JSON documents."""
    if desc == "Q":
        return QQ
    if isinstance(desc, dict) and set(desc) == {"Fp"}:
        p = desc["Fp"]
        if not isinstance(p, int):
            raise ValueError(f"field modulus must be an integer, got {p!r}")
        return Field(p)
    raise ValueError(f"unrecognized field descriptor {desc!r}")
