"""Coefficient fields: the rationals and prime fields F_p."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError

MAX_PRIME = 2**31


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """A coefficient field, identified by its characteristic (0 means Q)."""

    char: int

    def __post_init__(self) -> None:
        if self.char == 0:
            return
        if self.char >= MAX_PRIME or not _is_prime(self.char):
            raise InputError(f"not a prime below 2^31: {self.char}")

    @property
    def is_rationals(self) -> bool:
        return self.char == 0

    def __str__(self) -> str:
        return "Q" if self.char == 0 else f"F_{self.char}"


RATIONALS = Field(0)


def gf(p: int) -> Field:
    """The prime field with p elements."""
    return Field(p)


def parse_field(spec: str) -> Field:
    """Parse a field spec: 'q' for the rationals, 'f:<p>' for F_p."""
    s = spec.strip().lower()
    if s == "q":
        return RATIONALS
    if s.startswith("f:"):
        try:
            p = int(s[2:])
        except ValueError:
            raise InputError(f"bad field spec: {spec!r}") from None
        return gf(p)
    raise InputError(f"bad field spec: {spec!r} (expected 'q' or 'f:<p>')")
