"""Digit strings in an arbitrary base.

Digits are stored most significant first. Values are plain Python ints, so
strings of any length convert exactly.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyInput, InvalidBase, InvalidDigit, LeadingZero

ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"
MAX_TEXT_BASE = len(ALPHABET)


def check_base(base: int) -> int:
    if not isinstance(base, int) or base < 2:
        raise InvalidBase(f"base must be an integer >= 2, got {base!r}")
    return base


@dataclass(frozen=True)
class DigitString:
    """A base plus a tuple of digits, most significant first.

    Leading zeros are allowed here because partition terms such as ``02``
    are legal; use :attr:`is_canonical` to check normal form.
    """

    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        b = self.base
        if type(b) is not int or b < 2:
            check_base(b)
        digits = self.digits
        if type(digits) is not tuple:
            digits = tuple(digits)
            object.__setattr__(self, "digits", digits)
        if not digits:
            raise EmptyInput("a digit string needs at least one digit")
        if min(digits) < 0 or max(digits) >= b:
            bad = next(x for x in digits if not 0 <= x < b)
            raise InvalidDigit(f"digit {bad} out of range for base {b}")

    def __len__(self):
        return len(self.digits)

    def __str__(self):
        return format_digits(self)

    @property
    def is_canonical(self) -> bool:
        return len(self.digits) == 1 or self.digits[0] != 0

    @property
    def value(self) -> int:
        return to_value(self)

    @property
    def is_single_digit(self) -> bool:
        return len(self.digits) == 1


def parse_digits(text: str, base: int) -> DigitString:
    check_base(base)
    if base > MAX_TEXT_BASE:
        raise InvalidBase(f"text input supports bases up to {MAX_TEXT_BASE}")
    text = text.strip().lower()
    if not text:
        raise EmptyInput("empty digit text")
    digits = []
    for ch in text:
        d = ALPHABET.find(ch)
        if d < 0 or d >= base:
            raise InvalidDigit(f"{ch!r} is not a digit in base {base}")
        digits.append(d)
    if len(digits) > 1 and digits[0] == 0:
        raise LeadingZero(f"{text!r} has a leading zero")
    return DigitString(base, tuple(digits))


def format_digits(d: DigitString) -> str:
    if d.base > MAX_TEXT_BASE:
        return "[" + ",".join(map(str, d.digits)) + "]"
    return "".join(ALPHABET[x] for x in d.digits)


def digits_value(digits, base: int) -> int:
    v = 0
    for x in digits:
        v = v * base + x
    return v


def _split_value(digits, base: int) -> int:
    n = len(digits)
    if n <= 64:
        return digits_value(digits, base)
    half = n // 2
    return _split_value(digits[:half], base) * base ** (n - half) + _split_value(digits[half:], base)


def to_value(d: DigitString) -> int:
    return _split_value(d.digits, d.base)


def value_digits(v: int, base: int) -> list[int]:
    """Digits of ``v`` in ``base``, most significant first."""
    if v < 0:
        raise ValueError("negative values have no digit string")
    if v < base:
        return [v]
    if base == 2:
        return [1 if c == "1" else 0 for c in bin(v)[2:]]
    out = []
    while v:
        v, r = divmod(v, base)
        out.append(r)
    out.reverse()
    return out


def from_value(v: int, base: int) -> DigitString:
    check_base(base)
    return DigitString(base, tuple(value_digits(v, base)))


def digit_sum(d: DigitString) -> int:
    return sum(d.digits)


def residue(d: DigitString) -> int:
    """``to_value(d) mod (base - 1)`` via the digit sum; 0 in base 2."""
    if d.base == 2:
        return 0
    return digit_sum(d) % (d.base - 1)
