"""The three exact coefficient rings: ``int``, ``rat`` and ``laurent``."""

from __future__ import annotations

from fractions import Fraction

from .laurent import Laurent

RINGS = ("int", "rat", "laurent")


class RingError(ValueError):
    pass


def check_ring(name: str) -> str:
    if name not in RINGS:
        raise RingError(f"unknown ring {name!r}; expected one of {RINGS}")
    return name


def zero(ring: str):
    return Laurent() if ring == "laurent" else (Fraction(0) if ring == "rat" else 0)


def one(ring: str):
    return Laurent(0, (1,)) if ring == "laurent" else (Fraction(1) if ring == "rat" else 1)


def coerce(x, ring: str):
    """Bring a scalar into ``ring``; only lossless embeddings are allowed."""
    if ring == "laurent":
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise RingError(f"{x} is not an integer Laurent coefficient")
            x = x.numerator
        return Laurent.coerce(x)
    if isinstance(x, Laurent):
        if x.is_zero():
            return zero(ring)
        if x.lo != 0 or len(x.coeffs) != 1:
            raise RingError(f"{x} is not a constant")
        x = x.coeffs[0]
    if ring == "rat":
        return Fraction(x)
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise RingError(f"{x} is not an integer")
        return x.numerator
    return int(x)


def is_unit(x, ring: str) -> bool:
    if ring == "laurent":
        return x.is_unit()
    if ring == "rat":
        return x != 0
    return x in (1, -1)


def unit_inverse(x, ring: str):
    if ring == "laurent":
        return x.unit_inverse()
    if ring == "rat":
        return 1 / x
    if x not in (1, -1):
        raise ZeroDivisionError(f"{x} is not a unit in Z")
    return x


def exact_div(a, b, ring: str):
    """Exact quotient ``a / b`` inside ``ring``."""
    if ring == "laurent":
        return Laurent.coerce(a).exact_div(b)
    if ring == "rat":
        return Fraction(a) / b
    if b == 0:
        raise ZeroDivisionError("integer division by zero")
    if a % b:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return a // b


def to_json(x, ring: str):
    if ring == "laurent":
        return Laurent.coerce(x).to_json()
    if ring == "rat":
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return int(x)


def from_json(obj, ring: str):
    if ring == "laurent":
        return Laurent.from_json(obj)
    if ring == "rat":
        return Fraction(obj)
    return int(obj)


def fmt(x, ring: str) -> str:
    if ring == "laurent":
        return Laurent.coerce(x).format()
    return str(x)
