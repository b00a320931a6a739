"""Laurent polynomials in one variable with integer coefficients.

A polynomial is stored as a dense coefficient window ``coeffs`` starting at
exponent ``lo``; zero end-coefficients are trimmed so that equal polynomials
have equal representations.
"""

from __future__ import annotations

from typing import Iterable, Union

Scalar = Union[int, "Laurent"]


class Laurent:
    __slots__ = ("lo", "coeffs", "_hash")

    def __init__(self, lo: int = 0, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        start = 0
        while start < len(c) and c[start] == 0:
            start += 1
        end = len(c)
        while end > start and c[end - 1] == 0:
            end -= 1
        self.coeffs: tuple[int, ...] = tuple(c[start:end])
        self.lo: int = lo + start if self.coeffs else 0
        self._hash = None

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> Laurent:
        return cls(exp, (coeff,))

    @classmethod
    def coerce(cls, x: Scalar) -> Laurent:
        if isinstance(x, Laurent):
            return x
        if isinstance(x, int):
            return cls(0, (x,))
        raise TypeError(f"cannot coerce {type(x).__name__} to Laurent")

    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] in (1, -1)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Laurent.coerce(other)
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.lo == other.lo and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            if not self.coeffs:
                self._hash = hash(0)
            elif self.lo == 0 and len(self.coeffs) == 1:
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.lo, self.coeffs))
        return self._hash

    def __neg__(self) -> Laurent:
        return Laurent(self.lo, (-c for c in self.coeffs))

    def __add__(self, other: Scalar) -> Laurent:
        if isinstance(other, int):
            if other == 0:
                return self
            other = Laurent(0, (other,))
        elif not isinstance(other, Laurent):
            return NotImplemented
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        out = [0] * (hi - lo + 1)
        off = self.lo - lo
        for k, c in enumerate(self.coeffs):
            out[off + k] += c
        off = other.lo - lo
        for k, c in enumerate(other.coeffs):
            out[off + k] += c
        return Laurent(lo, out)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> Laurent:
        if isinstance(other, int):
            return self + (-other)
        if not isinstance(other, Laurent):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> Laurent:
        return (-self) + other

    def __mul__(self, other: Scalar) -> Laurent:
        if isinstance(other, int):
            if other == 1:
                return self
            return Laurent(self.lo, (c * other for c in self.coeffs))
        if not isinstance(other, Laurent):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Laurent()
        if len(b) == 1:
            if b[0] == 1:
                return Laurent(self.lo + other.lo, a)
            return Laurent(self.lo + other.lo, (c * b[0] for c in a))
        if len(a) == 1:
            return Laurent(self.lo + other.lo, (a[0] * c for c in b))
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Laurent(self.lo + other.lo, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Laurent:
        if k < 0:
            return self.unit_inverse() ** (-k)
        result = Laurent(0, (1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def unit_inverse(self) -> Laurent:
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit in Z[q, q^-1]")
        return Laurent(-self.lo, self.coeffs)

    def exact_div(self, other: Scalar) -> Laurent:
        """Divide exactly; raise ``ArithmeticError`` if the quotient leaves the ring."""
        other = Laurent.coerce(other)
        if not other.coeffs:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self.coeffs:
            return Laurent()
        num = list(self.coeffs)
        den = other.coeffs
        lead = den[-1]
        nq = len(num) - len(den) + 1
        if nq <= 0:
            raise ArithmeticError(f"{self} is not divisible by {other}")
        quot = [0] * nq
        for k in range(nq - 1, -1, -1):
            top = num[k + len(den) - 1]
            if top % lead:
                raise ArithmeticError(f"{self} is not divisible by {other}")
            c = top // lead
            quot[k] = c
            if c:
                for j, d in enumerate(den):
                    num[k + j] -= c * d
        if any(num):
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return Laurent(self.lo - other.lo, quot)

    def evaluate(self, x):
        return sum(c * x ** (self.lo + k) for k, c in enumerate(self.coeffs))

    def to_json(self) -> dict:
        return {"lo": self.lo, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj) -> Laurent:
        if isinstance(obj, int):
            return cls.coerce(obj)
        return cls(int(obj["lo"]), obj["coeffs"])

    def format(self, var: str = "q") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            e = self.lo + k
            if e == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                body = f"{mag}{var}" if e == 1 else f"{mag}{var}^{e}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Laurent({self.format()})"

    __str__ = format


q = Laurent.monomial(1)
