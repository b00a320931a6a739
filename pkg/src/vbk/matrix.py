"""Dense exact matrices, tensor products and tensor-factor bookkeeping.

Tensor factors of ``V^{⊗n}`` are numbered 1..n from the left, and a basis
vector is the row-major multi-index ``(x_1, ..., x_n)`` with ``0 <= x_k < d``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import rings
from .rings import RingError


class DimensionError(ValueError):
    pass


class SingularMatrixError(ArithmeticError):
    pass


@dataclass(frozen=True, eq=False)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple[tuple, ...]
    ring: str = "int"

    def __post_init__(self):
        rings.check_ring(self.ring)
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionError("entries are not a rows x cols rectangle")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_rows(cls, data: Sequence[Sequence], ring: str = "int") -> ExactMatrix:
        entries = tuple(tuple(rings.coerce(x, ring) for x in row) for row in data)
        cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries, ring)

    @classmethod
    def zeros(cls, rows: int, cols: int, ring: str = "int") -> ExactMatrix:
        z = rings.zero(ring)
        return cls(rows, cols, tuple((z,) * cols for _ in range(rows)), ring)

    @classmethod
    def identity(cls, n: int, ring: str = "int") -> ExactMatrix:
        z, o = rings.zero(ring), rings.one(ring)
        return cls(n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), ring)

    @classmethod
    def from_function(cls, rows: int, cols: int, f: Callable[[int, int], object], ring: str) -> ExactMatrix:
        return cls(rows, cols, tuple(tuple(rings.coerce(f(i, j), ring) for j in range(cols))
                                     for i in range(rows)), ring)

    def to_ring(self, ring: str) -> ExactMatrix:
        if ring == self.ring:
            return self
        return ExactMatrix.from_rows(self.entries, ring)

    # -- access -------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def nonzeros(self) -> int:
        return sum(1 for row in self.entries for x in row if x)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.shape, self.entries))

    def is_identity(self) -> bool:
        if not self.is_square():
            return False
        o = rings.one(self.ring)
        return all((x == o) if i == j else (not x)
                   for i, row in enumerate(self.entries) for j, x in enumerate(row))

    # -- arithmetic ---------------------------------------------------------

    def _same_ring(self, other: ExactMatrix) -> None:
        if self.ring != other.ring:
            raise RingError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        self._same_ring(other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return ExactMatrix(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)), self.ring)

    def __neg__(self) -> ExactMatrix:
        return ExactMatrix(self.rows, self.cols, tuple(tuple(-a for a in r) for r in self.entries), self.ring)

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        return self + (-other)

    def scale(self, c) -> ExactMatrix:
        c = rings.coerce(c, self.ring)
        return ExactMatrix(self.rows, self.cols, tuple(tuple(c * a for a in r) for r in self.entries), self.ring)

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        self._same_ring(other)
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        z = rings.zero(self.ring)
        sparse_rows = [[(j, x) for j, x in enumerate(row) if x] for row in other.entries]
        out = []
        for row in self.entries:
            acc = [z] * other.cols
            for k, a in enumerate(row):
                if not a:
                    continue
                for j, b in sparse_rows[k]:
                    acc[j] = acc[j] + a * b
            out.append(tuple(acc))
        return ExactMatrix(self.rows, other.cols, tuple(out), self.ring)

    def trace(self):
        if not self.is_square():
            raise DimensionError("trace of a non-square matrix")
        total = rings.zero(self.ring)
        for k in range(self.rows):
            total = total + self.entries[k][k]
        return total

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else (), self.ring)

    def det(self):
        """Determinant by fraction-free (Bareiss) elimination."""
        if not self.is_square():
            raise DimensionError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return rings.one(self.ring)
        m = [list(r) for r in self.entries]
        sign = 1
        prev = rings.one(self.ring)
        for k in range(n - 1):
            if not m[k][k]:
                swap = next((i for i in range(k + 1, n) if m[i][k]), None)
                if swap is None:
                    return rings.zero(self.ring)
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = rings.exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev, self.ring)
            prev = m[k][k]
        d = m[n - 1][n - 1]
        return d if sign == 1 else -d

    def inverse(self) -> ExactMatrix:
        """Exact inverse inside the matrix's own ring.

        Uses fraction-free Gauss-Jordan elimination, which leaves ``det * A^{-1}``
        in the right block; the determinant must then be a unit of the ring.
        """
        if not self.is_square():
            raise DimensionError("inverse of a non-square matrix")
        n = self.rows
        ring = self.ring
        z, o = rings.zero(ring), rings.one(ring)
        if ring == "rat":
            m = [list(r) + [o if i == j else z for j in range(n)] for i, r in enumerate(self.entries)]
            for k in range(n):
                piv = next((i for i in range(k, n) if m[i][k]), None)
                if piv is None:
                    raise SingularMatrixError("matrix is singular")
                m[k], m[piv] = m[piv], m[k]
                inv = 1 / m[k][k]
                m[k] = [x * inv for x in m[k]]
                for i in range(n):
                    if i != k and m[i][k]:
                        f = m[i][k]
                        m[i] = [a - f * b for a, b in zip(m[i], m[k])]
            return ExactMatrix(n, n, tuple(tuple(r[n:]) for r in m), ring)

        m = [list(r) + [o if i == j else z for j in range(n)] for i, r in enumerate(self.entries)]
        prev = o
        for k in range(n):
            piv = next((i for i in range(k, n) if m[i][k]), None)
            if piv is None:
                raise SingularMatrixError("matrix is singular")
            if piv != k:
                m[k], m[piv] = m[piv], m[k]
            p = m[k][k]
            for i in range(n):
                if i == k:
                    continue
                f = m[i][k]
                m[i] = [rings.exact_div(p * a - f * b, prev, ring) for a, b in zip(m[i], m[k])]
            prev = p
        det = prev
        if not rings.is_unit(det, ring):
            raise SingularMatrixError(f"determinant {rings.fmt(det, ring)} is not a unit of {ring}")
        inv = rings.unit_inverse(det, ring)
        # after the sweep every diagonal entry equals det (up to row swaps already applied)
        return ExactMatrix(n, n, tuple(tuple(x * inv for x in r[n:]) for r in m), ring)

    def power(self, k: int) -> ExactMatrix:
        if k < 0:
            return self.inverse().power(-k)
        result = ExactMatrix.identity(self.rows, self.ring)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "format": 1,
            "ring": self.ring,
            "rows": self.rows,
            "cols": self.cols,
            "entries": [rings.to_json(x, self.ring) for row in self.entries for x in row],
        }

    @classmethod
    def from_json(cls, obj: dict) -> ExactMatrix:
        ring = rings.check_ring(obj["ring"])
        r, c = int(obj["rows"]), int(obj["cols"])
        flat = obj["entries"]
        if flat and isinstance(flat[0], list):
            flat = [x for row in flat for x in row]
        if len(flat) != r * c:
            raise DimensionError(f"expected {r * c} entries, got {len(flat)}")
        vals = [rings.from_json(x, ring) for x in flat]
        return cls(r, c, tuple(tuple(vals[i * c:(i + 1) * c]) for i in range(r)), ring)

    def format(self) -> str:
        cells = [[rings.fmt(x, self.ring) for x in row] for row in self.entries]
        width = max((len(s) for row in cells for s in row), default=1)
        return "\n".join("[" + "  ".join(s.rjust(width) for s in row) + "]" for row in cells)

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols}, ring={self.ring})"


def kron(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.ring != b.ring:
        raise RingError(f"ring mismatch: {a.ring} vs {b.ring}")
    z = rings.zero(a.ring)
    out = []
    for ra in a.entries:
        for rb in b.entries:
            row = []
            for x in ra:
                if x:
                    row.extend(x * y for y in rb)
                else:
                    row.extend([z] * b.cols)
            out.append(tuple(row))
    return ExactMatrix(a.rows * b.rows, a.cols * b.cols, tuple(out), a.ring)


def kron_all(mats: Sequence[ExactMatrix], ring: str = "int") -> ExactMatrix:
    result = ExactMatrix.identity(1, ring)
    for m in mats:
        result = kron(result, m)
    return result


def _multi_indices(n: int, d: int):
    return list(itertools.product(range(d), repeat=n))


def _index(x: Sequence[int], d: int) -> int:
    k = 0
    for v in x:
        k = k * d + v
    return k


def swap_matrix(d: int, ring: str = "int") -> ExactMatrix:
    """The d^2 x d^2 operator ``x ⊗ y -> y ⊗ x``."""
    return ExactMatrix.from_function(d * d, d * d, lambda r, c: int(r == (c % d) * d + c // d), ring)


def perm_operator(p, d: int, ring: str = "int") -> ExactMatrix:
    """Operator on ``V^{⊗n}`` moving tensor factor k to position ``p(k)``.

    ``p`` is a :class:`vbk.words.Permutation` or an image list (1-based).
    With this placement ``perm_operator(p ∘ q) = perm_operator(p) @ perm_operator(q)``.
    """
    image = list(getattr(p, "image", p))
    n = len(image)
    size = d ** n
    z, o = rings.zero(ring), rings.one(ring)
    rows = [[z] * size for _ in range(size)]
    for x in _multi_indices(n, d):
        y = [0] * n
        for k in range(n):
            y[image[k] - 1] = x[k]
        rows[_index(y, d)][_index(x, d)] = o
    return ExactMatrix(size, size, tuple(tuple(r) for r in rows), ring)


def embed_pair(rho: ExactMatrix, i: int, j: int, n: int, d: int) -> ExactMatrix:
    """``rho`` acting on tensor factors ``(i, j)`` of ``V^{⊗n}`` in that order, identity elsewhere."""
    if rho.shape != (d * d, d * d):
        raise DimensionError(f"rho must be {d * d}x{d * d}, got {rho.rows}x{rho.cols}")
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise DimensionError(f"bad factor pair ({i}, {j}) for n={n}")
    size = d ** n
    z = rings.zero(rho.ring)
    rows = [[z] * size for _ in range(size)]
    by_col = [[(r, rho.entries[r][c]) for r in range(d * d) if rho.entries[r][c]] for c in range(d * d)]
    for x in _multi_indices(n, d):
        col = _index(x, d)
        y = list(x)
        for r, val in by_col[x[i - 1] * d + x[j - 1]]:
            y[i - 1], y[j - 1] = divmod(r, d)
            rows[_index(y, d)][col] = val
    return ExactMatrix(size, size, tuple(tuple(r) for r in rows), rho.ring)


def embed_adjacent(op: ExactMatrix, i: int, n: int, d: int) -> ExactMatrix:
    """``I^{⊗(i-1)} ⊗ op ⊗ I^{⊗(n-i-1)}`` for a two-factor operator ``op``."""
    left = ExactMatrix.identity(d ** (i - 1), op.ring)
    right = ExactMatrix.identity(d ** (n - i - 1), op.ring)
    return kron(kron(left, op), right)


def to_fraction_matrix(m: ExactMatrix) -> ExactMatrix:
    return ExactMatrix(m.rows, m.cols, tuple(tuple(Fraction(x) for x in r) for r in m.entries), "rat")
