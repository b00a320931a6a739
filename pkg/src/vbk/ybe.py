"""Exact Yang-Baxter and Hecke checkers for operators on ``V ⊗ V``."""

from __future__ import annotations

from . import rings
from .matrix import DimensionError, ExactMatrix, embed_adjacent, embed_pair, swap_matrix


def _require_square(m: ExactMatrix, d: int, what: str) -> None:
    if m.shape != (d * d, d * d):
        raise DimensionError(f"{what} must be {d * d}x{d * d}, got {m.rows}x{m.cols}")


def aybe_sides(rho: ExactMatrix, d: int) -> tuple[ExactMatrix, ExactMatrix]:
    """``(ρ12 ρ13 ρ23, ρ23 ρ13 ρ12)`` on ``V^{⊗3}``."""
    _require_square(rho, d, "rho")
    r12, r13, r23 = (embed_pair(rho, i, j, 3, d) for i, j in ((1, 2), (1, 3), (2, 3)))
    return r12 @ r13 @ r23, r23 @ r13 @ r12


def check_aybe(rho: ExactMatrix, d: int) -> bool:
    lhs, rhs = aybe_sides(rho, d)
    return lhs == rhs


def check_braided_ybe(b: ExactMatrix, d: int) -> bool:
    _require_square(b, d, "B")
    b1 = embed_adjacent(b, 1, 3, d)
    b2 = embed_adjacent(b, 2, 3, d)
    return b1 @ b2 @ b1 == b2 @ b1 @ b2


def check_hecke_quadratic(r: ExactMatrix, z) -> bool:
    """``R² = z R + I`` exactly."""
    if not r.is_square():
        raise DimensionError("R must be square")
    z = rings.coerce(z, r.ring)
    return r @ r == r.scale(z) + ExactMatrix.identity(r.rows, r.ring)


def algebraic_to_braided(rho: ExactMatrix, d: int) -> ExactMatrix:
    """``B = ρ P``, the braided form of an algebraic solution (and back, since P² = I)."""
    return rho @ swap_matrix(d, rho.ring)


braided_to_algebraic = algebraic_to_braided


def is_invertible(m: ExactMatrix) -> bool:
    return m.is_square() and rings.is_unit(m.det(), m.ring)
