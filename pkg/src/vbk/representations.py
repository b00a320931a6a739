"""Matrix representations of virtual braid words and relator verification."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from . import rings
from .matrix import ExactMatrix, SingularMatrixError, embed_adjacent, embed_pair, swap_matrix
from .presentations import Presentation
from .words import MU, V, BraidWord, Token, WordError
from .ybe import algebraic_to_braided, check_aybe, check_braided_ybe, check_hecke_quadratic


class RepresentationError(ValueError):
    pass


class VirtualRep:
    """``Rep``: connecting strings act by ``ρ`` placed on their two strands,
    virtual crossings by the factor swap, ``σ_i`` by ``ρ_{i,i+1} P_i``."""

    def __init__(self, rho: ExactMatrix, d: int, n: int, *, name: str = "rho", validate: bool = True):
        if validate and not check_aybe(rho, d):
            raise RepresentationError(f"{name} does not satisfy the algebraic Yang-Baxter equation")
        try:
            self.rho_inv = rho.inverse()
        except SingularMatrixError as exc:
            raise RepresentationError(f"{name} is not invertible: {exc}") from exc
        self.rho, self.d, self.n, self.name = rho, d, n, name
        self.ring = rho.ring
        self.swap = swap_matrix(d, rho.ring)
        self._cache: dict[Token, ExactMatrix] = {}

    def token_matrix(self, t: Token) -> ExactMatrix:
        m = self._cache.get(t)
        if m is None:
            if t.kind == MU:
                m = embed_pair(self.rho if t.sign > 0 else self.rho_inv, t.i, t.j, self.n, self.d)
            elif t.kind == V:
                m = embed_adjacent(self.swap, t.i, self.n, self.d)
            else:
                mu_t = Token(MU, t.i, t.i + 1, 1)
                v_t = Token(V, t.i)
                if t.sign > 0:
                    m = self.token_matrix(mu_t) @ self.token_matrix(v_t)
                else:
                    m = self.token_matrix(v_t) @ self.token_matrix(mu_t.inverse())
            self._cache[t] = m
        return m

    def evaluate(self, w: BraidWord) -> ExactMatrix:
        if w.n != self.n:
            raise WordError(f"representation built for n={self.n}, word has n={w.n}")
        result = ExactMatrix.identity(self.d ** self.n, self.ring)
        for t in w.tokens:
            result = result @ self.token_matrix(t)
        return result


class HeckeRep:
    """``T``: ``σ_i`` acts by ``R`` on factors ``i, i+1`` and ``v_i`` by the swap."""

    def __init__(self, r: ExactMatrix, z, d: int, n: int, *, validate: bool = True):
        if validate:
            if not check_braided_ybe(r, d):
                raise RepresentationError("R does not satisfy the braided Yang-Baxter equation")
            if not check_hecke_quadratic(r, z):
                raise RepresentationError("R does not satisfy R^2 = zR + I")
        self.r, self.z, self.d, self.n = r, rings.coerce(z, r.ring), d, n
        self.ring = r.ring
        self.r_inv = r.inverse()
        self.swap = swap_matrix(d, r.ring)
        self._cache: dict[Token, ExactMatrix] = {}

    def token_matrix(self, t: Token) -> ExactMatrix:
        m = self._cache.get(t)
        if m is None:
            if t.kind == MU:
                raise WordError(f"the Hecke representation takes σ and v only, found {t}")
            if t.kind == V:
                m = embed_adjacent(self.swap, t.i, self.n, self.d)
            else:
                m = embed_adjacent(self.r if t.sign > 0 else self.r_inv, t.i, self.n, self.d)
            self._cache[t] = m
        return m

    def evaluate(self, w: BraidWord) -> ExactMatrix:
        if w.n != self.n:
            raise WordError(f"representation built for n={self.n}, word has n={w.n}")
        result = ExactMatrix.identity(self.d ** self.n, self.ring)
        for t in w.tokens:
            result = result @ self.token_matrix(t)
        return result


def rep_virtual(w: BraidWord, rho: ExactMatrix, d: int) -> ExactMatrix:
    return VirtualRep(rho, d, w.n).evaluate(w)


def hecke_rep(w: BraidWord, r: ExactMatrix, z, d: int) -> ExactMatrix:
    return HeckeRep(r, z, d, w.n).evaluate(w)


@dataclass
class VerificationReport:
    presentation: str
    n: int
    passed: int = 0
    failures: list[str] = field(default_factory=list)
    expect_fail: bool = False

    @property
    def total(self) -> int:
        return self.passed + len(self.failures)

    @property
    def ok(self) -> bool:
        """All relators die, or for a forbidden table at least one survives."""
        return bool(self.failures) if self.expect_fail else not self.failures

    @property
    def verdict(self) -> str:
        if self.expect_fail:
            return "separating" if self.failures else "non-separating"
        return "pass" if not self.failures else "fail"

    def summary(self) -> str:
        if self.expect_fail:
            return (f"{self.presentation} n={self.n}: {len(self.failures)} of {self.total} forbidden "
                    f"relators fail ({self.verdict})")
        if not self.failures:
            return f"{self.presentation} n={self.n}: all {self.total} relators pass"
        return f"{self.presentation} n={self.n}: {len(self.failures)} of {self.total} relators fail"

    def to_json(self) -> dict:
        return {"format": 1, "presentation": self.presentation, "n": self.n, "passed": self.passed,
                "failed": self.failures, "expect_fail": self.expect_fail, "verdict": self.verdict}


def verify_relators(pres: Presentation, rep) -> VerificationReport:
    """Evaluate every relator; each must be the identity matrix.

    Tables whose name starts with ``forbidden_`` are expected to contain at
    least one surviving relator.
    """
    report = VerificationReport(pres.name, pres.n, expect_fail=pres.name.startswith("forbidden_"))
    for rel in pres.relators:
        if rep.evaluate(rel.word).is_identity():
            report.passed += 1
        else:
            report.failures.append(rel.label)
    return report


# -- built-in and file-based data -------------------------------------------


def _data_text(name: str) -> str:
    return resources.files("vbk").joinpath("data").joinpath(name).read_text(encoding="utf-8")


def _load_json(source: str) -> dict:
    if source.startswith("builtin:"):
        raise RepresentationError("use the builtin loaders for builtin: sources")
    return json.loads(Path(source).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class HeckeData:
    r: ExactMatrix
    z: object
    d: int


def load_hecke(source: str = "builtin:hecke2", *, validate: bool = True) -> HeckeData:
    """Load ``(R, z)``; both Hecke preconditions are re-checked on load."""
    if source.startswith("builtin:"):
        obj = json.loads(_data_text(source.split(":", 1)[1] + ".json"))
    else:
        obj = _load_json(source)
    r = ExactMatrix.from_json(obj["R"])
    d = int(obj.get("d") or round(r.rows ** 0.5))
    z = rings.from_json(obj["z"], r.ring)
    if not validate:
        return HeckeData(r, z, d)
    if not check_braided_ybe(r, d):
        raise RepresentationError(f"{source}: R fails the braided Yang-Baxter equation")
    if not check_hecke_quadratic(r, z):
        raise RepresentationError(f"{source}: R fails R^2 = zR + I")
    return HeckeData(r, z, d)


BUILTIN_RHOS = ("hecke2", "identity2")


def load_rho(source: str = "builtin:hecke2", *, validate: bool = True) -> tuple[ExactMatrix, int]:
    """Load an algebraic Yang-Baxter solution; it must pass ``check_aybe``.

    ``builtin:hecke2`` is ``R P`` for the built-in Hecke braiding and
    ``builtin:identity2`` the degenerate identity solution.
    """
    if source.startswith("builtin:"):
        name = source.split(":", 1)[1]
        if name == "hecke2":
            h = load_hecke("builtin:hecke2")
            rho, d = algebraic_to_braided(h.r, h.d), h.d
        elif name == "identity2":
            rho, d = ExactMatrix.identity(4, "laurent"), 2
        else:
            raise RepresentationError(f"unknown builtin rho {name!r}; expected one of {BUILTIN_RHOS}")
    else:
        obj = _load_json(source)
        mat = obj.get("rho", obj)
        rho = ExactMatrix.from_json(mat)
        d = int(obj.get("d") or round(rho.rows ** 0.5))
    if validate and not check_aybe(rho, d):
        raise RepresentationError(f"{source}: rho fails the algebraic Yang-Baxter equation")
    return rho, d
