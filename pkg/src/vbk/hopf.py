"""Finite-dimensional Hopf algebras from structure constants, their axiom
checkers, and numeric evaluation of formal traces."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .matrix import ExactMatrix, SingularMatrixError, kron
from .tangle import TraceWord
from .ybe import check_aybe

Vec = tuple  # tuple of Fractions, one per basis element


class HopfError(ValueError):
    pass


def _frac(x) -> Fraction:
    return Fraction(x)


def _fmt(x: Fraction):
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass
class HopfData:
    """Basis ``b_0..b_{m-1}``; ``mult[i][j][k]`` is the ``b_k`` coefficient of
    ``b_i b_j``, ``comult[i][j][k]`` the ``b_j ⊗ b_k`` coefficient of ``Δ(b_i)``,
    and ``antipode[i]`` the vector ``s(b_i)``."""

    dim: int
    mult: list
    unit: Vec
    comult: list
    counit: Vec
    antipode: list
    G: Vec | None = None
    rho: list | None = None          # list of (e, e′) vector pairs
    integral: Vec | None = None
    name: str = ""
    basis: list = field(default_factory=list)

    # -- algebra operations ---------------------------------------------------

    def zero(self) -> Vec:
        return (Fraction(0),) * self.dim

    def basis_vec(self, i: int) -> Vec:
        return tuple(Fraction(int(k == i)) for k in range(self.dim))

    def one(self) -> Vec:
        return tuple(self.unit)

    def mul(self, a: Vec, b: Vec) -> Vec:
        out = [Fraction(0)] * self.dim
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                xy = x * y
                for k, c in enumerate(self.mult[i][j]):
                    if c:
                        out[k] += xy * c
        return tuple(out)

    def add(self, a: Vec, b: Vec) -> Vec:
        return tuple(x + y for x, y in zip(a, b))

    def scale(self, c, a: Vec) -> Vec:
        return tuple(c * x for x in a)

    def apply_s(self, a: Vec, power: int = 1) -> Vec:
        if power < 0:
            return self.apply(self.antipode_matrix().inverse().power(-power), a)
        for _ in range(power):
            out = self.zero()
            for i, x in enumerate(a):
                if x:
                    out = self.add(out, self.scale(x, self.antipode[i]))
            a = out
        return a

    def antipode_matrix(self) -> ExactMatrix:
        return ExactMatrix.from_function(self.dim, self.dim, lambda r, c: self.antipode[c][r], "rat")

    def apply(self, m: ExactMatrix, a: Vec) -> Vec:
        return tuple(sum((m[r, c] * a[c] for c in range(self.dim)), Fraction(0)) for r in range(self.dim))

    def left_matrix(self, a: Vec) -> ExactMatrix:
        """Left multiplication by ``a`` in the basis."""
        cols = [self.mul(a, self.basis_vec(j)) for j in range(self.dim)]
        return ExactMatrix.from_function(self.dim, self.dim, lambda r, c: cols[c][r], "rat")

    def inverse(self, a: Vec) -> Vec:
        try:
            inv = self.left_matrix(a).inverse()
        except SingularMatrixError as exc:
            raise HopfError("element is not invertible") from exc
        return self.apply(inv, self.one())

    def power(self, a: Vec, k: int) -> Vec:
        if k < 0:
            a, k = self.inverse(a), -k
        out = self.one()
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def counit_of(self, a: Vec) -> Fraction:
        return sum((x * e for x, e in zip(a, self.counit)), Fraction(0))

    # -- tensor powers as dicts {(i, j, ...): coefficient} ----------------------

    def delta(self, a: Vec) -> dict:
        out: dict = {}
        for i, x in enumerate(a):
            if not x:
                continue
            for j in range(self.dim):
                for k in range(self.dim):
                    c = self.comult[i][j][k]
                    if c:
                        out[(j, k)] = out.get((j, k), 0) + x * c
        return _clean(out)

    def tensor_mul(self, s: dict, t: dict) -> dict:
        out: dict = {}
        for ka, x in s.items():
            for kb, y in t.items():
                parts = [self.mul(self.basis_vec(i), self.basis_vec(j)) for i, j in zip(ka, kb)]
                for idx in itertools.product(*[[(k, c) for k, c in enumerate(p) if c] for p in parts]):
                    key = tuple(k for k, _ in idx)
                    coef = x * y
                    for _, c in idx:
                        coef *= c
                    out[key] = out.get(key, 0) + coef
        return _clean(out)

    def rho_tensor(self) -> dict:
        if self.rho is None:
            raise HopfError(f"{self.name or 'algebra'} has no ρ")
        out: dict = {}
        for e, f in self.rho:
            for i, x in enumerate(e):
                for j, y in enumerate(f):
                    if x and y:
                        out[(i, j)] = out.get((i, j), 0) + x * y
        return _clean(out)

    def to_json(self) -> dict:
        def vec(v):
            return [_fmt(x) for x in v]
        obj = {"format": 1, "kind": "hopf", "name": self.name, "dim": self.dim, "basis": self.basis,
               "mult": [[vec(c) for c in row] for row in self.mult], "unit": vec(self.unit),
               "comult": [[vec(c) for c in row] for row in self.comult], "counit": vec(self.counit),
               "antipode": [vec(c) for c in self.antipode]}
        if self.G is not None:
            obj["G"] = vec(self.G)
        if self.rho is not None:
            obj["rho"] = [[vec(e), vec(f)] for e, f in self.rho]
        if self.integral is not None:
            obj["integral"] = vec(self.integral)
        return obj

    @classmethod
    def from_json(cls, obj: dict) -> HopfData:
        def vec(v):
            return tuple(_frac(x) for x in v)
        m = int(obj["dim"])
        h = cls(
            dim=m,
            mult=[[vec(c) for c in row] for row in obj["mult"]],
            unit=vec(obj["unit"]),
            comult=[[vec(c) for c in row] for row in obj["comult"]],
            counit=vec(obj["counit"]),
            antipode=[vec(c) for c in obj["antipode"]],
            G=vec(obj["G"]) if "G" in obj else None,
            rho=[(vec(e), vec(f)) for e, f in obj["rho"]] if "rho" in obj else None,
            integral=vec(obj["integral"]) if "integral" in obj else None,
            name=obj.get("name", ""),
            basis=list(obj.get("basis", [])),
        )
        _check_shapes(h)
        return h


def _clean(t: dict) -> dict:
    return {k: v for k, v in t.items() if v}


def _check_shapes(h: HopfData) -> None:
    m = h.dim
    ok = (len(h.mult) == m and all(len(r) == m and all(len(c) == m for c in r) for r in h.mult)
          and len(h.comult) == m and all(len(r) == m and all(len(c) == m for c in r) for r in h.comult)
          and len(h.unit) == m and len(h.counit) == m
          and len(h.antipode) == m and all(len(c) == m for c in h.antipode))
    for v in [h.G, h.integral] + [x for pair in (h.rho or []) for x in pair]:
        ok = ok and (v is None or len(v) == m)
    if not ok:
        raise HopfError(f"structure constants do not match dimension {m}")


# -- built-in examples ---------------------------------------------------------


def load_hopf(source: str) -> HopfData:
    if source.startswith("builtin:"):
        name = source.split(":", 1)[1]
        try:
            text = resources.files("vbk").joinpath("data").joinpath(f"{name}.json").read_text(encoding="utf-8")
        except FileNotFoundError as exc:
            raise HopfError(f"unknown builtin Hopf algebra {name!r}") from exc
        obj = json.loads(text)
    else:
        obj = json.loads(Path(source).read_text(encoding="utf-8"))
    if obj.get("kind") != "hopf":
        raise HopfError(f"{source} is not Hopf algebra data")
    return HopfData.from_json(obj)


BUILTIN_HOPF = ("trivial", "z2", "sweedler")


# -- reports -------------------------------------------------------------------


@dataclass
class AxiomReport:
    title: str
    results: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.results.values())

    @property
    def failures(self) -> list[str]:
        return [k for k, v in self.results.items() if not v]

    def to_json(self) -> dict:
        return {"check": self.title, "ok": self.ok, "axioms": self.results}


def _apply_factor(h: HopfData, t: dict, pos: int, f) -> dict:
    """Apply the linear map ``f: basis index -> Vec`` to tensor factor ``pos``."""
    out: dict = {}
    for key, x in t.items():
        for k, c in enumerate(f(key[pos])):
            if c:
                nk = key[:pos] + (k,) + key[pos + 1:]
                out[nk] = out.get(nk, 0) + x * c
    return _clean(out)


def _delta_factor(h: HopfData, t: dict, pos: int) -> dict:
    out: dict = {}
    for key, x in t.items():
        for (j, k), c in h.delta(h.basis_vec(key[pos])).items():
            nk = key[:pos] + (j, k) + key[pos + 1:]
            out[nk] = out.get(nk, 0) + x * c
    return _clean(out)


def _tensor_to_vec(h: HopfData, t: dict) -> Vec:
    out = [Fraction(0)] * h.dim
    for (i,), x in t.items():
        out[i] += x
    return tuple(out)


def _multiply_out(h: HopfData, t: dict, twist=None) -> Vec:
    """``m(t)`` for a 2-tensor, optionally applying ``twist`` to the first factor."""
    out = h.zero()
    for (i, j), x in t.items():
        a = h.basis_vec(i) if twist is None else twist(i)
        out = h.add(out, h.scale(x, h.mul(a, h.basis_vec(j))))
    return out


def check_hopf_axioms(h: HopfData) -> AxiomReport:
    rep = AxiomReport("hopf")
    m, one = h.dim, h.one()
    B = [h.basis_vec(i) for i in range(m)]
    rep.results["associativity"] = all(
        h.mul(h.mul(B[i], B[j]), B[k]) == h.mul(B[i], h.mul(B[j], B[k]))
        for i in range(m) for j in range(m) for k in range(m))
    rep.results["unit"] = all(h.mul(one, b) == b == h.mul(b, one) for b in B)
    rep.results["coassociativity"] = all(
        _delta_factor(h, h.delta(b), 0) == _delta_factor(h, h.delta(b), 1) for b in B)
    counit_ok = True
    for b in B:
        d = h.delta(b)
        left = _tensor_to_vec(h, _collapse(d, h.counit, 0))
        right = _tensor_to_vec(h, _collapse(d, h.counit, 1))
        counit_ok = counit_ok and left == b == right
    rep.results["counit"] = counit_ok
    rep.results["comultiplication multiplicative"] = all(
        h.delta(h.mul(B[i], B[j])) == h.tensor_mul(h.delta(B[i]), h.delta(B[j]))
        for i in range(m) for j in range(m))
    rep.results["comultiplication unital"] = h.delta(one) == _clean(
        {(i, j): one[i] * one[j] for i in range(m) for j in range(m)})
    rep.results["counit multiplicative"] = all(
        h.counit_of(h.mul(B[i], B[j])) == h.counit_of(B[i]) * h.counit_of(B[j])
        for i in range(m) for j in range(m)) and h.counit_of(one) == 1
    antipode_ok = True
    for i, b in enumerate(B):
        target = h.scale(h.counit_of(b), one)
        d = h.delta(b)
        left = _multiply_out(h, d, twist=lambda k: h.apply_s(h.basis_vec(k)))
        right = h.zero()
        for (j, k), x in d.items():
            right = h.add(right, h.scale(x, h.mul(h.basis_vec(j), h.apply_s(h.basis_vec(k)))))
        antipode_ok = antipode_ok and left == target == right
    rep.results["antipode"] = antipode_ok
    return rep


def _collapse(t: dict, covector: Vec, pos: int) -> dict:
    """Contract factor ``pos`` of a 2-tensor with a covector."""
    out: dict = {}
    for key, x in t.items():
        c = covector[key[pos]]
        if c:
            rest = key[:pos] + key[pos + 1:]
            out[rest] = out.get(rest, 0) + x * c
    return _clean(out)


def _embed_rho(h: HopfData, places: tuple[int, int], n: int = 3) -> dict:
    """``ρ`` placed on tensor factors ``places`` of ``A^{⊗n}``."""
    one = h.one()
    out: dict = {}
    for (i, j), x in h.rho_tensor().items():
        fill = [[(k, c) for k, c in enumerate(one) if c] for _ in range(n)]
        fill[places[0]] = [(i, Fraction(1))]
        fill[places[1]] = [(j, Fraction(1))]
        for idx in itertools.product(*fill):
            key = tuple(k for k, _ in idx)
            coef = x
            for _, c in idx:
                coef *= c
            out[key] = out.get(key, 0) + coef
    return _clean(out)


def u_element(h: HopfData) -> Vec:
    """``u = Σ s(e′) e``."""
    out = h.zero()
    for (i, j), x in h.rho_tensor().items():
        out = h.add(out, h.scale(x, h.mul(h.apply_s(h.basis_vec(j)), h.basis_vec(i))))
    return out


def regular_aybe_matrix(h: HopfData) -> ExactMatrix:
    """``ρ`` in the left regular representation, an operator on ``A ⊗ A``."""
    total = None
    for (i, j), x in h.rho_tensor().items():
        term = kron(h.left_matrix(h.basis_vec(i)), h.left_matrix(h.basis_vec(j))).scale(x)
        total = term if total is None else total + term
    return total


def check_quasitriangular(h: HopfData) -> AxiomReport:
    rep = AxiomReport("quasitriangular")
    m = h.dim
    R = h.rho_tensor()
    B = [h.basis_vec(i) for i in range(m)]
    one2 = _clean({(i, j): h.one()[i] * h.one()[j] for i in range(m) for j in range(m)})
    # (s ⊗ 1) ρ must be the two-sided inverse
    r_inv = _apply_factor(h, R, 0, lambda k: h.apply_s(h.basis_vec(k)))
    rep.results["rho invertible, inverse (s⊗1)rho"] = (h.tensor_mul(R, r_inv) == one2 == h.tensor_mul(r_inv, R))
    ok = True
    for b in B:
        d = h.delta(b)
        dop = _clean({(k, j): x for (j, k), x in d.items()})
        ok = ok and h.tensor_mul(R, d) == h.tensor_mul(dop, R)
    rep.results["rho Delta = Delta' rho"] = ok
    r12, r13, r23 = _embed_rho(h, (0, 1)), _embed_rho(h, (0, 2)), _embed_rho(h, (1, 2))
    rep.results["(Delta⊗1)rho = rho13 rho23"] = _delta_factor(h, R, 0) == h.tensor_mul(r13, r23)
    rep.results["(1⊗Delta)rho = rho13 rho12"] = _delta_factor(h, R, 1) == h.tensor_mul(r13, r12)
    rep.results["algebraic Yang-Baxter in A⊗A⊗A"] = (
        h.tensor_mul(h.tensor_mul(r12, r13), r23) == h.tensor_mul(h.tensor_mul(r23, r13), r12))
    rep.results["algebraic Yang-Baxter, regular representation"] = check_aybe(regular_aybe_matrix(h), m)
    u = u_element(h)
    try:
        u_inv = h.inverse(u)
        rep.results["u invertible"] = True
        rep.results["s^2(x) = u x u^-1"] = all(
            h.apply_s(b, 2) == h.mul(h.mul(u, b), u_inv) for b in B)
    except HopfError:
        rep.results["u invertible"] = False
        rep.results["s^2(x) = u x u^-1"] = False
    return rep


def check_ribbon(h: HopfData) -> AxiomReport:
    """``G`` grouplike with ``s²(x) = G x G⁻¹``, and ``v = G⁻¹ u`` central."""
    rep = AxiomReport("ribbon")
    if h.G is None:
        raise HopfError(f"{h.name or 'algebra'} has no grouplike G")
    G = h.G
    m = h.dim
    B = [h.basis_vec(i) for i in range(m)]
    rep.results["G grouplike"] = (h.delta(G) == _clean({(i, j): G[i] * G[j] for i in range(m) for j in range(m)})
                                  and h.counit_of(G) == 1)
    try:
        g_inv = h.inverse(G)
    except HopfError:
        rep.results["G invertible"] = False
        return rep
    rep.results["G invertible"] = True
    rep.results["s^2(x) = G x G^-1"] = all(h.apply_s(b, 2) == h.mul(h.mul(G, b), g_inv) for b in B)
    if h.rho is not None:
        v = h.mul(g_inv, u_element(h))
        rep.results["v = G^-1 u central"] = all(h.mul(v, b) == h.mul(b, v) for b in B)
    return rep


def check_right_integral(h: HopfData) -> AxiomReport:
    """``λ(x) 1 = Σ λ(x_1) x_2`` on every basis element, with ``λ ≠ 0``."""
    rep = AxiomReport("right integral")
    if h.integral is None:
        raise HopfError(f"{h.name or 'algebra'} has no integral")
    lam = h.integral
    rep.results["nonzero"] = any(lam)
    ok = True
    for b in (h.basis_vec(i) for i in range(h.dim)):
        lhs = h.scale(sum((x * y for x, y in zip(lam, b)), Fraction(0)), h.one())
        rhs = _tensor_to_vec(h, _collapse(h.delta(b), lam, 0))
        ok = ok and lhs == rhs
    rep.results["lambda(x)1 = sum lambda(x1) x2"] = ok
    return rep


# -- numeric traces ------------------------------------------------------------

FUNCTIONALS = ("regular", "integral")


def _functional(h: HopfData, name: str):
    if name == "regular":
        return lambda a: h.left_matrix(a).trace()
    if name == "integral":
        if h.integral is None:
            raise HopfError(f"{h.name or 'algebra'} has no integral")
        lam = h.integral

        def f(a):
            return sum((x * y for x, y in zip(lam, a)), Fraction(0))

        # a non-symmetric λ is only a twisted trace, and the rotation rule would not hold
        basis = [h.basis_vec(i) for i in range(h.dim)]
        if any(f(h.mul(a, b)) != f(h.mul(b, a)) for a in basis for b in basis):
            raise HopfError(f"the integral of {h.name or 'algebra'} is not symmetric, "
                            "so it is not a trace; use the regular functional")
        return f
    raise HopfError(f"unknown trace functional {name!r}; expected one of {FUNCTIONALS}")


def _trace_setup(words: list[TraceWord], h: HopfData, functional: str):
    if h.rho is None:
        raise HopfError(f"{h.name or 'algebra'} has no ρ")
    if any(w.g for w in words) and h.G is None:
        raise HopfError(f"{h.name or 'algebra'} has no grouplike G")
    f = _functional(h, functional)
    cache: dict = {}

    def piece(term: int, prime: bool, p: int) -> Vec:
        key = (term, prime, p)
        if key not in cache:
            cache[key] = h.apply_s(h.rho[term][1 if prime else 0], p)
        return cache[key]

    g_powers = {w.g: h.power(h.G, w.g) for w in words if w.g}
    return f, piece, g_powers


def evaluate_trace(words: list[TraceWord], h: HopfData, functional: str = "regular") -> Fraction:
    """Sum over all term choices of ``ρ = Σ e ⊗ e′`` at every crossing of the
    product over components of ``functional(Π s^p(token) · G^g)``.

    Runs left to right through the tokens.  Only crossings whose second side
    is still ahead need a remembered term choice; partial products with the
    same open choices are added together, which linearity allows.
    """
    f, piece, g_powers = _trace_setup(words, h, functional)
    flat = [t.crossing for w in words for t in w.tokens]
    last = {c: k for k, c in enumerate(flat)}
    n_terms = len(h.rho)
    scalars: dict[tuple, Fraction] = {(): Fraction(1)}
    pos = 0
    for w in words:
        states = {key: h.scale(c, h.one()) for key, c in scalars.items()}
        for t in w.tokens:
            new: dict[tuple, Vec] = {}
            for key, vec in states.items():
                open_ = dict(key)
                choices = [open_[t.crossing]] if t.crossing in open_ else range(n_terms)
                for term in choices:
                    nv = h.mul(vec, piece(term, t.prime, t.power))
                    if not any(nv):
                        continue
                    o2 = dict(open_)
                    if last[t.crossing] == pos:
                        o2.pop(t.crossing, None)
                    else:
                        o2[t.crossing] = term
                    k2 = tuple(sorted(o2.items()))
                    new[k2] = h.add(new[k2], nv) if k2 in new else nv
            states = new
            pos += 1
        scalars = {}
        for key, vec in states.items():
            if w.g:
                vec = h.mul(vec, g_powers[w.g])
            c = f(vec)
            if c:
                scalars[key] = scalars.get(key, Fraction(0)) + c
    return sum(scalars.values(), Fraction(0))


def _evaluate_trace_naive(words: list[TraceWord], h: HopfData, functional: str = "regular") -> Fraction:
    """Direct enumeration of every term choice; exponential, kept as a cross-check."""
    f, piece, g_powers = _trace_setup(words, h, functional)
    crossings = sorted({t.crossing for w in words for t in w.tokens})
    total = Fraction(0)
    for choice in itertools.product(range(len(h.rho)), repeat=len(crossings)):
        pick = dict(zip(crossings, choice))
        value = Fraction(1)
        for w in words:
            acc = h.one()
            for t in w.tokens:
                acc = h.mul(acc, piece(pick[t.crossing], t.prime, t.power))
            if w.g:
                acc = h.mul(acc, g_powers[w.g])
            value *= f(acc)
            if not value:
                break
        total += value
    return total
