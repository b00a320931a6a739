"""Matrix evaluation of tangle diagrams and the regular-isotopy move checks."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .laurent import Laurent
from .matrix import ExactMatrix, kron_all, swap_matrix
from .tangle import TangleDiagram
from .ybe import check_braided_ybe


@dataclass(frozen=True)
class RibbonMatrixData:
    d: int
    pos: ExactMatrix
    neg: ExactMatrix
    virtual: ExactMatrix
    cup: ExactMatrix   # d² x 1
    cap: ExactMatrix   # 1 x d²
    name: str = ""

    @property
    def ring(self) -> str:
        return self.pos.ring

    def tile(self, t: str) -> ExactMatrix:
        return {"i": ExactMatrix.identity(self.d, self.ring), "x+": self.pos, "x-": self.neg,
                "o": self.virtual, "u": self.cup, "n": self.cap}[t]

    def to_json(self) -> dict:
        return {"format": 1, "kind": "ribbon", "name": self.name, "d": self.d,
                "pos": self.pos.to_json(), "neg": self.neg.to_json(), "virtual": self.virtual.to_json(),
                "cup": self.cup.to_json(), "cap": self.cap.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> RibbonMatrixData:
        return cls(int(obj["d"]), *(ExactMatrix.from_json(obj[k]) for k in ("pos", "neg", "virtual", "cup", "cap")),
                   name=obj.get("name", ""))


def bracket_data() -> RibbonMatrixData:
    """Bracket-style data over ``Z[A, A⁻¹]``; a loop is worth ``-A² - A⁻²``."""
    a = Laurent.monomial(1)
    ai = Laurent.monomial(-1)
    cup = ExactMatrix.from_rows([[0], [a], [-ai], [0]], "laurent")
    cap = ExactMatrix.from_rows([[0, -a, ai, 0]], "laurent")
    e = cup @ cap
    ident = ExactMatrix.identity(4, "laurent")
    pos = ident.scale(a) + e.scale(ai)
    neg = ident.scale(ai) + e.scale(a)
    return RibbonMatrixData(2, pos, neg, swap_matrix(2, "laurent"), cup, cap, name="bracket")


def flat_data(d: int = 2) -> RibbonMatrixData:
    """Every crossing is the swap; cup and cap are the standard pairing."""
    cup = ExactMatrix.from_function(d * d, 1, lambda r, c: 1 if r // d == r % d else 0, "int")
    p = swap_matrix(d, "int")
    return RibbonMatrixData(d, p, p, p, cup, cup.transpose(), name="flat")


BUILTIN_RIBBON = {"bracket": bracket_data, "flat": flat_data}


def load_ribbon(source: str = "builtin:bracket") -> RibbonMatrixData:
    if source.startswith("builtin:"):
        name = source.split(":", 1)[1]
        if name not in BUILTIN_RIBBON:
            raise ValueError(f"unknown builtin ribbon data {name!r}; expected one of {sorted(BUILTIN_RIBBON)}")
        data = BUILTIN_RIBBON[name]()
    else:
        data = RibbonMatrixData.from_json(json.loads(Path(source).read_text(encoding="utf-8")))
    report = check_move_invariance(data)
    if not report.ok:
        raise ValueError(f"{source}: ribbon data fails {', '.join(report.failures)}")
    return data


def evaluate_tangle(diagram: TangleDiagram, data: RibbonMatrixData) -> ExactMatrix:
    """Compose slices bottom to top; a closed diagram gives a 1x1 matrix."""
    d = data.d
    result = ExactMatrix.identity(d ** diagram.bottom, data.ring)
    for sl in diagram.slices:
        result = kron_all([data.tile(t) for t in sl], data.ring) @ result
    return result


@dataclass
class MoveReport:
    results: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.results.values())

    @property
    def failures(self) -> list[str]:
        return [k for k, v in self.results.items() if not v]

    def to_json(self) -> dict:
        return {"format": 1, "ok": self.ok, "moves": self.results}


def check_move_invariance(data: RibbonMatrixData) -> MoveReport:
    """Each regular-isotopy move as an exact matrix identity.

    Matrices act on column vectors, so ``a @ b`` means "``b`` below ``a``".
    """
    d, ring = data.d, data.ring
    i1 = ExactMatrix.identity(d, ring)
    i2 = ExactMatrix.identity(d * d, ring)
    x, y, p = data.pos, data.neg, data.virtual
    cup, cap = data.cup, data.cap

    def k(*ms):
        return kron_all(list(ms), ring)

    res: dict[str, bool] = {}
    res["0:zigzag-left"] = k(cap, i1) @ k(i1, cup) == i1
    res["0:zigzag-right"] = k(i1, cap) @ k(cup, i1) == i1
    res["II:pos-neg"] = x @ y == i2
    res["II:neg-pos"] = y @ x == i2
    res["III:braid"] = check_braided_ybe(x, d)
    res["III:braid-neg"] = check_braided_ybe(y, d)
    # swing moves: a crossing beside an extremum turns into the opposite crossing on the other side
    for label, c, c2 in (("pos", x, y), ("neg", y, x), ("virtual", p, p)):
        res[f"IV:{label}-cap-left"] = k(cap, i1) @ k(i1, c) == k(i1, cap) @ k(c2, i1)
        res[f"IV:{label}-cap-right"] = k(i1, cap) @ k(c, i1) == k(cap, i1) @ k(i1, c2)
        res[f"IV:{label}-cup-left"] = k(c, i1) @ k(i1, cup) == k(i1, c2) @ k(cup, i1)
        res[f"IV:{label}-cup-right"] = k(i1, c) @ k(cup, i1) == k(c2, i1) @ k(i1, cup)
    res["V:virtual-involution"] = p @ p == i2
    res["V:virtual-braid"] = check_braided_ybe(p, d)
    for label, c in (("pos", x), ("neg", y)):
        res[f"V:detour-{label}"] = k(p, i1) @ k(i1, c) @ k(p, i1) == k(i1, p) @ k(c, i1) @ k(i1, p)
    return MoveReport(res)
