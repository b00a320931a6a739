"""Relator tables for the virtual braid group and its reformulations.

Each relation ``L = R`` is stored one-sided as the freely reduced word
``L R⁻¹``.  Two kinds of relation reduce to the empty word under free
reduction (``v_i² = 1`` and ``μ μ⁻¹ = 1``); they are kept literally, marked
``literal=True``, so a representation still has to kill them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .words import MU, SIGMA, V, BraidWord, free_reduce, invert, parse_word, permutation_of

NAMES = ("vb_full", "vb_reduced", "vs", "vs_reduced", "vp", "sc")
FORBIDDEN = ("classical", "stringy")


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Relator:
    label: str
    word: BraidWord
    literal: bool = False

    def __str__(self) -> str:
        return f"{self.label}: {self.word}"


@dataclass(frozen=True)
class Presentation:
    name: str
    n: int
    generators: frozenset[str]
    relators: tuple[Relator, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.relators)

    def words(self) -> list[BraidWord]:
        return [r.word for r in self.relators]

    def to_json(self) -> dict:
        return {
            "format": 1,
            "name": self.name,
            "n": self.n,
            "generators": sorted(self.generators),
            "relators": [{"label": r.label, "word": str(r.word), "literal": r.literal}
                         for r in self.relators],
        }


def _rel(label: str, lhs: str, rhs: str, n: int) -> Relator:
    w = parse_word(lhs, n) * invert(parse_word(rhs, n))
    return Relator(label, free_reduce(w))


def _literal(label: str, text: str, n: int) -> Relator:
    return Relator(label, parse_word(text, n), literal=True)


def _far_pairs(n: int):
    return [(i, j) for i in range(1, n) for j in range(i + 2, n)]


def _symmetric_relators(n: int) -> list[Relator]:
    out = []
    for i in range(1, n - 1):
        out.append(_rel(f"S1[{i}]", f"v{i} v{i+1} v{i}", f"v{i+1} v{i} v{i+1}", n))
    for i, j in _far_pairs(n):
        out.append(_rel(f"S2[{i},{j}]", f"v{i} v{j}", f"v{j} v{i}", n))
    for i in range(1, n):
        out.append(_literal(f"S3[{i}]", f"v{i} v{i}", n))
    return out


def _vb_full(n: int) -> list[Relator]:
    out = []
    for i in range(1, n - 1):
        out.append(_rel(f"B1[{i}]", f"s{i} s{i+1} s{i}", f"s{i+1} s{i} s{i+1}", n))
    for i, j in _far_pairs(n):
        out.append(_rel(f"B2[{i},{j}]", f"s{i} s{j}", f"s{j} s{i}", n))
    out += _symmetric_relators(n)
    for i in range(1, n - 1):
        out.append(_rel(f"M1[{i}]", f"v{i} s{i+1} v{i}", f"v{i+1} s{i} v{i+1}", n))
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) >= 2:
                out.append(_rel(f"M2[{i},{j}]", f"s{i} v{j}", f"v{j} s{i}", n))
    return out


# conjugators carrying μ12 to μ13 and μ23, and to μ34
_AYBE_LONG = ("m1,2 v2 m1,2 v2 v1 v2 m1,2 v2 v1", "v1 v2 m1,2 v2 v1 v2 m1,2 v2 m1,2")
_COMM_LONG = ("m1,2 v2 v3 v1 v2 m1,2 v2 v1 v3 v2", "v2 v3 v1 v2 m1,2 v2 v1 v3 v2 m1,2")


def _vb_reduced(n: int) -> list[Relator]:
    out = _symmetric_relators(n)
    for j in range(3, n):
        out.append(_rel(f"R-comm[{j}]", f"s1 v{j}", f"v{j} s1", n))
    if n >= 3:
        out.append(_rel("R-braid", "v1 s1 v1 v2 s1 v2 v1 s1 v1", "v2 s1 v2 v1 s1 v1 v2 s1 v2", n))
    if n >= 4:
        out.append(_rel("R-far", "s1 v2 v3 v1 v2 s1 v2 v1 v3 v2", "v2 v3 v1 v2 s1 v2 v1 v3 v2 s1", n))
    return out


def _vs_reduced(n: int) -> list[Relator]:
    out = []
    for j in range(3, n):
        out.append(_rel(f"R-comm[{j}]", f"m1,2 v{j}", f"v{j} m1,2", n))
    if n >= 3:
        out.append(_rel("R-aybe", *_AYBE_LONG, n))
    if n >= 4:
        out.append(_rel("R-far", *_COMM_LONG, n))
    return out + _symmetric_relators(n)


def _vs(n: int) -> list[Relator]:
    out = []
    # τ μ_ij τ⁻¹ = μ_τ(i)τ(j); the adjacent transpositions generate S_n
    for k in range(1, n):
        for i, j in itertools.permutations(range(1, n + 1), 2):
            ti = {k: k + 1, k + 1: k}.get(i, i)
            tj = {k: k + 1, k + 1: k}.get(j, j)
            out.append(_rel(f"slide[{k};{i},{j}]", f"v{k} m{i},{j} v{k}", f"m{ti},{tj}", n))
    if n >= 3:
        out.append(_rel("AYBE", "m1,2 m1,3 m2,3", "m2,3 m1,3 m1,2", n))
    if n >= 4:
        out.append(_rel("COMM", "m1,2 m3,4", "m3,4 m1,2", n))
    return out + _symmetric_relators(n)


def _vp(n: int, dedup: bool) -> list[Relator]:
    out = []
    for i, j, k in itertools.permutations(range(1, n + 1), 3):
        out.append(_rel(f"AYBE[{i},{j},{k}]", f"m{i},{j} m{i},{k} m{j},{k}",
                        f"m{j},{k} m{i},{k} m{i},{j}", n))
    pairs = list(itertools.permutations(range(1, n + 1), 2))
    for (i, j), (k, l) in itertools.product(pairs, pairs):
        if {i, j} & {k, l}:
            continue
        # (ij, kl) and (kl, ij) give mutually inverse relators
        if dedup and (i, j) > (k, l):
            continue
        out.append(_rel(f"COMM[{i},{j};{k},{l}]", f"m{i},{j} m{k},{l}", f"m{k},{l} m{i},{j}", n))
    return out


def _sc(n: int) -> list[Relator]:
    # items (1) and (2) of the category's defining relations: μ and its inverse, v an involution
    out = [_literal("SC1", "m1,2 M1,2", n), _literal("SC1'", "M1,2 m1,2", n)]
    out += [_literal(f"SC2[{i}]", f"v{i} v{i}", n) for i in range(1, n)]
    for j in range(3, n):
        out.append(_rel(f"SC3[{j}]", f"m1,2 v{j}", f"v{j} m1,2", n))
    if n >= 3:
        out.append(_rel("SC4", *_AYBE_LONG, n))
    if n >= 4:
        out.append(_rel("SC5", *_COMM_LONG, n))
    for i in range(1, n - 1):
        out.append(_rel(f"SC6[{i}]", f"v{i} v{i+1} v{i}", f"v{i+1} v{i} v{i+1}", n))
    for i, j in _far_pairs(n):
        out.append(_rel(f"SC7[{i},{j}]", f"v{i} v{j}", f"v{j} v{i}", n))
    return out


_GENERATORS = {
    "vb_full": {SIGMA, V},
    "vb_reduced": {SIGMA, V},
    "vs": {MU, V},
    "vs_reduced": {MU, V},
    "vp": {MU},
    "sc": {MU, V},
}


def relators(name: str, n: int, *, dedup: bool = True) -> Presentation:
    """Index-instantiated relator table ``name`` on ``n`` strands.

    Relations that need more strands than ``n`` provides are omitted.  For
    ``vp`` the commuting relations come in mutually inverse pairs; ``dedup``
    keeps one of each (12 per four strands instead of 24).
    """
    if name not in NAMES:
        raise PresentationError(f"unknown presentation {name!r}; expected one of {NAMES}")
    if n < 2:
        raise PresentationError(f"presentation {name} needs n >= 2, got {n}")
    builders = {
        "vb_full": _vb_full,
        "vb_reduced": _vb_reduced,
        "vs": _vs,
        "vs_reduced": _vs_reduced,
        "vp": lambda m: _vp(m, dedup),
        "sc": _sc,
    }
    rels = builders[name](n)
    return Presentation(name, n, frozenset(_GENERATORS[name]), tuple(rels))


def forbidden_relators(name: str, n: int) -> Presentation:
    """Relations that do *not* hold in the virtual braid group."""
    if name not in FORBIDDEN:
        raise PresentationError(f"unknown forbidden table {name!r}; expected one of {FORBIDDEN}")
    if n < 3:
        raise PresentationError(f"forbidden moves need three strands, got n={n}")
    out = []
    for i in range(1, n - 1):
        if name == "classical":
            out.append(_rel(f"F1[{i}]", f"s{i} v{i+1} S{i}", f"S{i+1} v{i} s{i+1}", n))
            out.append(_rel(f"F2[{i}]", f"S{i} v{i+1} s{i}", f"s{i+1} v{i} S{i+1}", n))
        else:
            out.append(_rel(f"SF1[{i}]", f"m{i},{i+2} m{i+1},{i+2}", f"m{i+1},{i+2} m{i},{i+2}", n))
            out.append(_rel(f"SF2[{i}]", f"m{i},{i+2} m{i},{i+1}", f"m{i},{i+1} m{i},{i+2}", n))
    gens = {SIGMA, V} if name == "classical" else {MU}
    return Presentation(f"forbidden_{name}", n, frozenset(gens), tuple(out))


def relator_uses_only(pres: Presentation) -> bool:
    """Every relator is written in the presentation's admitted generators."""
    return all(r.word.kinds() <= pres.generators for r in pres.relators)


def all_relators_pure(pres: Presentation) -> bool:
    return all(permutation_of(r.word).is_identity() for r in pres.relators)
