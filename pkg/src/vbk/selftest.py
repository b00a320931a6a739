"""Seeded random property checks behind ``vbk selftest``."""

from __future__ import annotations

import random

from .representations import VirtualRep, load_rho
from .rewrite import slide_normalize, slide_normalize_rtl, to_classical, to_stringy
from .sampling import random_classical, random_mixed, random_stringy
from .words import free_reduce, perm_to_word, permutation_of


def run_selftest(seed: int = 0, count: int = 50, sizes: tuple[int, ...] = (3, 4)) -> dict[str, bool]:
    rng = random.Random(seed)
    rho, d = load_rho("builtin:hecke2")
    ok = {"round trip classical": True, "round trip stringy": True, "decomposition": True,
          "sweeps agree": True, "homomorphism": True}
    for n in sizes:
        rep = VirtualRep(rho, d, n, validate=False)
        for _ in range(count):
            w = random_classical(n, rng.randint(0, 20), rng)
            ok["round trip classical"] &= to_classical(to_stringy(w)) == free_reduce(w)
            s = random_stringy(n, rng.randint(0, 20), rng)
            ok["round trip stringy"] &= slide_normalize(to_stringy(to_classical(s))) == slide_normalize(s)
            m = random_mixed(n, rng.randint(0, 20), rng)
            pure, tail = slide_normalize(m)
            ok["decomposition"] &= (tail == permutation_of(m)
                                    and rep.evaluate(m) == rep.evaluate(pure) @ rep.evaluate(perm_to_word(tail)))
            ok["sweeps agree"] &= slide_normalize_rtl(m) == (pure, tail)
            m2 = random_mixed(n, rng.randint(0, 10), rng)
            ok["homomorphism"] &= rep.evaluate(m * m2) == rep.evaluate(m) @ rep.evaluate(m2)
    return ok
