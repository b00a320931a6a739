from __future__ import annotations

import copy
import random
from fractions import Fraction

import pytest

from vbk.hopf import (
    BUILTIN_HOPF,
    HopfData,
    HopfError,
    _evaluate_trace_naive,
    check_hopf_axioms,
    check_quasitriangular,
    check_ribbon,
    check_right_integral,
    evaluate_trace,
    load_hopf,
    u_element,
)
from vbk.tangle import Decoration, TraceWord, concentrate, load_tangle, parse_tangle


@pytest.fixture(scope="module", params=BUILTIN_HOPF)
def algebra(request):
    return load_hopf(f"builtin:{request.param}")


@pytest.fixture(scope="module")
def sweedler():
    return load_hopf("builtin:sweedler")


@pytest.fixture(scope="module")
def z2():
    return load_hopf("builtin:z2")


def test_builtins_pass_every_check(algebra):
    for check in (check_hopf_axioms, check_quasitriangular, check_ribbon, check_right_integral):
        report = check(algebra)
        assert report.ok, (algebra.name, report.failures)


def test_sweedler_u_element_is_g(sweedler):
    # worked out by hand from ρ: only the 1⊗1, g⊗g terms survive in Σ s(e′)e
    g = sweedler.basis_vec(1)
    assert u_element(sweedler) == g
    assert sweedler.G == g


def test_sweedler_integral_is_dual_of_x(sweedler):
    assert sweedler.integral == sweedler.basis_vec(2)


def test_antipode_squares_to_conjugation_by_g(sweedler):
    x = sweedler.basis_vec(2)
    # s(x) = -gx, s(-gx) = -x, so s² flips the sign of x
    assert sweedler.apply_s(x, 2) == sweedler.scale(-1, x)
    assert sweedler.apply_s(x, 4) == x


def test_corrupted_antipode_fails(z2):
    bad = copy.deepcopy(z2)
    bad.antipode[1] = [Fraction(1), Fraction(0)]
    assert "antipode" in check_hopf_axioms(bad).failures


def test_corrupted_rho_fails(sweedler):
    bad = copy.deepcopy(sweedler)
    e, f = bad.rho[-1]
    bad.rho[-1] = (e, tuple(-c for c in f))
    report = check_quasitriangular(bad)
    assert not report.ok


def test_wrong_integral_fails(sweedler):
    bad = copy.deepcopy(sweedler)
    bad.integral = sweedler.basis_vec(0)
    assert not check_right_integral(bad).ok


def test_json_round_trip(algebra):
    again = HopfData.from_json(algebra.to_json())
    assert again.to_json() == algebra.to_json()


def test_unknown_builtin():
    with pytest.raises(HopfError):
        load_hopf("builtin:nope")


def test_circle_is_functional_of_g(algebra):
    words = concentrate(parse_tangle("u / n"))
    tr = algebra.left_matrix(algebra.G).trace()
    assert evaluate_trace(words, algebra) == tr


def test_move_two_closure_matches_two_circles(z2, sweedler):
    a = concentrate(parse_tangle("u u / i x+ i / i x- i / n n"))
    b = concentrate(parse_tangle("u u / n n"))
    assert evaluate_trace(a, z2) == evaluate_trace(b, z2) == 4
    assert evaluate_trace(a, sweedler) == evaluate_trace(b, sweedler) == 0


def test_trefoil_values():
    words = concentrate(load_tangle("builtin:virtual-trefoil"))
    values = {name: evaluate_trace(words, load_hopf(f"builtin:{name}")) for name in BUILTIN_HOPF}
    assert values == {"trivial": 1, "z2": 2, "sweedler": 4}


def test_rotation_invariance(algebra):
    rng = random.Random(5)
    for name in ("virtual-trefoil", "curl", "two-circles"):
        words = concentrate(load_tangle(f"builtin:{name}"))
        base = evaluate_trace(words, algebra)
        for _ in range(4):
            turned = [w.rotate(rng.randint(0, 7)) for w in words]
            assert evaluate_trace(turned, algebra) == base


def test_dynamic_program_matches_enumeration(algebra):
    rng = random.Random(11)
    for _ in range(15):
        mids = []
        for _ in range(rng.randint(0, 4)):
            p = rng.randint(0, 2)
            mids.append(" ".join(["i"] * p + [rng.choice(["x+", "x-", "o"])] + ["i"] * (2 - p)))
        words = concentrate(parse_tangle(" / ".join(["u u"] + mids + ["n n"])))
        assert evaluate_trace(words, algebra) == _evaluate_trace_naive(words, algebra)


def test_integral_functional_needs_symmetry(z2, sweedler):
    words = concentrate(load_tangle("builtin:virtual-trefoil"))
    assert evaluate_trace(words, z2, "integral") == 1
    with pytest.raises(HopfError, match="not symmetric"):
        evaluate_trace(words, sweedler, "integral")


def test_missing_structure(z2):
    words = [TraceWord((Decoration(0, False, 0), Decoration(0, True, 0)), 1)]
    no_rho = copy.deepcopy(z2)
    no_rho.rho = None
    with pytest.raises(HopfError):
        evaluate_trace(words, no_rho)
    no_g = copy.deepcopy(z2)
    no_g.G = None
    with pytest.raises(HopfError):
        evaluate_trace(words, no_g)
    with pytest.raises(HopfError):
        evaluate_trace(words, z2, "bogus")


def _close(diagram, left: int, right: int, rng) -> tuple[list[str], list[str]]:
    """Cups below and caps above, with random crossings in the padded region."""
    wb, wt = diagram.bottom + left + right, diagram.top + left + right

    def noise(w):
        rows = []
        for _ in range(rng.randint(0, 2) if w >= 2 else 0):
            p = rng.randint(0, w - 2)
            rows.append(" ".join(["i"] * p + [rng.choice(["x+", "x-", "o"])] + ["i"] * (w - 2 - p)))
        return rows

    below = ([" ".join(["u"] * (wb // 2))] if wb else []) + noise(wb)
    above = noise(wt) + ([" ".join(["n"] * (wt // 2))] if wt else [])
    return below, above


@pytest.mark.parametrize("pair", ["move-0", "move-II", "move-III", "move-IV", "move-IV-virtual", "move-V"])
def test_trace_invariant_under_moves_in_context(pair, sweedler, z2):
    rng = random.Random(pair)
    a, b = (load_tangle(f"builtin:{pair}.{s}") for s in "ab")
    for _ in range(6):
        pad = rng.randint(0, 2)
        if (a.bottom + pad) % 2:
            pad += 1
        left = rng.randint(0, pad)
        below, above = _close(a, left, pad - left, rng)

        def embed(d):
            rows = [" ".join(["i"] * left + list(sl) + ["i"] * (pad - left)) for sl in d.slices]
            return concentrate(parse_tangle(" / ".join(below + rows + above)))

        wa, wb = embed(a), embed(b)
        for h in (sweedler, z2):
            assert evaluate_trace(wa, h) == evaluate_trace(wb, h)
        assert evaluate_trace(wa, z2, "integral") == evaluate_trace(wb, z2, "integral")
