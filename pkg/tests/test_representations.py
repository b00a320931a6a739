from __future__ import annotations

import json
import random

import pytest

from vbk.laurent import q
from vbk.matrix import ExactMatrix, embed_adjacent, embed_pair, swap_matrix
from vbk.presentations import NAMES, forbidden_relators, relators
from vbk.representations import (
    HeckeRep,
    RepresentationError,
    VirtualRep,
    hecke_rep,
    load_hecke,
    load_rho,
    rep_virtual,
    verify_relators,
)
from vbk.rewrite import slide_normalize
from vbk.sampling import random_mixed
from vbk.words import Permutation, WordError, mu, parse_word, perm_to_word


@pytest.fixture(scope="module")
def rho():
    return load_rho()


def test_trivial_words(rho):
    r, d = rho
    assert rep_virtual(parse_word("", 3), r, d).is_identity()
    assert rep_virtual(parse_word("v1 v1", 3), r, d).is_identity()


def test_sigma_is_string_times_swap(rho):
    r, d = rho
    rep = VirtualRep(r, d, 3)
    for i in (1, 2):
        expected = embed_pair(r, i, i + 1, 3, d) @ embed_adjacent(swap_matrix(d, "laurent"), i, 3, d)
        assert rep.evaluate(parse_word(f"s{i}", 3)) == expected


def test_aybe_relator_matches_check(rho):
    r, d = rho
    assert rep_virtual(parse_word("m1,2 m1,3 m2,3 M1,2 M1,3 M2,3", 3), r, d).is_identity()


def test_equivariance(rho):
    r, d = rho
    rep = VirtualRep(r, d, 4)
    p = Permutation((3, 1, 4, 2))
    t = rep.evaluate(perm_to_word(p))
    for i, j in [(1, 2), (2, 4), (4, 1)]:
        lhs = t @ rep.evaluate(parse_word(f"m{i},{j}", 4)) @ t.inverse()
        assert lhs == rep.evaluate(parse_word(f"m{p(i)},{p(j)}", 4))


def test_homomorphism_and_decomposition(rho):
    r, d = rho
    rng = random.Random(11)
    rep = VirtualRep(r, d, 3)
    for _ in range(25):
        a, b = random_mixed(3, 12, rng), random_mixed(3, 12, rng)
        assert rep.evaluate(a * b) == rep.evaluate(a) @ rep.evaluate(b)
        pure, tail = slide_normalize(a)
        assert rep.evaluate(a) == rep.evaluate(pure) @ rep.evaluate(perm_to_word(tail))


@pytest.mark.parametrize("name", NAMES)
def test_all_presentations_n4(rho, name):
    r, d = rho
    report = verify_relators(relators(name, 4), VirtualRep(r, d, 4))
    assert report.ok and not report.failures


def test_forbidden_separated(rho):
    r, d = rho
    rep = VirtualRep(r, d, 3)
    for kind in ("classical", "stringy"):
        report = verify_relators(forbidden_relators(kind, 3), rep)
        assert report.verdict == "separating"
        assert report.ok


def test_identity_rho_is_degenerate():
    r, d = load_rho("builtin:identity2")
    rep = VirtualRep(r, d, 3)
    assert verify_relators(relators("vb_full", 3), rep).ok
    report = verify_relators(forbidden_relators("stringy", 3), rep)
    assert report.verdict == "non-separating"
    assert not report.ok
    assert "non-separating" in report.summary()


def test_hecke_quadratic_on_generator():
    h = load_hecke()
    t = HeckeRep(h.r, h.z, h.d, 3)
    s = t.evaluate(parse_word("s1", 3))
    assert s @ s == s.scale(q - q ** -1) + ExactMatrix.identity(8, "laurent")


def test_hecke_relators():
    h = load_hecke()
    t = HeckeRep(h.r, h.z, h.d, 4)
    assert verify_relators(relators("vb_full", 4), t).ok
    assert hecke_rep(parse_word("v1 s2 v1 v2 S1 v2", 3), h.r, h.z, 2).is_identity()


def test_hecke_rejects_strings():
    h = load_hecke()
    with pytest.raises(WordError):
        hecke_rep(parse_word("m1,2", 2), h.r, h.z, 2)


def test_bad_rho_rejected(tmp_path):
    bad = ExactMatrix.from_rows([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [1, 0, 0, 1]])
    with pytest.raises(RepresentationError):
        VirtualRep(bad, 2, 3)
    singular = ExactMatrix.from_rows([[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1]])
    with pytest.raises(RepresentationError):
        VirtualRep(singular, 2, 3)
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"d": 2, "rho": bad.to_json()}))
    with pytest.raises(RepresentationError):
        load_rho(str(path))


def test_rho_from_file(tmp_path):
    r, _ = load_rho()
    path = tmp_path / "rho.json"
    path.write_text(json.dumps({"format": 1, "d": 2, "rho": r.to_json()}))
    loaded, d = load_rho(str(path))
    assert loaded == r and d == 2


def test_word_size_must_match(rho):
    r, d = rho
    with pytest.raises(WordError):
        VirtualRep(r, d, 3).evaluate(parse_word("s1", 2))


def test_reversed_string_uses_swapped_rho(rho):
    r, d = rho
    rep = VirtualRep(r, d, 2)
    p = swap_matrix(2, "laurent")
    assert rep.token_matrix(mu(2, 1)) == p @ r @ p
