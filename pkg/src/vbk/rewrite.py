"""Change of generators between the classical and stringy presentations,
and the splitting of a virtual braid into a pure part and a permutation."""

from __future__ import annotations

import enum
from typing import Iterable, Protocol

from .words import (
    MU,
    SIGMA,
    V,
    BraidWord,
    Permutation,
    Token,
    WordError,
    act,
    compose,
    free_reduce,
    mu,
    perm_to_word,
    permutation_of,
    sigma,
    v,
)


def to_stringy(w: BraidWord) -> BraidWord:
    """``σ_i -> μ_{i,i+1} v_i`` and ``σ_i⁻¹ -> v_i μ_{i,i+1}⁻¹``; virtual crossings are kept."""
    out: list[Token] = []
    for t in w.tokens:
        if t.kind == MU:
            raise WordError(f"to_stringy expects a classical word, found {t}")
        if t.kind == V:
            out.append(t)
        elif t.sign > 0:
            out += [mu(t.i, t.i + 1), v(t.i)]
        else:
            out += [v(t.i), mu(t.i, t.i + 1, -1)]
    return free_reduce(BraidWord(w.n, tuple(out)))


def _ladder(i: int, j: int) -> list[Token]:
    # v_{j-1} ... v_{i+1}
    return [v(k) for k in range(j - 1, i, -1)]


def _transposition_word(i: int, j: int) -> list[Token]:
    # t_ij = v_i v_{i+1} ... v_{j-1} ... v_{i+1} v_i
    up = [v(k) for k in range(i, j)]
    return up + up[-2::-1]


def classical_expansion(t: Token) -> list[Token]:
    """Positive connecting string ``μ_ij`` written in σ and v.

    For ``i < j`` this is ``v_{j-1}…v_{i+1} (σ_i v_i) v_{i+1}…v_{j-1}``; the
    reversed string ``μ_ji`` is its conjugate by the transposition word ``t_ij``.
    """
    lo, hi = min(t.i, t.j), max(t.i, t.j)
    ladder = _ladder(lo, hi)
    forward = ladder + [sigma(lo), v(lo)] + ladder[::-1]
    if t.i < t.j:
        return forward
    tw = _transposition_word(lo, hi)
    return tw + forward + tw[::-1]


def to_classical(w: BraidWord) -> BraidWord:
    out: list[Token] = []
    for t in w.tokens:
        if t.kind != MU:
            out.append(t)
            continue
        body = classical_expansion(mu(t.i, t.j))
        if t.sign < 0:
            body = [x.inverse() for x in reversed(body)]
        out += body
    return free_reduce(BraidWord(w.n, tuple(out)))


def _as_stringy(w: BraidWord) -> BraidWord:
    if SIGMA not in w.kinds():
        return w
    out: list[Token] = []
    for t in w.tokens:
        if t.kind != SIGMA:
            out.append(t)
        elif t.sign > 0:
            out += [mu(t.i, t.i + 1), v(t.i)]
        else:
            out += [v(t.i), mu(t.i, t.i + 1, -1)]
    return BraidWord(w.n, tuple(out))


def slide_normalize(w: BraidWord) -> tuple[BraidWord, Permutation]:
    """Slide every virtual crossing to the bottom: ``w = pure · τ``.

    Sweeps left to right, carrying the permutation ``P`` of the virtual
    crossings passed so far; ``P μ = act(P, μ) P`` relabels each string.
    """
    w = _as_stringy(w)
    img = list(range(1, w.n + 1))
    pure: list[Token] = []
    for t in w.tokens:
        if t.kind == V:
            img[t.i - 1], img[t.i] = img[t.i], img[t.i - 1]
        else:
            pure.append(mu(img[t.i - 1], img[t.j - 1], t.sign))
    return free_reduce(BraidWord(w.n, tuple(pure))), Permutation(tuple(img))


def slide_normalize_rtl(w: BraidWord) -> tuple[BraidWord, Permutation]:
    """Same decomposition, computed by a right-to-left sweep.

    Carries the permutation ``S`` of the virtual crossings to the right of the
    current token; a string's prefix permutation is then ``T ∘ S⁻¹``.
    """
    w = _as_stringy(w)
    total = permutation_of(w)
    suffix = Permutation.identity(w.n)
    pure: list[Token] = []
    for t in reversed(w.tokens):
        if t.kind == V:
            suffix = compose(Permutation.transposition(w.n, t.i, t.i + 1), suffix)
        else:
            pure.append(act(compose(total, suffix.inverse()), t))
    pure.reverse()
    return free_reduce(BraidWord(w.n, tuple(pure))), total


def recompose(pure: BraidWord, tail: Permutation) -> BraidWord:
    return pure * perm_to_word(tail)


class Verdict(enum.Enum):
    EQUAL = "equal"
    NOT_EQUAL = "not_equal"
    UNKNOWN = "unknown"


class Evaluator(Protocol):
    def evaluate(self, w: BraidWord): ...


def certify_equal(w1: BraidWord, w2: BraidWord, reps: Iterable[Evaluator] = ()) -> Verdict:
    """Sound but incomplete equality test.

    ``NOT_EQUAL`` is certified by a permutation or representation that
    separates the words, ``EQUAL`` by identical slide normal forms.
    """
    if w1.n != w2.n:
        raise WordError(f"strand counts differ: {w1.n} vs {w2.n}")
    pure1, tail1 = slide_normalize(w1)
    pure2, tail2 = slide_normalize(w2)
    if tail1 != tail2:
        return Verdict.NOT_EQUAL
    if pure1 == pure2:
        return Verdict.EQUAL
    for rep in reps:
        if rep.evaluate(w1) != rep.evaluate(w2):
            return Verdict.NOT_EQUAL
    return Verdict.UNKNOWN
