"""Generator tokens, braid words and permutations.

Word order is composition order: in ``w1 * w2`` the diagram of ``w1`` is
stacked on top of ``w2``.  Permutations compose as maps, right factor first,
and ``permutation_of`` is a homomorphism for that rule::

    permutation_of(w1 * w2) == compose(permutation_of(w1), permutation_of(w2))

so ``image[k]`` tracks the strand that enters the bottom of the diagram at
position ``k + 1``.  Under this rule conjugation relabels connecting strings
by ``τ μ_ij τ⁻¹ = μ_{τ(i) τ(j)}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

SIGMA, V, MU = "sigma", "v", "mu"


class WordError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class Token:
    kind: str
    i: int
    j: int = 0
    sign: int = 1

    def __post_init__(self):
        if self.kind not in (SIGMA, V, MU):
            raise WordError(f"unknown generator kind {self.kind!r}")
        if self.sign not in (1, -1):
            raise WordError("sign must be +1 or -1")
        if self.kind == V and self.sign != 1:
            object.__setattr__(self, "sign", 1)
        if self.kind == MU and self.i == self.j:
            raise WordError(f"connecting string needs two distinct strands, got μ{self.i}{self.j}")

    def inverse(self) -> Token:
        if self.kind == V:
            return self
        return Token(self.kind, self.i, self.j, -self.sign)

    def cancels(self, other: Token) -> bool:
        return (self.kind == other.kind and self.i == other.i and self.j == other.j
                and (self.kind == V or self.sign == -other.sign))

    def max_strand(self) -> int:
        return max(self.i, self.j) if self.kind == MU else self.i + 1

    def __str__(self) -> str:
        if self.kind == SIGMA:
            return f"{'s' if self.sign > 0 else 'S'}{self.i}"
        if self.kind == V:
            return f"v{self.i}"
        return f"{'m' if self.sign > 0 else 'M'}{self.i},{self.j}"


def sigma(i: int, sign: int = 1) -> Token:
    return Token(SIGMA, i, 0, sign)


def v(i: int) -> Token:
    return Token(V, i)


def mu(i: int, j: int, sign: int = 1) -> Token:
    return Token(MU, i, j, sign)


@dataclass(frozen=True)
class BraidWord:
    n: int
    tokens: tuple[Token, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        if self.n < 1:
            raise WordError("strand count must be positive")
        for t in self.tokens:
            _check_token(t, self.n)

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self) -> Iterator[Token]:
        return iter(self.tokens)

    def __getitem__(self, k):
        return self.tokens[k]

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.n != other.n:
            raise WordError(f"strand counts differ: {self.n} vs {other.n}")
        return BraidWord(self.n, self.tokens + other.tokens)

    def kinds(self) -> set[str]:
        return {t.kind for t in self.tokens}

    def __str__(self) -> str:
        return format_word(self)


def _check_token(t: Token, n: int) -> None:
    if t.kind == MU:
        if not (1 <= t.i <= n and 1 <= t.j <= n):
            raise WordError(f"index out of range for n={n}: {t}")
    elif not (1 <= t.i <= n - 1):
        raise WordError(f"index out of range for n={n}: {t}")


def word(n: int, tokens: Iterable[Token] = ()) -> BraidWord:
    return BraidWord(n, tuple(tokens))


_TOKEN_RE = re.compile(r"^(?:([sSvV])(\d+)|([mM])(\d+),(\d+))$")


def parse_word(text: str, n: int) -> BraidWord:
    """Read a whitespace-separated word such as ``"s1 v2 S1 m1,3 M3,1"``."""
    tokens = []
    for piece in text.split():
        m = _TOKEN_RE.match(piece)
        if not m:
            raise WordError(f"malformed token {piece!r}")
        if m.group(1):
            letter, i = m.group(1), int(m.group(2))
            if letter in "vV":
                tok = v(i)
            else:
                tok = sigma(i, 1 if letter == "s" else -1)
        else:
            i, j = int(m.group(4)), int(m.group(5))
            if i == j:
                raise WordError(f"connecting string needs distinct strands: {piece!r}")
            tok = mu(i, j, 1 if m.group(3) == "m" else -1)
        _check_token(tok, n)
        tokens.append(tok)
    return BraidWord(n, tuple(tokens))


def format_word(w: BraidWord) -> str:
    return " ".join(str(t) for t in w.tokens)


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent ``x x⁻¹`` pairs and ``v_i v_i`` until none remain."""
    stack: list[Token] = []
    for t in w.tokens:
        if stack and stack[-1].cancels(t):
            stack.pop()
        else:
            stack.append(t)
    return BraidWord(w.n, tuple(stack))


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, tuple(t.inverse() for t in reversed(w.tokens)))


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``image[k - 1]`` is the image of ``k``."""

    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(int(x) for x in self.image))
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise WordError(f"not a permutation: {list(self.image)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> Permutation:
        img = list(range(1, n + 1))
        img[a - 1], img[b - 1] = b, a
        return cls(tuple(img))

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> Permutation:
        img = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b
        return cls(tuple(img))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, k: int) -> int:
        return self.image[k - 1]

    def is_identity(self) -> bool:
        return all(x == k for k, x in enumerate(self.image, 1))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for k, x in enumerate(self.image, 1):
            inv[x - 1] = k
        return Permutation(tuple(inv))

    def __str__(self) -> str:
        return "[" + ",".join(str(x) for x in self.image) + "]"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The map ``k -> p(q(k))``."""
    if p.n != q.n:
        raise WordError("permutations on different strand counts")
    return Permutation(tuple(p.image[x - 1] for x in q.image))


def _swap_right(image: list[int], a: int) -> None:
    # image of p ∘ (a a+1)
    image[a - 1], image[a] = image[a], image[a - 1]


def permutation_of(w: BraidWord) -> Permutation:
    img = list(range(1, w.n + 1))
    for t in w.tokens:
        if t.kind != MU:
            _swap_right(img, t.i)
    return Permutation(tuple(img))


def perm_to_word(p: Permutation) -> BraidWord:
    """Bubble-sort factorization of ``p`` into virtual crossings."""
    img = list(p.image)
    swaps = []
    n = len(img)
    for end in range(n - 1, 0, -1):
        for a in range(1, end + 1):
            if img[a - 1] > img[a]:
                _swap_right(img, a)
                swaps.append(a)
    return BraidWord(n, tuple(v(a) for a in reversed(swaps)))


def act(p: Permutation, g: Token) -> Token:
    """Relabel a connecting string: ``μ_ij -> μ_{p(i) p(j)}``."""
    if g.kind != MU:
        raise WordError(f"the symmetric group acts on connecting strings only, got {g}")
    return Token(MU, p(g.i), p(g.j), g.sign)
