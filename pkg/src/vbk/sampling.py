"""Seeded random words for property checks."""

from __future__ import annotations

import random

from .words import BraidWord, mu, sigma, v


def random_classical(n: int, length: int, rng: random.Random) -> BraidWord:
    """Word in ``σ_i^{±1}`` and ``v_i``."""
    tokens = []
    for _ in range(length):
        i = rng.randint(1, n - 1)
        if rng.random() < 0.5:
            tokens.append(sigma(i, rng.choice((1, -1))))
        else:
            tokens.append(v(i))
    return BraidWord(n, tuple(tokens))


def random_stringy(n: int, length: int, rng: random.Random) -> BraidWord:
    """Word in ``μ_ij^{±1}`` (any ordered pair) and ``v_i``."""
    tokens = []
    for _ in range(length):
        if rng.random() < 0.5:
            i, j = rng.sample(range(1, n + 1), 2)
            tokens.append(mu(i, j, rng.choice((1, -1))))
        else:
            tokens.append(v(rng.randint(1, n - 1)))
    return BraidWord(n, tuple(tokens))


def random_mixed(n: int, length: int, rng: random.Random) -> BraidWord:
    tokens = []
    for _ in range(length):
        r = rng.random()
        if r < 0.35:
            tokens.append(sigma(rng.randint(1, n - 1), rng.choice((1, -1))))
        elif r < 0.65:
            tokens.append(v(rng.randint(1, n - 1)))
        else:
            i, j = rng.sample(range(1, n + 1), 2)
            tokens.append(mu(i, j, rng.choice((1, -1))))
    return BraidWord(n, tuple(tokens))
