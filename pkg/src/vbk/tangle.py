"""Rotational virtual tangle diagrams and concentration into formal traces.

A diagram is a stack of horizontal slices, listed bottom to top.  Each slice
is a row of tiles:

====  =================  ========
tile  meaning            strands
====  =================  ========
i     identity line      1 -> 1
x+    positive crossing  2 -> 2
x-    negative crossing  2 -> 2
o     virtual crossing   2 -> 2
u     cup (a minimum)    0 -> 2
n     cap (a maximum)    2 -> 0
====  =================  ========

Crossing signs are taken with respect to the vertical.  All turning happens
at cups and caps, half a turn each.  A component is unoriented.  It is
traversed in the direction whose net turning is clockwise, so its rotation
number ``g`` is never negative.  Then ``G^g`` stands for its flat curls.

The crossing decorations ``ρ = Σ e ⊗ e′`` are placed like this:

* ``x+``: ``e`` sits on the strand running bottom-right to top-left and
  ``e′`` on the other strand.
* ``x-``: ``s(e)`` sits on the strand running bottom-left to top-right and
  ``e′`` on the other strand.

Each decoration then slides back along the traversal to a basepoint on a
downward segment.  A decoration that crosses a cup or cap counterclockwise
picks up one power of the antipode.  Crossing clockwise removes one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

TILES = {"i": (1, 1), "x+": (2, 2), "x-": (2, 2), "o": (2, 2), "u": (0, 2), "n": (2, 0)}
CROSSINGS = ("x+", "x-")


class TangleError(ValueError):
    pass


@dataclass(frozen=True)
class TangleDiagram:
    slices: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "slices", tuple(tuple(s) for s in self.slices))
        widths = []
        for k, sl in enumerate(self.slices, 1):
            for tile in sl:
                if tile not in TILES:
                    raise TangleError(f"slice {k}: unknown tile {tile!r}")
            if not sl:
                raise TangleError(f"slice {k} is empty")
            widths.append((sum(TILES[t][0] for t in sl), sum(TILES[t][1] for t in sl)))
        for k in range(1, len(widths)):
            if widths[k][0] != widths[k - 1][1]:
                raise TangleError(
                    f"slice {k + 1} expects {widths[k][0]} strands from below, "
                    f"slice {k} provides {widths[k - 1][1]}")
        object.__setattr__(self, "_widths", tuple(widths))

    @property
    def bottom(self) -> int:
        return self._widths[0][0] if self._widths else 0

    @property
    def top(self) -> int:
        return self._widths[-1][1] if self._widths else 0

    def is_closed(self) -> bool:
        return self.bottom == 0 and self.top == 0

    def crossing_count(self) -> int:
        return sum(t in CROSSINGS for sl in self.slices for t in sl)

    def __str__(self) -> str:
        return " / ".join(" ".join(sl) for sl in self.slices)


def parse_tangle(text: str) -> TangleDiagram:
    """Read ``"u / i u i / ..."``; newlines also separate slices and ``#`` starts a comment."""
    lines = [re.sub(r"#.*", "", line) for line in text.splitlines()]
    body = "/".join(lines)
    pieces = [p.split() for p in body.split("/")]
    return TangleDiagram(tuple(tuple(p) for p in pieces if p))


def load_tangle(source: str | Path) -> TangleDiagram:
    """Read a diagram file, or a bundled one given as ``builtin:NAME``."""
    return parse_tangle(tangle_text(source))


def tangle_text(source: str | Path) -> str:
    source = str(source)
    if source.startswith("builtin:"):
        name = source.split(":", 1)[1]
        path = resources.files("vbk").joinpath("data").joinpath("tangles").joinpath(f"{name}.tng")
        if not path.is_file():
            raise TangleError(f"unknown builtin tangle {name!r}")
        return path.read_text(encoding="utf-8")
    return Path(source).read_text(encoding="utf-8")


def builtin_tangles() -> list[str]:
    folder = resources.files("vbk").joinpath("data").joinpath("tangles")
    return sorted(p.name[:-4] for p in folder.iterdir() if p.name.endswith(".tng"))


# -- traversal ---------------------------------------------------------------

# an arc is one tile leg: ("v", bottom_node, top_node, label) for a vertical
# leg, ("cup", left_node, right_node) or ("cap", left_node, right_node);
# nodes are (level, position) on the slice boundaries.

_CW, _CCW = 1, -1


def _arcs(d: TangleDiagram) -> list[tuple]:
    arcs = []
    crossing_id = 0
    for level, sl in enumerate(d.slices):
        b = t = 0
        for tile in sl:
            lo, hi = (level, b), (level + 1, t)
            if tile == "i":
                arcs.append(("v", lo, hi, None))
            elif tile == "u":
                arcs.append(("cup", hi, (level + 1, t + 1)))
            elif tile == "n":
                arcs.append(("cap", lo, (level, b + 1)))
            else:
                ne = ("v", lo, (level + 1, t + 1))    # bottom-left to top-right
                nw = ("v", (level, b + 1), hi)        # bottom-right to top-left
                if tile == "o":
                    arcs += [ne + (None,), nw + (None,)]
                elif tile == "x+":
                    arcs += [ne + ((crossing_id, True, 0),), nw + ((crossing_id, False, 0),)]
                    crossing_id += 1
                else:
                    arcs += [ne + ((crossing_id, False, 1),), nw + ((crossing_id, True, 0),)]
                    crossing_id += 1
            b += TILES[tile][0]
            t += TILES[tile][1]
    return arcs


def _components(d: TangleDiagram) -> list[list[tuple]]:
    """Closed components as cyclic event lists in an arbitrary orientation.

    Events are ``("turn", ±1)`` (clockwise positive), ``("seg", going_down)``
    and ``("dec", crossing, is_prime, intrinsic_power)``.
    """
    if not d.is_closed():
        raise TangleError(f"diagram is not closed: [{d.bottom}] -> [{d.top}]")
    arcs = _arcs(d)
    at: dict[tuple, list[int]] = {}
    for k, a in enumerate(arcs):
        for node in (a[1], a[2]):
            at.setdefault(node, []).append(k)
    seen = [False] * len(arcs)
    comps = []
    for start in range(len(arcs)):
        if seen[start]:
            continue
        events = []
        k, node = start, arcs[start][1]
        while not seen[k]:
            seen[k] = True
            a = arcs[k]
            kind, p, q = a[0], a[1], a[2]
            far = q if node == p else p
            if kind == "v":
                events.append(("seg", far == p))
                if a[3] is not None:
                    events.append(("dec",) + a[3])
            else:
                left_to_right = node == p
                if kind == "cap":
                    events.append(("turn", _CW if left_to_right else _CCW))
                else:
                    events.append(("turn", _CCW if left_to_right else _CW))
            node = far
            nxt = [j for j in at[node] if j != k]
            k = nxt[0] if nxt else k
        comps.append(events)
    return comps


def _reverse(events: list[tuple]) -> list[tuple]:
    out = []
    for ev in reversed(events):
        if ev[0] == "turn":
            out.append(("turn", -ev[1]))
        elif ev[0] == "seg":
            out.append(("seg", not ev[1]))
        else:
            out.append(ev)
    return out


def _net_turn(events: list[tuple]) -> int:
    return sum(ev[1] for ev in events if ev[0] == "turn")


def rotation_numbers(d: TangleDiagram) -> list[int]:
    """Absolute Whitney index of each closed component, in traversal order."""
    return [abs(_net_turn(ev)) // 2 for ev in _components(d)]


# -- trace words -------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Decoration:
    crossing: int
    prime: bool
    power: int


@dataclass(frozen=True)
class TraceWord:
    """``TR[d_1 d_2 ... d_k G^g]`` for one component, read left to right."""

    tokens: tuple[Decoration, ...]
    g: int = 0

    def rotate(self, k: int = 1) -> TraceWord:
        """Move the first ``k`` tokens to the end, using ``TR(a x G^g) = TR(x s^{2g}(a) G^g)``."""
        if not self.tokens:
            return self
        laps, k = divmod(k, len(self.tokens))
        toks = tuple(Decoration(t.crossing, t.prime, t.power + 2 * self.g * laps) for t in self.tokens)
        head = tuple(Decoration(t.crossing, t.prime, t.power + 2 * self.g) for t in toks[:k])
        return TraceWord(toks[k:] + head, self.g)

    def to_json(self) -> dict:
        return {"g": self.g,
                "tokens": [{"crossing": t.crossing, "side": "e'" if t.prime else "e", "power": t.power}
                           for t in self.tokens]}


def _decorations(events: list[tuple]) -> list[Decoration]:
    """Powers relative to a basepoint on a downward segment."""
    turned, ref, out = 0, None, []
    for ev in events:
        if ev[0] == "turn":
            turned += ev[1]
        elif ev[0] == "seg":
            if ev[1] and ref is None:
                ref = turned
        else:
            out.append((turned, ev))
    if ref is None:
        ref = 0
    return [Decoration(ev[1], ev[2], ev[3] + t - ref) for t, ev in out]


def _canonical_rotation(word: TraceWord) -> tuple[tuple, TraceWord]:
    best = None
    for k in range(max(1, len(word.tokens))):
        w = word.rotate(k)
        if w.tokens:
            shift = 2 * (min(t.power for t in w.tokens) // 2)
            w = TraceWord(tuple(Decoration(t.crossing, t.prime, t.power - shift) for t in w.tokens), w.g)
        labels: dict[int, int] = {}
        for t in w.tokens:
            labels.setdefault(t.crossing, len(labels))
        key = (tuple(t.power for t in w.tokens), tuple(0 if t.prime else 1 for t in w.tokens),
               tuple(labels[t.crossing] for t in w.tokens))
        if best is None or key < best[0]:
            best = (key, w)
    return best


def canonical(words: list[TraceWord]) -> list[TraceWord]:
    """Canonical form: best cyclic rotation per component, components sorted,
    crossings renumbered by first appearance."""
    picked = sorted((_canonical_rotation(w) for w in words), key=lambda kw: (kw[1].g, kw[0]))
    labels: dict[int, int] = {}
    for _, w in picked:
        for t in w.tokens:
            labels.setdefault(t.crossing, len(labels))
    return [TraceWord(tuple(Decoration(labels[t.crossing], t.prime, t.power) for t in w.tokens), w.g)
            for _, w in picked]


def _component_word(events: list[tuple]) -> TraceWord:
    net = _net_turn(events)
    if net < 0:
        events, net = _reverse(events), -net
    word = TraceWord(tuple(_decorations(events)), net // 2)
    if net == 0:
        # no preferred direction: take the smaller of the two readings
        other = TraceWord(tuple(_decorations(_reverse(events))), 0)
        word = min((_canonical_rotation(word), _canonical_rotation(other)), key=lambda kw: kw[0])[1]
    return word


def concentrate(d: TangleDiagram) -> list[TraceWord]:
    """Slide every decoration of every component to one point."""
    return canonical([_component_word(ev) for ev in _components(d)])


_LETTERS = "efhjklmnpqrtuwxyz"
_SUPER = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


def _letter(k: int) -> str:
    return _LETTERS[k] if k < len(_LETTERS) else f"e{k}"


def _power(p: int, ascii_only: bool) -> str:
    if p == 1:
        return ""
    return f"^{p}" if ascii_only else str(p).translate(_SUPER)


def format_trace(w: TraceWord, ascii_only: bool = False) -> str:
    prime = "'" if ascii_only else "′"
    parts = []
    for t in w.tokens:
        sym = _letter(t.crossing) + (prime if t.prime else "")
        if t.power != 0:
            sym = f"s{_power(t.power, ascii_only)}({sym})"
        parts.append(sym)
    if w.g:
        parts.append("G" + _power(w.g, ascii_only))
    return "TR[" + (" ".join(parts) if parts else "1") + "]"


def format_traces(words: list[TraceWord], ascii_only: bool = False) -> str:
    return " ".join(format_trace(w, ascii_only) for w in words) if words else "1"
