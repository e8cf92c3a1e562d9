"""Non-crossing chord diagrams (nets), their two-row tableaux and text codecs.

Positions are 1-based in the public API and run counterclockwise around the
circle; position 1 is the distinguished vertex.  Internally a diagram keeps a
0-based ``mate`` tuple so that ``mate[i] == j`` iff slots ``i`` and ``j`` are
joined by a chord.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterable, Iterator, Sequence


class DiagramError(ValueError):
    """Raised for malformed chord diagrams, tableaux or encodings."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


def catalan_u(d: int) -> int:
    """Return u_d = binom(2d-2, d-1) / d, the number of nets on 2d-2 points."""
    if d < 1:
        raise ValueError(f"catalan_u needs d >= 1, got {d}")
    # python ints are exact, so there is no wraparound to guard against
    return comb(2 * d - 2, d - 1) // d


@dataclass(frozen=True)
class ChordDiagram:
    mate: tuple[int, ...]

    def __post_init__(self):
        mate = self.mate
        n = len(mate)
        if n < 2 or n % 2:
            raise DiagramError(f"need an even number >= 2 of positions, got {n}")
        for i, j in enumerate(mate):
            if not 0 <= j < n or j == i or mate[j] != i:
                raise DiagramError("partner map is not a fixed-point-free involution", i + 1)
        # non-crossing <=> the opener/closer word is a valid bracket sequence
        stack: list[int] = []
        for i, j in enumerate(mate):
            if j > i:
                stack.append(i)
            elif stack.pop() != j:
                raise DiagramError("chords cross", i + 1)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]]) -> ChordDiagram:
        """Build a diagram from 1-based chord endpoints, e.g. ``[(1, 4), (2, 3)]``."""
        pairs = [tuple(p) for p in pairs]
        n = 2 * len(pairs)
        mate = [-1] * n
        for a, b in pairs:
            for p in (a, b):
                if not 1 <= p <= n:
                    raise DiagramError(f"position {p} outside 1..{n}", p)
                if mate[p - 1] != -1:
                    raise DiagramError("position used twice", p)
            mate[a - 1], mate[b - 1] = b - 1, a - 1
        return cls(tuple(mate))

    @property
    def size(self) -> int:
        return len(self.mate)

    @property
    def d(self) -> int:
        return len(self.mate) // 2 + 1

    def partner(self, p: int) -> int:
        return self.mate[p - 1] + 1

    def pairs(self) -> list[tuple[int, int]]:
        return [(i + 1, j + 1) for i, j in enumerate(self.mate) if i < j]

    @cached_property
    def word(self) -> str:
        return "".join("(" if j > i else ")" for i, j in enumerate(self.mate))

    def __str__(self) -> str:
        return self.word

    def __repr__(self) -> str:
        return f"ChordDiagram({self.word!r})"


def _words(opens: int, depth: int, prefix: str) -> Iterator[str]:
    if opens == 0 and depth == 0:
        yield prefix
        return
    if opens:
        yield from _words(opens - 1, depth + 1, prefix + "(")
    if depth:
        yield from _words(opens, depth - 1, prefix + ")")


def _mate_from_word(word: str) -> tuple[int, ...]:
    mate = [0] * len(word)
    stack: list[int] = []
    for i, ch in enumerate(word):
        if ch == "(":
            stack.append(i)
        elif ch == ")":
            if not stack:
                raise DiagramError("unbalanced word: unmatched ')'", i + 1)
            j = stack.pop()
            mate[i], mate[j] = j, i
        else:
            raise DiagramError(f"unexpected character {ch!r}", i + 1)
    if stack:
        raise DiagramError("unbalanced word: unmatched '('", stack[-1] + 1)
    return tuple(mate)


def enumerate_diagrams(d: int) -> Iterator[ChordDiagram]:
    """Yield every net on 2d-2 points once, lexicographically by bracket word."""
    if d < 2:
        raise ValueError(f"enumerate_diagrams needs d >= 2, got {d}")
    for w in _words(d - 1, 0, ""):
        yield ChordDiagram(_mate_from_word(w))


def shift(g: ChordDiagram) -> ChordDiagram:
    """Rotate every chord one position counterclockwise: {a, b} -> {a+1, b+1}."""
    n = g.size
    mate = [0] * n
    for i, j in enumerate(g.mate):
        mate[(i + 1) % n] = (j + 1) % n
    return ChordDiagram(tuple(mate))


def rotate(g: ChordDiagram, steps: int) -> ChordDiagram:
    n = g.size
    mate = [0] * n
    for i, j in enumerate(g.mate):
        mate[(i + steps) % n] = (j + steps) % n
    return ChordDiagram(tuple(mate))


@dataclass(frozen=True)
class FullTableau:
    """A 2 x (d-1) standard Young tableau; rows hold 1-based positions."""

    first_row: tuple[int, ...]
    second_row: tuple[int, ...]

    def __post_init__(self):
        top, bottom = self.first_row, self.second_row
        if len(top) != len(bottom) or not top:
            raise DiagramError("rows must be non-empty and of equal length")
        if sorted(top + bottom) != list(range(1, 2 * len(top) + 1)):
            raise DiagramError("rows must partition 1..2(d-1)")
        for row in (top, bottom):
            if any(a >= b for a, b in zip(row, row[1:])):
                raise DiagramError("rows must be strictly increasing")
        for col, (a, b) in enumerate(zip(top, bottom), 1):
            if b <= a:
                raise DiagramError("column condition fails", col)


def to_tableau(g: ChordDiagram) -> FullTableau:
    top = tuple(i + 1 for i, j in enumerate(g.mate) if j > i)
    bottom = tuple(i + 1 for i, j in enumerate(g.mate) if j < i)
    return FullTableau(top, bottom)


def from_tableau(t: FullTableau) -> ChordDiagram:
    n = 2 * len(t.first_row)
    opener = set(t.first_row)
    word = "".join("(" if p in opener else ")" for p in range(1, n + 1))
    return ChordDiagram(_mate_from_word(word))


_PAIR_RE = re.compile(r"^\s*(\d+)\s*-\s*(\d+)\s*$")


def parse_diagram(text: str) -> ChordDiagram:
    """Parse a bracket word ``"(())()"`` or a pair list ``"1-4,2-3,5-6"``."""
    text = text.strip()
    if not text:
        raise DiagramError("empty encoding")
    if text[0] in "()":
        if len(text) % 2:
            raise DiagramError(f"odd length {len(text)}")
        return ChordDiagram(_mate_from_word(text))
    pairs = []
    for chunk in text.split(","):
        m = _PAIR_RE.match(chunk)
        if m is None:
            raise DiagramError(f"bad pair {chunk.strip()!r}")
        pairs.append((int(m.group(1)), int(m.group(2))))
    g = ChordDiagram.from_pairs(pairs)
    return g


def format_diagram(g: ChordDiagram) -> str:
    return g.word
