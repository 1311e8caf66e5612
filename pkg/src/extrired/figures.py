"""Transcribed Auslander-Reiten grids for the bundled examples.

Each grid is typed in exactly as drawn: rows top to bottom, cells every other
column, one marker symbol per cell.  The reader turns a (row, column) cell back
into an interval module, so the object lists in the fixtures can be checked
against the pictures instead of being trusted.

Coordinates: with ``r`` rows drawn, row ``k`` (1-based from the top) holds the
modules of length ``r + 1 - k``; the module M(i, l) sits in 1-based column
``offset - 2*i - l``, taken modulo 2*vertex_count on a cyclic quiver where the
first and last columns are the same.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import IndecObject, QuiverPresentation
from .errors import InputError


@dataclass(frozen=True)
class ARGrid:
    Q: QuiverPresentation
    offset: int
    rows: tuple  # ((first column, "s s s ..."), ...) top row first

    def cell(self, row: int, col: int) -> IndecObject:
        """Module drawn at 1-based (row, col)."""
        length = len(self.rows) + 1 - row
        twice = self.offset - length - col
        if twice % 2:
            raise InputError(f"cell ({row}, {col}) is off the lattice")
        i = twice // 2
        if self.Q.is_cyclic:
            i %= self.Q.n
        elif not 0 <= i < self.Q.n:
            raise InputError(f"cell ({row}, {col}) is outside the quiver")
        return IndecObject(i, length)

    def cells(self):
        for r, (first, symbols) in enumerate(self.rows, start=1):
            for k, s in enumerate(symbols.split()):
                yield r, first + 2 * k, s

    def read(self) -> dict[str, list[IndecObject]]:
        """symbol -> sorted modules carrying it.  Wrapped duplicate cells must agree."""
        seen: dict[IndecObject, str] = {}
        for r, c, s in self.cells():
            o = self.cell(r, c)
            if o in seen and seen[o] != s:
                raise InputError(f"{o} drawn twice with markers {seen[o]!r} and {s!r}")
            seen[o] = s
        out: dict[str, list[IndecObject]] = {}
        for o, s in seen.items():
            out.setdefault(s, []).append(o)
        return {s: sorted(v) for s, v in sorted(out.items())}

    def objects(self, *symbols: str) -> list[IndecObject]:
        got = self.read()
        return sorted(o for s in symbols for o in got.get(s, []))


# Self-injective Nakayama, 5-cycle, x^3 = 0.  "o" marks membership.
_C5 = QuiverPresentation.cyclic(5, 3)

EX2_X = ARGrid(_C5, 4, (
    (1, "o o o o o o"),
    (2, "* * * o *"),
    (1, "* o * * * *"),
))

EX2_X_PERP1 = ARGrid(_C5, 4, (
    (1, "o o o o o o"),
    (2, "o o * o *"),
    (1, "* o * o o *"),
))

# Linear A6, x^3 = 0.  D = open diamond, B = black lozenge, o = circle,
# C = club, H = heart, * = outside the category.
EX3 = ARGrid(QuiverPresentation.linear(6, 3), 12, (
    (3, "B B * *"),
    (2, "D C o * *"),
    (1, "D C C o * H"),
))

# Stable category of the 12-cycle with x^4 = 0.  C = club, S = spade,
# K = star, * = bullet (in the category), x = outside.
EX4 = ARGrid(QuiverPresentation.cyclic(12, 4), 2, (
    (1, "x C * * * * * S x x x x x"),
    (2, "C * * * * * * S x x x x"),
    (1, "C * * * * * * * S x K x C"),
))
