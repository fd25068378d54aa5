"""
Dynnikov coordinates: a faithful 2n-integer coordinatization of B_n.

A word acts on the base vector (0, 1, 0, 1, ..., 0, 1) one letter at a
time; the letter sigma_i^e touches only the quadruple
(a_i, b_i, a_(i+1), b_(i+1)), through piecewise-linear updates over
(max, +).  Two words represent the same braid exactly when they move the
base vector to the same coordinates.

All arithmetic is exact: only additions, max and min on Python integers,
and one letter grows coordinate magnitudes by at most one bit.
"""

from __future__ import annotations

import dataclasses

from .word import BraidWord, embed

Quad = tuple[int, int, int, int]


@dataclasses.dataclass(frozen=True)
class DynnikovCoords:
    n: int
    coords: tuple[int, ...]

    def __post_init__(self):
        assert len(self.coords) == 2 * self.n

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coords)


def base(n: int) -> DynnikovCoords:
    return DynnikovCoords(n, (0, 1) * n)


def step(quad: Quad, sign: int) -> Quad:
    """Update one coordinate quadruple by sigma^sign."""
    x1, y1, x2, y2 = quad
    if sign > 0:
        z1 = x1 - min(y1, 0) - x2 + max(y2, 0)
        return (
            x1 + max(y1, 0) + max(0, max(y2, 0) - z1),
            y2 - max(z1, 0),
            x2 + min(y2, 0) + min(0, min(y1, 0) + z1),
            y1 + max(z1, 0),
        )
    z2 = x1 + min(y1, 0) - x2 - max(y2, 0)
    return (
        x1 - max(y1, 0) - max(0, max(y2, 0) + z2),
        y2 + min(z2, 0),
        x2 - min(y2, 0) - min(0, min(y1, 0) - z2),
        y1 - min(z2, 0),
    )


def act(c: DynnikovCoords, w: BraidWord) -> DynnikovCoords:
    """Left-to-right action of the word on a coordinate vector."""
    if w.n != c.n:
        raise ValueError(f"strand counts differ: {w.n} != {c.n}")
    vec = list(c.coords)
    for k in w.letters:
        i = abs(k)
        lo = 2 * (i - 1)
        vec[lo : lo + 4] = step((vec[lo], vec[lo + 1], vec[lo + 2], vec[lo + 3]), 1 if k > 0 else -1)
    return DynnikovCoords(c.n, tuple(vec))


def coords(w: BraidWord) -> DynnikovCoords:
    """Dynnikov coordinates of the braid represented by w."""
    return act(base(w.n), w)


def is_trivial_coords(w: BraidWord) -> bool:
    return coords(w) == base(w.n)


def equal_by_coords(w1: BraidWord, w2: BraidWord) -> bool:
    """Braid equality by comparing coordinates; the smaller-index word is
    embedded into the larger group first."""
    n = max(w1.n, w2.n)
    return coords(embed(w1, n)) == coords(embed(w2, n))
