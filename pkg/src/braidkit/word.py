"""
Braid words over the Artin generators.

A word is stored as a tuple of nonzero integers: ``+i`` stands for the
generator sigma_i (strand i crossing over strand i+1) and ``-i`` for its
inverse.  Two text formats are supported:

- ``alpha``: ``a``..``y`` for sigma_1..sigma_25, ``A``..``Y`` for their
  inverses, so ``"aBa"`` is sigma_1 sigma_2^-1 sigma_1.
- ``intlist``: whitespace-separated nonzero integers, e.g. ``"1 -2 1"``.

The strand count n travels with the word.  Binary operations require equal
n and fail otherwise; use :func:`embed` to widen a word explicitly.
"""

from __future__ import annotations

import dataclasses
from typing import Iterator

ALPHA = "alpha"
INTLIST = "intlist"
FORMATS = (ALPHA, INTLIST)

_ALPHA_MAX = 25


class StepBudgetExceeded(RuntimeError):
    """A rewriting engine ran out of its step budget.

    This is a resource error, never a verdict about the input word.
    """


@dataclasses.dataclass(frozen=True)
class Letter:
    """A single signed generator sigma_index^sign, sign in {+1, -1}."""

    index: int
    sign: int

    def __post_init__(self):
        assert self.index >= 1 and self.sign in (-1, 1)

    @staticmethod
    def from_int(k: int) -> Letter:
        assert k != 0
        return Letter(abs(k), 1 if k > 0 else -1)

    def to_int(self) -> int:
        return self.index * self.sign


@dataclasses.dataclass(frozen=True)
class BraidWord:
    """A braid word on ``n`` strands, letters in the signed-integer encoding."""

    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        assert self.n >= 2
        assert all(k != 0 and abs(k) < self.n for k in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def letter_objects(self) -> tuple[Letter, ...]:
        return tuple(Letter.from_int(k) for k in self.letters)

    def __str__(self) -> str:
        return render(self)


def parse(text: str, fmt: str = ALPHA, n: int | None = None) -> BraidWord:
    """Parse a braid word from text.

    When ``n`` is omitted it is inferred as 1 + the largest generator index
    (minimum 2).

    >>> parse("aBa").letters
    (1, -2, 1)
    >>> parse("1 -2 1", fmt="intlist").n
    3
    >>> parse("", n=4)
    BraidWord(n=4, letters=())
    """
    if fmt == ALPHA:
        ints = []
        for ch in text:
            if ch.isspace():
                continue
            k = ord(ch.lower()) - ord("a") + 1
            if not ("a" <= ch.lower() <= "y"):
                raise ValueError(f"letter {ch!r} outside a..y / A..Y")
            ints.append(k if ch.islower() else -k)
    elif fmt == INTLIST:
        ints = []
        for tok in text.split():
            try:
                k = int(tok)
            except ValueError:
                raise ValueError(f"bad integer token {tok!r}") from None
            if k == 0:
                raise ValueError("0 is not a generator index")
            ints.append(k)
    else:
        raise ValueError(f"unknown word format {fmt!r}")

    need = max((abs(k) for k in ints), default=1) + 1
    if n is None:
        n = max(need, 2)
    elif need > n:
        raise ValueError(f"generator index {need - 1} requires n >= {need}, got n={n}")
    return BraidWord(n, tuple(ints))


def render(w: BraidWord, fmt: str = ALPHA) -> str:
    """Render a word back to text; inverse of :func:`parse`.

    >>> render(parse("aBabacABABAbbCB"))
    'aBabacABABAbbCB'
    >>> render(parse("aB"), fmt="intlist")
    '1 -2'
    """
    if fmt == ALPHA:
        chars = []
        for k in w.letters:
            i = abs(k)
            if i > _ALPHA_MAX:
                raise ValueError(f"index {i} too large for alpha format (max {_ALPHA_MAX})")
            ch = chr(ord("a") + i - 1)
            chars.append(ch if k > 0 else ch.upper())
        return "".join(chars)
    if fmt == INTLIST:
        return " ".join(str(k) for k in w.letters)
    raise ValueError(f"unknown word format {fmt!r}")


def invert(w: BraidWord) -> BraidWord:
    """The inverse word: reverse the letters and swap each sign.

    >>> render(invert(parse("abc")))
    'CBA'
    """
    return BraidWord(w.n, tuple(-k for k in reversed(w.letters)))


def flip(w: BraidWord) -> BraidWord:
    """Apply the flip automorphism sigma_i -> sigma_(n-i), signs preserved.

    >>> render(flip(parse("aBc", n=4)))
    'cBa'
    """
    n = w.n
    return BraidWord(n, tuple((n - abs(k)) * (1 if k > 0 else -1) for k in w.letters))


def free_reduce(w: BraidWord) -> BraidWord:
    """Delete adjacent sigma_i^e sigma_i^-e pairs until none remain.

    >>> render(free_reduce(parse("aBbA", n=4)))
    ''
    """
    stack: list[int] = []
    for k in w.letters:
        if stack and stack[-1] == -k:
            stack.pop()
        else:
            stack.append(k)
    return BraidWord(w.n, tuple(stack))


def concat(u: BraidWord, v: BraidWord) -> BraidWord:
    if u.n != v.n:
        raise ValueError(f"strand counts differ: {u.n} != {v.n}; embed() first")
    return BraidWord(u.n, u.letters + v.letters)


def embed(w: BraidWord, n: int) -> BraidWord:
    """Widen a word to a larger strand count (the standard inclusion)."""
    if n < w.n:
        raise ValueError(f"cannot embed an n={w.n} word into n={n}")
    return BraidWord(n, w.letters)
