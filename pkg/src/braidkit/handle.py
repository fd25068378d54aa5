"""
Handle reduction.

A sigma_i-handle is a subword sigma_i^e ... sigma_i^-e whose interior
contains no sigma_j with j <= i except sigma_(i+1) letters of one uniform
sign d.  Reducing it deletes the outer pair and rewrites each interior
sigma_(i+1)^d as sigma_(i+1)^-e sigma_i^d sigma_(i+1)^e, which preserves
the braid.  Every reduction sequence terminates, and a word with no handle
for its minimal occurring index represents the trivial braid exactly when
it is empty.

The ``leftmost_permitted`` strategy: take the minimal index i occurring in
the word and its leftmost critical pair (consecutive sigma_i occurrences of
opposite sign).  If the enclosed sigma_(i+1) letters are single-signed that
is the handle; otherwise recurse into the enclosure with index i+1, where a
critical pair must exist.
"""

from __future__ import annotations

import dataclasses
from typing import Iterator

from .word import BraidWord, StepBudgetExceeded, flip

LEFTMOST_PERMITTED = "leftmost_permitted"

DEFAULT_BUDGET = 10**6


@dataclasses.dataclass(frozen=True)
class HandleSpan:
    """Inclusive 0-based positions of a handle: word[start] = sigma_index^sign,
    word[end] = sigma_index^-sign; inner_sign is the shared sign of the
    enclosed sigma_(index+1) letters, 0 when there are none."""

    start: int
    end: int
    index: int
    sign: int
    inner_sign: int


def _find_span(letters: tuple[int, ...], lo: int, hi: int, i: int) -> HandleSpan | None:
    prev_pos = -1
    prev_sign = 0
    for pos in range(lo, hi + 1):
        k = letters[pos]
        if abs(k) != i:
            continue
        sign = 1 if k > 0 else -1
        if prev_sign and sign != prev_sign:
            inner_signs = {
                1 if letters[t] > 0 else -1
                for t in range(prev_pos + 1, pos)
                if abs(letters[t]) == i + 1
            }
            if len(inner_signs) <= 1:
                d = inner_signs.pop() if inner_signs else 0
                return HandleSpan(prev_pos, pos, i, prev_sign, d)
            return _find_span(letters, prev_pos + 1, pos - 1, i + 1)
        prev_pos, prev_sign = pos, sign
    return None


def find_handle(w: BraidWord, strategy: str = LEFTMOST_PERMITTED) -> HandleSpan | None:
    """Locate the handle the strategy would reduce next, or None if the word
    has no critical pair for its minimal occurring index."""
    if strategy != LEFTMOST_PERMITTED:
        raise ValueError(f"unknown strategy {strategy!r}")
    if not w.letters:
        return None
    i = min(abs(k) for k in w.letters)
    return _find_span(w.letters, 0, len(w.letters) - 1, i)


def _check_span(letters: tuple[int, ...], h: HandleSpan) -> None:
    ok = (
        0 <= h.start < h.end < len(letters)
        and letters[h.start] == h.index * h.sign
        and letters[h.end] == -h.index * h.sign
    )
    if ok:
        for t in range(h.start + 1, h.end):
            a = abs(letters[t])
            if a <= h.index or (a == h.index + 1 and letters[t] * h.inner_sign < 0):
                ok = False
                break
    if not ok:
        raise ValueError(f"{h} is not a handle of the word")


def _reduce_at(letters: tuple[int, ...], h: HandleSpan) -> tuple[int, ...]:
    i, e = h.index, h.sign
    body: list[int] = []
    for t in range(h.start + 1, h.end):
        k = letters[t]
        if abs(k) == i + 1:
            d = 1 if k > 0 else -1
            body.extend((-(i + 1) * e, i * d, (i + 1) * e))
        else:
            body.append(k)
    return letters[: h.start] + tuple(body) + letters[h.end + 1 :]


def reduce_once(w: BraidWord, h: HandleSpan) -> BraidWord:
    """Replace the handle at h by its reduct."""
    _check_span(w.letters, h)
    return BraidWord(w.n, _reduce_at(w.letters, h))


def iter_reduction(
    w: BraidWord, budget: int = DEFAULT_BUDGET
) -> Iterator[tuple[BraidWord, HandleSpan | None]]:
    """Yield (word, handle-about-to-be-reduced) pairs, ending with
    (reduced word, None)."""
    steps = 0
    while True:
        span = find_handle(w)
        yield w, span
        if span is None:
            return
        steps += 1
        if steps > budget:
            raise StepBudgetExceeded(f"handle reduction exceeded {budget} steps")
        w = BraidWord(w.n, _reduce_at(w.letters, span))


def handle_reduce_counted(w: BraidWord, budget: int = DEFAULT_BUDGET) -> tuple[BraidWord, int]:
    letters = w.letters
    steps = 0
    while letters:
        i = min(abs(k) for k in letters)
        span = _find_span(letters, 0, len(letters) - 1, i)
        if span is None:
            break
        steps += 1
        if steps > budget:
            raise StepBudgetExceeded(f"handle reduction exceeded {budget} steps")
        letters = _reduce_at(letters, span)
    return BraidWord(w.n, letters), steps


def handle_reduce(w: BraidWord, budget: int = DEFAULT_BUDGET) -> BraidWord:
    """Reduce until no critical pair remains for the minimal index.

    The result is equivalent to w and is empty iff w represents the
    trivial braid.
    """
    return handle_reduce_counted(w, budget)[0]


def shorten(w: BraidWord, budget: int = DEFAULT_BUDGET) -> BraidWord:
    """Iterated reduce/flip rounds while the length strictly decreases.

    Compensates the left bias of reduction by alternating with the flipped
    word; empirically this lands on short, often geodesic, representatives.
    """
    cur = handle_reduce(w, budget)
    while True:
        cand = flip(handle_reduce(flip(cur), budget))
        cand = handle_reduce(cand, budget)
        if len(cand) < len(cur):
            cur = cand
        else:
            return cur
