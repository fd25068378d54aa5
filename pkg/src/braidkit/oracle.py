"""
Differential testing support: seeded word generation, brute-force
small-n references, and a cross-checker that runs all six triviality
procedures against each other.

Any disagreement between the procedures is an implementation bug somewhere;
the checker reports them rather than deciding who is right.  Words that
exhaust a step budget are recorded separately and never counted as
disagreements.
"""

from __future__ import annotations

import dataclasses
import random

from . import dynnikov, gridnf, handle, redress, simple
from .simple import Perm
from .word import BraidWord, StepBudgetExceeded, concat, invert, render

BRUTE_MAX_N = 5

METHOD_NAMES = ("greedy", "symmetric", "redress", "redress-left", "handle", "dynnikov")


def random_word(n: int, length: int, seed: int) -> BraidWord:
    """Deterministic pseudo-random word: letters drawn uniformly from the
    2(n-1) signed generators by a Mersenne-Twister stream seeded with
    (seed, n, length)."""
    if n < 2 or length < 0:
        raise ValueError(f"need n >= 2 and length >= 0, got n={n}, length={length}")
    rng = random.Random((seed, n, length))
    letters = []
    for _ in range(length):
        k = rng.randrange(2 * (n - 1))
        i = k // 2 + 1
        letters.append(i if k % 2 == 0 else -i)
    return BraidWord(n, tuple(letters))


def is_trivial(w: BraidWord, method: str, budget: int | None = 10**6) -> bool:
    """Triviality of w by one named procedure."""
    if method == "greedy":
        return gridnf.greedy_nf(w).is_trivial()
    if method == "symmetric":
        return gridnf.symmetric_nf(w).is_trivial()
    if method == "redress":
        return redress.trivial_by_redress(w, redress.DOUBLE_RIGHT, budget)[0]
    if method == "redress-left":
        return redress.trivial_by_redress(w, redress.RIGHT_THEN_LEFT, budget)[0]
    if method == "handle":
        return not handle.handle_reduce(w, budget if budget is not None else handle.DEFAULT_BUDGET).letters
    if method == "dynnikov":
        return dynnikov.is_trivial_coords(w)
    raise ValueError(f"unknown method {method!r}")


def brute_head(f: Perm, g: Perm) -> Perm:
    """Maximal simple left divisor of the product fg, found by enumerating
    all simple braids and testing divisibility by word redressing.

    Reference for :func:`braidkit.simple.normalize_pair`; only feasible for
    small n.
    """
    if len(f) != len(g):
        raise ValueError(f"sizes differ: {len(f)} != {len(g)}")
    n = len(f)
    if n > BRUTE_MAX_N:
        raise ValueError(f"brute_head enumerates {n}! candidates; max n is {BRUTE_MAX_N}")
    target = simple.simple_letters(f) + simple.simple_letters(g)
    divisors = [
        cand
        for cand in simple.all_simples(n)
        if redress.left_divides_word(simple.simple_letters(cand), target)
    ]
    best = max(divisors, key=simple.inversions)
    for cand in divisors:
        if not redress.left_divides_word(
            simple.simple_letters(cand), simple.simple_letters(best)
        ):
            raise AssertionError(f"common divisors of {f}*{g} have no maximum")
    return best


@dataclasses.dataclass
class FuzzReport:
    cases_run: int
    disagreements: list[tuple[str, dict[str, bool]]]
    budget_exhausted: list[str]

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def to_dict(self) -> dict:
        return {
            "cases_run": self.cases_run,
            "disagreements": [
                {"word": w, "verdicts": v} for w, v in self.disagreements
            ],
            "budget_exhausted": list(self.budget_exhausted),
            "ok": self.ok,
        }


def cross_check(
    n_range: tuple[int, int] = (2, 6),
    len_range: tuple[int, int] = (0, 64),
    count: int = 100,
    seed: int = 0,
    budget: int = 10**6,
) -> FuzzReport:
    """Run all six triviality procedures on ``count`` random words and on a
    forced-trivial companion w * w^-1 of each; report any disagreement."""
    rng = random.Random(seed)
    report = FuzzReport(0, [], [])
    for _ in range(count):
        n = rng.randint(*n_range)
        length = rng.randint(*len_range)
        w = random_word(n, length, rng.randrange(2**32))
        companion = concat(w, invert(w))
        for target, forced in ((w, False), (companion, True)):
            report.cases_run += 1
            verdicts: dict[str, bool] = {}
            exhausted = False
            for name in METHOD_NAMES:
                try:
                    verdicts[name] = is_trivial(target, name, budget)
                except StepBudgetExceeded:
                    exhausted = True
            if exhausted:
                report.budget_exhausted.append(render(target))
            answers = set(verdicts.values())
            bad = len(answers) > 1 or (forced and answers != {True})
            if bad:
                report.disagreements.append((render(target), verdicts))
    return report
