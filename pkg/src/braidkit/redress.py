"""
Word redressing (reversing): a rewriting system that pushes negative letters
rightward until the word has the shape u v^-1 with u, v positive.

One right-redressing step rewrites the leftmost (by default) pattern
sigma_i^-1 sigma_j as follows:

- i == j:        delete the pair;
- |i - j| >= 2:  sigma_j sigma_i^-1;
- |i - j| == 1:  sigma_j sigma_i sigma_j^-1 sigma_i^-1.

The terminal positive words (u, v) are unique whatever the rewriting
strategy.  Left redressing is the mirror image: it acts on patterns
sigma_i sigma_j^-1 and terminates at v^-1 u; it is implemented by reversing
the letter order, right-redressing, and reversing back.

The engine itself never caps the number of steps; callers may pass a budget
(the CLI does) in which case exhaustion raises
:class:`~braidkit.word.StepBudgetExceeded` rather than returning a wrong
answer.
"""

from __future__ import annotations

from .word import BraidWord, StepBudgetExceeded

DOUBLE_RIGHT = "double_right"
RIGHT_THEN_LEFT = "right_then_left"
VARIANTS = (DOUBLE_RIGHT, RIGHT_THEN_LEFT)


def _neg_reverse(letters: tuple[int, ...]) -> tuple[int, ...]:
    """Letters of v^-1 given the letters of a positive word v."""
    return tuple(-k for k in reversed(letters))


def redress_right_letters(
    letters: tuple[int, ...], budget: int | None = None
) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    """Right-redress a raw letter sequence.

    Returns ``(u, v, steps)`` where u, v are positive letter tuples with
    the input equivalent to u v^-1, and steps counts elementary rewrites.

    The scan keeps a left stack free of negative-positive adjacencies, so
    each rewrite acts on the leftmost pattern of the current word.
    """
    done: list[int] = []
    pending = list(reversed(letters))
    steps = 0
    while pending:
        y = pending.pop()
        if y > 0 and done and done[-1] < 0:
            x = done.pop()
            i, j = -x, y
            steps += 1
            if budget is not None and steps > budget:
                raise StepBudgetExceeded(f"right redressing exceeded {budget} steps")
            if i == j:
                continue
            if abs(i - j) >= 2:
                pending.append(-i)
                pending.append(j)
            else:
                pending.extend((-i, -j, i, j))
        else:
            done.append(y)
    # done is now positive letters followed by negative letters
    cut = len(done)
    for pos, k in enumerate(done):
        if k < 0:
            cut = pos
            break
    u = tuple(done[:cut])
    v = tuple(-k for k in reversed(done[cut:]))
    return u, v, steps


def redress_left_letters(
    letters: tuple[int, ...], budget: int | None = None
) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    """Left-redress a raw letter sequence to v^-1 u; returns (v, u, steps)."""
    u_rev, v_rev, steps = redress_right_letters(tuple(reversed(letters)), budget)
    return tuple(reversed(v_rev)), tuple(reversed(u_rev)), steps


def rewrite_once(letters: tuple[int, ...], rightmost: bool = False) -> tuple[int, ...] | None:
    """Apply a single right-redressing step, or return None if terminal.

    Reference implementation of the one-step relation; the stack engine above
    must reach the same terminal pair whatever the pattern selection, and
    tests check that leftmost and rightmost selection agree.
    """
    positions = [
        pos
        for pos in range(len(letters) - 1)
        if letters[pos] < 0 and letters[pos + 1] > 0
    ]
    if not positions:
        return None
    pos = positions[-1] if rightmost else positions[0]
    i, j = -letters[pos], letters[pos + 1]
    if i == j:
        repl: tuple[int, ...] = ()
    elif abs(i - j) >= 2:
        repl = (j, -i)
    else:
        repl = (j, i, -j, -i)
    return letters[:pos] + repl + letters[pos + 2 :]


def redress_right(w: BraidWord, budget: int | None = None) -> tuple[BraidWord, BraidWord]:
    """Redress w to u v^-1 and return the positive words (u, v)."""
    u, v, _ = redress_right_letters(w.letters, budget)
    return BraidWord(w.n, u), BraidWord(w.n, v)


def redress_left(w: BraidWord, budget: int | None = None) -> tuple[BraidWord, BraidWord]:
    """Left-redress w to v^-1 u and return the positive words (v, u)."""
    v, u, _ = redress_left_letters(w.letters, budget)
    return BraidWord(w.n, v), BraidWord(w.n, u)


def trivial_by_redress_counted(
    w: BraidWord, variant: str = DOUBLE_RIGHT, budget: int | None = None
) -> tuple[bool, BraidWord, int]:
    """As :func:`trivial_by_redress`, also reporting the total rewrite count."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    u1, v1, steps1 = redress_right_letters(w.letters, budget)
    if variant == DOUBLE_RIGHT:
        # Swap the two blocks and redress v^-1 u again.
        u2, v2, steps2 = redress_right_letters(_neg_reverse(v1) + u1, budget)
        residue = u2 + _neg_reverse(v2)
    else:
        # Keep u v^-1 and push the negative block left instead.
        v2, u2, steps2 = redress_left_letters(u1 + _neg_reverse(v1), budget)
        residue = _neg_reverse(v2) + u2
    return (not residue), BraidWord(w.n, residue), steps1 + steps2


def trivial_by_redress(
    w: BraidWord, variant: str = DOUBLE_RIGHT, budget: int | None = None
) -> tuple[bool, BraidWord]:
    """Decide triviality of w by a double redressing pass.

    ``double_right`` redresses w to u v^-1 and then redresses v^-1 u; the
    word is trivial iff the final residue is empty.  ``right_then_left``
    continues with left redressing instead, in which case the residue
    v''^-1 u'' is a geodesic fraction equivalent to w.
    """
    ok, residue, _ = trivial_by_redress_counted(w, variant, budget)
    return ok, residue


def geodesic_fraction(w: BraidWord, budget: int | None = None) -> tuple[BraidWord, BraidWord]:
    """Shortest negative-positive fraction (v, u) with w equivalent to v^-1 u."""
    u1, v1, _ = redress_right_letters(w.letters, budget)
    v2, u2, _ = redress_left_letters(u1 + _neg_reverse(v1), budget)
    return BraidWord(w.n, v2), BraidWord(w.n, u2)


def left_divides_word(s_letters: tuple[int, ...], x_letters: tuple[int, ...]) -> bool:
    """Does the positive word s left-divide the positive word x (as braids)?

    Redressing s^-1 x leaves an empty negative part exactly when it does.
    """
    _, v, _ = redress_right_letters(_neg_reverse(s_letters) + x_letters, None)
    return not v
