"""
Permutations of {1..n} as simple braids, and the lattice primitives on them.

A permutation f is a tuple in one-line notation, ``f[k] = f(k+1)``, values
1..n.  The projection pi sends sigma_i to the transposition (i, i+1) and
satisfies pi(xy) = pi(x) o pi(y) with (f o g)(i) = f(g(i)).  Under pi the
simple braids -- the divisors of the half twist Delta_n -- correspond
bijectively to permutations, so a simple braid *is* a permutation tuple here.

Divisibility of atoms reads off the permutation: sigma_i left-divides the
simple braid f iff i is a recoil (f^-1(i) > f^-1(i+1)), and right-divides it
iff i is a descent (f(i) > f(i+1)).

Three deliberately different mechanisms compute the lattice operations, so
they can cross-validate each other:

- gcd_left strips common left atoms;
- c_tile (left lcm and complements) left-redresses canonical words;
- normalize_pair (head splitting) transfers atoms locally.

Results for n <= MEMO_MAX_N are memoized per operation, keyed by the
permutation pair; the tables are filled lazily and only ever grow, so
concurrent readers are safe once warm.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from . import redress
from .word import BraidWord

Perm = tuple[int, ...]

LEFT = "left"
RIGHT = "right"

MEMO_MAX_N = 6
_NORMALIZE_CACHE: dict[tuple[Perm, Perm], tuple[Perm, Perm]] = {}
_CTILE_CACHE: dict[tuple[Perm, Perm], tuple[Perm, Perm]] = {}
_GCD_CACHE: dict[tuple[Perm, Perm], Perm] = {}


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def is_identity(f: Perm) -> bool:
    return all(v == k + 1 for k, v in enumerate(f))


def delta(n: int) -> Perm:
    """The half twist Delta_n, i.e. the order-reversing permutation."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return tuple(range(n, 0, -1))


def is_perm(f: tuple[int, ...]) -> bool:
    return sorted(f) == list(range(1, len(f) + 1))


def all_simples(n: int) -> Iterator[Perm]:
    """All n! simple braids of B_n, as permutations."""
    return itertools.permutations(range(1, n + 1))


def compose(f: Perm, g: Perm) -> Perm:
    """(f o g)(i) = f(g(i)); the permutation of the braid product fg."""
    if len(f) != len(g):
        raise ValueError(f"sizes differ: {len(f)} != {len(g)}")
    return tuple(f[v - 1] for v in g)


def inverse(f: Perm) -> Perm:
    inv = [0] * len(f)
    for k, v in enumerate(f):
        inv[v - 1] = k + 1
    return tuple(inv)


def inversions(f: Perm) -> int:
    """Inversion count; equals the word length of the simple braid."""
    n = len(f)
    return sum(1 for a in range(n) for b in range(a + 1, n) if f[a] > f[b])


def descents(f: Perm) -> set[int]:
    """Indices i with f(i) > f(i+1); the atoms right-dividing the simple braid."""
    return {i for i in range(1, len(f)) if f[i - 1] > f[i]}


def recoils(f: Perm) -> set[int]:
    """Indices i with f^-1(i) > f^-1(i+1); the atoms left-dividing it."""
    return descents(inverse(f))


def divisor_atoms(f: Perm, side: str = LEFT) -> set[int]:
    if side == LEFT:
        return recoils(f)
    if side == RIGHT:
        return descents(f)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def perm_of_positive_word(w: BraidWord) -> Perm:
    """Image of a positive word under pi."""
    if any(k < 0 for k in w.letters):
        raise ValueError("word has a negative letter")
    return perm_of_letters(w.n, w.letters)


def perm_of_letters(n: int, letters: Iterable[int]) -> Perm:
    img = list(range(1, n + 1))
    for k in letters:
        i = abs(k)
        img[i - 1], img[i] = img[i], img[i - 1]
    return tuple(img)


def simple_letters(f: Perm) -> tuple[int, ...]:
    """Canonical positive word for a simple braid: repeatedly emit the
    smallest atom that left-divides what remains."""
    img = list(f)
    n = len(img)
    out = []
    inv = [0] * n
    for k, v in enumerate(img):
        inv[v - 1] = k
    while True:
        for i in range(1, n):
            if inv[i - 1] > inv[i]:
                break
        else:
            return tuple(out)
        out.append(i)
        # strip sigma_i from the left: swap the values i, i+1
        a, b = inv[i - 1], inv[i]
        img[a], img[b] = img[b], img[a]
        inv[i - 1], inv[i] = b, a


def word_of_simple(f: Perm) -> BraidWord:
    return BraidWord(len(f), simple_letters(f))


def is_normal_pair(f: Perm, g: Perm) -> bool:
    """Every atom left-dividing g also right-divides f."""
    if len(f) != len(g):
        raise ValueError(f"sizes differ: {len(f)} != {len(g)}")
    return recoils(g) <= descents(f)


def normalize_pair(f: Perm, g: Perm) -> tuple[Perm, Perm]:
    """Rewrite the product fg as a normal pair (head, tail).

    Transfers the smallest eligible atom from the front of g to the back of
    f until the pair is normal; the head is then the maximal simple left
    divisor of fg.
    """
    if len(f) != len(g):
        raise ValueError(f"sizes differ: {len(f)} != {len(g)}")
    n = len(f)
    memo = n <= MEMO_MAX_N
    if memo:
        hit = _NORMALIZE_CACHE.get((f, g))
        if hit is not None:
            return hit
    ff = list(f)
    gg = list(g)
    ginv = [0] * n
    for k, v in enumerate(gg):
        ginv[v - 1] = k
    while True:
        for i in range(1, n):
            if ginv[i - 1] > ginv[i] and ff[i - 1] < ff[i]:
                break
        else:
            break
        ff[i - 1], ff[i] = ff[i], ff[i - 1]
        a, b = ginv[i - 1], ginv[i]
        gg[a], gg[b] = gg[b], gg[a]
        ginv[i - 1], ginv[i] = b, a
    result = (tuple(ff), tuple(gg))
    if memo:
        _NORMALIZE_CACHE[(f, g)] = result
    return result


def gcd_left(f: Perm, g: Perm) -> Perm:
    """Greatest common left divisor, by stripping common left atoms."""
    if len(f) != len(g):
        raise ValueError(f"sizes differ: {len(f)} != {len(g)}")
    n = len(f)
    memo = n <= MEMO_MAX_N
    if memo:
        hit = _GCD_CACHE.get((f, g))
        if hit is not None:
            return hit
    finv = list(inverse(f))
    ginv = list(inverse(g))
    acc = list(range(1, n + 1))
    while True:
        for i in range(1, n):
            if finv[i - 1] > finv[i] and ginv[i - 1] > ginv[i]:
                break
        else:
            break
        finv[i - 1], finv[i] = finv[i], finv[i - 1]
        ginv[i - 1], ginv[i] = ginv[i], ginv[i - 1]
        acc[i - 1], acc[i] = acc[i], acc[i - 1]
    result = tuple(acc)
    if memo:
        _GCD_CACHE[(f, g)] = result
    return result


def left_divides(f: Perm, g: Perm) -> bool:
    """Is f a left divisor of g (both simple)?"""
    return gcd_left(f, g) == f


def right_divides(f: Perm, g: Perm) -> bool:
    """Is f a right divisor of g (both simple)?

    Word reversal is an anti-automorphism sending a simple braid to its
    inverse permutation, so this reduces to left divisibility.
    """
    return left_divides(inverse(f), inverse(g))


def c_tile(f: Perm, g: Perm) -> tuple[Perm, Perm]:
    """Left complements (f/g, g/f): (f/g) g = (g/f) f = lcm_left(f, g),
    and the two complements have no common left divisor.

    Computed by left-redressing the word f g^-1 to (g/f)^-1 (f/g).
    """
    if len(f) != len(g):
        raise ValueError(f"sizes differ: {len(f)} != {len(g)}")
    n = len(f)
    memo = n <= MEMO_MAX_N
    if memo:
        hit = _CTILE_CACHE.get((f, g))
        if hit is not None:
            return hit
    sw = simple_letters(f)
    tw = simple_letters(g)
    joined = sw + tuple(-k for k in reversed(tw))
    v_letters, u_letters, _ = redress.redress_left_letters(joined)
    f_over_g = perm_of_letters(n, u_letters)
    g_over_f = perm_of_letters(n, v_letters)
    # the complements of simples are simple again
    assert inversions(f_over_g) == len(u_letters)
    assert inversions(g_over_f) == len(v_letters)
    result = (f_over_g, g_over_f)
    if memo:
        _CTILE_CACHE[(f, g)] = result
    return result


def dual(f: Perm, side: str = RIGHT) -> Perm:
    """The complement of f to the half twist: f * dual(f, 'right') = Delta_n
    and dual(f, 'left') * f = Delta_n."""
    w0 = delta(len(f))
    fi = inverse(f)
    if side == RIGHT:
        return compose(fi, w0)
    if side == LEFT:
        return compose(w0, fi)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def flip_simple(f: Perm) -> Perm:
    """Conjugation by the half twist: sigma_i -> sigma_(n-i) on simples."""
    w0 = delta(len(f))
    return compose(w0, compose(f, w0))


def format_perm(f: Perm) -> str:
    """One-line image notation, e.g. ``(2,1,4,3)``."""
    return "(" + ",".join(str(v) for v in f) + ")"


def parse_perm(text: str) -> Perm:
    vals = tuple(int(tok) for tok in text.strip().strip("()").replace(",", " ").split())
    if not is_perm(vals):
        raise ValueError(f"{text!r} is not a permutation of 1..{len(vals)}")
    return vals
