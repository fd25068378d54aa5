"""
Greedy and symmetric normal forms via tile grids.

A sequence of simple braids (s_1, ..., s_p) is *normal* when every atom
left-dividing s_(k+1) right-divides s_k.  Every braid has a unique greedy
normal form Delta^m s_1 ... s_p with (s_1..s_p) normal, s_1 != Delta and
s_p != 1, and a unique symmetric normal form t_q^-1 ... t_1^-1 s_1 ... s_p
with both sequences normal, last factors != 1 and gcd_left(s_1, t_1) = 1.

Two kinds of commuting squares of simple braids do all the work:

- a P-tile splits a product of two simples into its normal pair
  (:func:`braidkit.simple.normalize_pair`);
- a C-tile forms left complements toward the left lcm
  (:func:`braidkit.simple.c_tile`).

Multiplying a normal form by a simple braid or its inverse is one
right-to-left pass of tiles along the factor sequence; whole-sequence
product and quotient fill a rectangular grid of tiles.
"""

from __future__ import annotations

import dataclasses

from . import simple, word as wordmod
from .simple import Perm
from .word import BraidWord

Seq = tuple[Perm, ...]


def _strip(factors: list[Perm]) -> None:
    """Drop trailing identity factors (a normal sequence has 1s only there)."""
    while factors and simple.is_identity(factors[-1]):
        factors.pop()


def is_normal(seq: Seq) -> bool:
    """Is the sequence of simple braids normal?  Empty and singleton are."""
    sizes = {len(f) for f in seq}
    if len(sizes) > 1:
        raise ValueError(f"mixed strand counts in sequence: {sorted(sizes)}")
    return all(simple.is_normal_pair(seq[k], seq[k + 1]) for k in range(len(seq) - 1))


@dataclasses.dataclass(frozen=True)
class GreedyNF:
    """Greedy normal form (m; s_1, ..., s_p), factors as permutations."""

    n: int
    delta_exp: int
    factors: Seq

    def __post_init__(self):
        assert all(len(f) == self.n for f in self.factors)
        assert is_normal(self.factors)
        if self.factors:
            assert self.factors[0] != simple.delta(self.n)
            assert not simple.is_identity(self.factors[-1])

    def is_trivial(self) -> bool:
        return self.delta_exp == 0 and not self.factors

    def __str__(self) -> str:
        return f"({self.delta_exp}; {_format_factors(self.factors)})"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "delta_exp": self.delta_exp,
            "factors": [list(f) for f in self.factors],
        }

    @staticmethod
    def from_dict(data: dict) -> GreedyNF:
        return GreedyNF(
            data["n"], data["delta_exp"], tuple(tuple(f) for f in data["factors"])
        )


@dataclasses.dataclass(frozen=True)
class SymmetricNF:
    """Symmetric normal form (t_1..t_q; s_1..s_p) for t_q^-1...t_1^-1 s_1...s_p."""

    n: int
    den: Seq
    num: Seq

    def __post_init__(self):
        assert all(len(f) == self.n for f in self.den + self.num)
        assert is_normal(self.den) and is_normal(self.num)
        assert not self.den or not simple.is_identity(self.den[-1])
        assert not self.num or not simple.is_identity(self.num[-1])
        if self.den and self.num:
            assert simple.is_identity(simple.gcd_left(self.num[0], self.den[0]))

    def is_trivial(self) -> bool:
        return not self.den and not self.num

    def __str__(self) -> str:
        return f"({_format_factors(self.den)}; {_format_factors(self.num)})"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "den": [list(f) for f in self.den],
            "num": [list(f) for f in self.num],
        }

    @staticmethod
    def from_dict(data: dict) -> SymmetricNF:
        return SymmetricNF(
            data["n"],
            tuple(tuple(f) for f in data["den"]),
            tuple(tuple(f) for f in data["num"]),
        )


def _format_factors(seq: Seq) -> str:
    if not seq:
        return "e"
    return ", ".join(
        wordmod.render(simple.word_of_simple(f)) if len(f) <= 26 else simple.format_perm(f)
        for f in seq
    )


# ---------------------------------------------------------------------------
# incremental pushes


def _push_mul(factors: list[Perm], u: Perm, n: int) -> tuple[int, int]:
    """Multiply the normal sequence by the simple braid u on the right,
    in place.  Returns (delta_exponent_change, tile_ops)."""
    ops = 0
    cur = u
    if simple.is_identity(cur):
        return 0, ops
    for k in range(len(factors) - 1, -1, -1):
        cur, factors[k] = simple.normalize_pair(factors[k], cur)
        ops += 1
        if simple.is_identity(cur):
            _strip(factors)
            return 0, ops
    change = 0
    if cur == simple.delta(n):
        change = 1
    elif not simple.is_identity(cur):
        factors.insert(0, cur)
    _strip(factors)
    return change, ops


def _push_div(factors: list[Perm], u: Perm, n: int) -> tuple[int, int]:
    """Divide the normal sequence by the simple braid u on the right, in place."""
    ops = 0
    cur = u
    if simple.is_identity(cur):
        return 0, ops
    for k in range(len(factors) - 1, -1, -1):
        factors[k], cur = simple.c_tile(factors[k], cur)
        ops += 1
        if simple.is_identity(cur):
            _strip(factors)
            return 0, ops
    change = 0
    if not simple.is_identity(cur):
        change = -1
        head = simple.dual(cur, simple.LEFT)
        if not simple.is_identity(head):
            factors.insert(0, head)
    _strip(factors)
    return change, ops


def greedy_mul_simple(nf: GreedyNF, u: Perm) -> GreedyNF:
    """Greedy normal form of (the braid of nf) times the simple braid u."""
    if len(u) != nf.n:
        raise ValueError(f"sizes differ: {len(u)} != {nf.n}")
    factors = list(nf.factors)
    change, _ = _push_mul(factors, u, nf.n)
    return GreedyNF(nf.n, nf.delta_exp + change, tuple(factors))


def greedy_div_simple(nf: GreedyNF, u: Perm) -> GreedyNF:
    """Greedy normal form of (the braid of nf) times the inverse of u."""
    if len(u) != nf.n:
        raise ValueError(f"sizes differ: {len(u)} != {nf.n}")
    factors = list(nf.factors)
    change, _ = _push_div(factors, u, nf.n)
    return GreedyNF(nf.n, nf.delta_exp + change, tuple(factors))


def _simple_runs(w: BraidWord, group_runs: bool):
    """Split a word into simple braids with signs.

    With grouping, maximal same-sign letter runs are greedily packed into
    single simple braids; the normal form does not depend on the packing.
    """
    n = w.n
    if not group_runs:
        for k in w.letters:
            i = abs(k)
            img = list(range(1, n + 1))
            img[i - 1], img[i] = img[i], img[i - 1]
            yield (1 if k > 0 else -1), tuple(img)
        return
    cur: list[int] | None = None
    cur_sign = 0
    for k in w.letters:
        sign = 1 if k > 0 else -1
        i = abs(k)
        if sign == cur_sign and cur is not None:
            if sign > 0 and cur[i - 1] < cur[i]:
                # append sigma_i on the right: still a simple braid
                cur[i - 1], cur[i] = cur[i], cur[i - 1]
                continue
            if sign < 0:
                a, b = cur.index(i), cur.index(i + 1)
                if a < b:
                    # prepend sigma_i to the inverted block
                    cur[a], cur[b] = cur[b], cur[a]
                    continue
        if cur is not None:
            yield cur_sign, tuple(cur)
        cur = list(range(1, n + 1))
        cur[i - 1], cur[i] = cur[i], cur[i - 1]
        cur_sign = sign
    if cur is not None:
        yield cur_sign, tuple(cur)


def greedy_nf_counted(w: BraidWord, group_runs: bool = True) -> tuple[GreedyNF, int]:
    m = 0
    ops = 0
    factors: list[Perm] = []
    for sign, u in _simple_runs(w, group_runs):
        if sign > 0:
            change, k = _push_mul(factors, u, w.n)
        else:
            change, k = _push_div(factors, u, w.n)
        m += change
        ops += k
    return GreedyNF(w.n, m, tuple(factors)), ops


def greedy_nf(w: BraidWord, group_runs: bool = True) -> GreedyNF:
    """Greedy normal form of the braid represented by w."""
    return greedy_nf_counted(w, group_runs)[0]


def _sym_push(den: list[Perm], num: list[Perm], u: Perm, sign: int, n: int) -> int:
    """Multiply the fraction den^-1 num by u^sign, in place.  Returns tile ops."""
    ops = 0
    if simple.is_identity(u):
        return ops
    cur = u
    if sign > 0:
        for k in range(len(num) - 1, -1, -1):
            cur, num[k] = simple.normalize_pair(num[k], cur)
            ops += 1
            if simple.is_identity(cur):
                _strip(num)
                return ops
        if not den:
            num.insert(0, cur)
            _strip(num)
            return ops
        head = simple.dual(cur, simple.LEFT)
        v, carry = simple.normalize_pair(head, den[0])
        ops += 2
        new_den = []
        for j in range(1, len(den)):
            t_out, carry = simple.normalize_pair(carry, den[j])
            ops += 1
            new_den.append(t_out)
        new_den.append(carry)
        den[:] = new_den
        _strip(den)
        num.insert(0, simple.dual(v, simple.RIGHT))
        _strip(num)
        return ops
    for k in range(len(num) - 1, -1, -1):
        num[k], cur = simple.c_tile(num[k], cur)
        ops += 1
        if simple.is_identity(cur):
            _strip(num)
            return ops
    new_den = []
    carry = cur
    for j in range(len(den)):
        t_out, carry = simple.normalize_pair(carry, den[j])
        ops += 1
        new_den.append(t_out)
    new_den.append(carry)
    den[:] = new_den
    _strip(den)
    _strip(num)
    return ops


def symmetric_push(nf: SymmetricNF, u: Perm, sign: int) -> SymmetricNF:
    """Symmetric normal form of (the braid of nf) times u^sign, u simple."""
    if len(u) != nf.n:
        raise ValueError(f"sizes differ: {len(u)} != {nf.n}")
    den = list(nf.den)
    num = list(nf.num)
    _sym_push(den, num, u, sign, nf.n)
    return SymmetricNF(nf.n, tuple(den), tuple(num))


def symmetric_nf_counted(w: BraidWord, group_runs: bool = True) -> tuple[SymmetricNF, int]:
    den: list[Perm] = []
    num: list[Perm] = []
    ops = 0
    for sign, u in _simple_runs(w, group_runs):
        ops += _sym_push(den, num, u, sign, w.n)
    return SymmetricNF(w.n, tuple(den), tuple(num)), ops


def symmetric_nf(w: BraidWord, group_runs: bool = True) -> SymmetricNF:
    """Symmetric normal form of the braid represented by w."""
    return symmetric_nf_counted(w, group_runs)[0]


# ---------------------------------------------------------------------------
# whole-sequence grids


def grid_product(xseq: Seq, yseq: Seq) -> Seq:
    """Normal form of y x from normal sequences x, y, by a P-tile grid.

    x is the bottom row and y the left column; the result is the top row
    followed by the right column, trailing identities stripped.
    """
    if not is_normal(xseq) or not is_normal(yseq):
        raise ValueError("grid_product inputs must be normal sequences")
    if not yseq:
        return tuple(xseq)
    if not xseq:
        return tuple(yseq)
    q = len(yseq)
    row = list(xseq)
    right_col: list[Perm] = [simple.identity(len(xseq[0]))] * q
    for j in range(q):  # bottom level up
        carry = yseq[q - 1 - j]
        for i in range(len(row)):
            row[i], carry = simple.normalize_pair(carry, row[i])
        right_col[j] = carry
    out = row + right_col[::-1]
    _strip(out)
    return tuple(out)


def grid_quotient(xseq: Seq, yseq: Seq) -> tuple[Seq, Seq, Seq]:
    """C-tile grid for normal sequences x, y: returns the normal forms of
    the left complements x/y and y/x, and of the left lcm of x and y.

    x is the bottom row and y the right column; complements come off the
    top row and left column, the lcm off the top-left diagonal continued
    along the bottom row.
    """
    if not is_normal(xseq) or not is_normal(yseq):
        raise ValueError("grid_quotient inputs must be normal sequences")
    if not yseq:
        return tuple(xseq), (), tuple(xseq)
    if not xseq:
        return (), tuple(yseq), tuple(yseq)
    n = len(xseq[0])
    q = len(yseq)
    p = max(len(xseq), q)
    row = list(xseq) + [simple.identity(n)] * (p - len(xseq))
    bottom = list(row)
    left_col: list[Perm] = []
    diag: list[Perm] = [simple.identity(n)] * q
    for j in range(q):  # bottom level up
        carry = yseq[q - 1 - j]
        for i in range(p - 1, -1, -1):
            top, left = simple.c_tile(row[i], carry)
            if i == q - j - 1:
                diag[i] = simple.compose(top, carry)
            row[i] = top
            carry = left
        left_col.append(carry)
    x_over_y = list(row)
    _strip(x_over_y)
    y_over_x = left_col[::-1]
    _strip(y_over_x)
    lcm = diag + bottom[q:]
    _strip(lcm)
    return tuple(x_over_y), tuple(y_over_x), tuple(lcm)


# ---------------------------------------------------------------------------
# words and equality


def word_of_sequence(n: int, seq: Seq) -> BraidWord:
    letters: tuple[int, ...] = ()
    for f in seq:
        letters += simple.simple_letters(f)
    return BraidWord(n, letters)


def word_of_greedy(nf: GreedyNF) -> BraidWord:
    """A word representing the braid of the normal form."""
    delta_letters = simple.simple_letters(simple.delta(nf.n))
    if nf.delta_exp < 0:
        delta_letters = tuple(-k for k in reversed(delta_letters))
    letters = delta_letters * abs(nf.delta_exp)
    for f in nf.factors:
        letters += simple.simple_letters(f)
    return BraidWord(nf.n, letters)


def word_of_symmetric(nf: SymmetricNF) -> BraidWord:
    den_word = word_of_sequence(nf.n, nf.den)
    num_word = word_of_sequence(nf.n, nf.num)
    return wordmod.concat(wordmod.invert(den_word), num_word)


def equal(w1: BraidWord, w2: BraidWord, form: str = "greedy") -> bool:
    """Do the two words represent the same braid?  Words of different
    strand counts are embedded into the larger group first."""
    n = max(w1.n, w2.n)
    w1 = wordmod.embed(w1, n)
    w2 = wordmod.embed(w2, n)
    if form == "greedy":
        return greedy_nf(w1) == greedy_nf(w2)
    if form == "symmetric":
        return symmetric_nf(w1) == symmetric_nf(w2)
    raise ValueError(f"form must be 'greedy' or 'symmetric', got {form!r}")


def is_trivial(w: BraidWord, form: str = "greedy") -> bool:
    if form == "greedy":
        return greedy_nf(w).is_trivial()
    if form == "symmetric":
        return symmetric_nf(w).is_trivial()
    raise ValueError(f"form must be 'greedy' or 'symmetric', got {form!r}")
