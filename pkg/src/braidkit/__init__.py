"""braidkit: braid-group computation kernel.

Five independent decision procedures for the braid word problem (greedy
normal form, symmetric normal form, word redressing, handle reduction,
Dynnikov coordinates), built on permutation arithmetic for simple braids,
plus a differential cross-checker and a CLI.
"""

from .word import (
    ALPHA,
    INTLIST,
    BraidWord,
    Letter,
    StepBudgetExceeded,
    concat,
    embed,
    flip,
    free_reduce,
    invert,
    parse,
    render,
)
from .simple import (
    Perm,
    c_tile,
    delta,
    divisor_atoms,
    dual,
    flip_simple,
    gcd_left,
    left_divides,
    normalize_pair,
    perm_of_positive_word,
    word_of_simple,
)
from .gridnf import (
    GreedyNF,
    SymmetricNF,
    equal,
    greedy_div_simple,
    greedy_mul_simple,
    greedy_nf,
    grid_product,
    grid_quotient,
    is_normal,
    symmetric_nf,
    symmetric_push,
)
from .redress import redress_left, redress_right, trivial_by_redress
from .handle import HandleSpan, find_handle, handle_reduce, reduce_once, shorten
from .dynnikov import DynnikovCoords, act, coords, equal_by_coords, step
from .oracle import FuzzReport, brute_head, cross_check, random_word

__version__ = "0.1.0"
