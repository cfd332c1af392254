"""Symmetric group combinatorics on one-line permutation tuples.

A permutation of degree r is a tuple of length r containing each of
0..r-1 exactly once; position p is sent to w[p].  Degree stays small
(single digits) throughout the package, so groups are enumerated
eagerly and cached per degree.

>>> compose((1, 0, 2), (0, 2, 1))  # apply the right factor first
(1, 2, 0)
>>> length((2, 0, 1))
2
>>> reduced_word((2, 0, 1))
(1, 0)
"""

from __future__ import annotations

from functools import cache
from itertools import permutations as _iter_permutations, product as _product

from .errors import DomainError
from .vectors import IntVector

__all__ = [
    "Permutation",
    "identity",
    "compose",
    "inverse",
    "length",
    "adjacent_transposition",
    "reduced_word",
    "all_permutations",
    "block_ranges",
    "row_blocks",
    "young_subgroup",
]

Permutation = tuple[int, ...]


def identity(r: int) -> Permutation:
    return tuple(range(r))


def compose(w: Permutation, u: Permutation) -> Permutation:
    """The product w*u, meaning u acts first: (w*u)(p) = w(u(p))."""
    return tuple(w[u[p]] for p in range(len(w)))


def inverse(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for p, val in enumerate(w):
        out[val] = p
    return tuple(out)


def length(w: Permutation) -> int:
    """Number of inversions, which equals the Coxeter length."""
    r = len(w)
    return sum(1 for i in range(r) for j in range(i + 1, r) if w[i] > w[j])


def adjacent_transposition(r: int, i: int) -> Permutation:
    """The generator swapping 0-based positions i and i+1."""
    if not 0 <= i < r - 1:
        raise DomainError(f"generator index {i} out of range for degree {r}")
    w = list(range(r))
    w[i], w[i + 1] = w[i + 1], w[i]
    return tuple(w)


def mult_gen_right(w: Permutation, i: int) -> Permutation:
    """w * s_i: swaps the values at positions i and i+1."""
    out = list(w)
    out[i], out[i + 1] = out[i + 1], out[i]
    return tuple(out)


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """A reduced word (s_{i1} ... s_{ik} = w) as 0-based generator indices.

    Produced by repeatedly cancelling the leftmost descent on the right.
    """
    cur = list(w)
    rev: list[int] = []
    while True:
        for i in range(len(cur) - 1):
            if cur[i] > cur[i + 1]:
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                rev.append(i)
                break
        else:
            return tuple(reversed(rev))


@cache
def all_permutations(r: int) -> tuple[Permutation, ...]:
    """Every permutation of degree r, sorted by length then lex."""
    perms = sorted(_iter_permutations(range(r)), key=lambda w: (length(w), w))
    return tuple(perms)


def block_ranges(lam: IntVector) -> tuple[range, ...]:
    """Consecutive 0-based position blocks with sizes given by lam."""
    starts = [0]
    for part in lam:
        if part < 0:
            raise DomainError("composition parts must be nonnegative")
        starts.append(starts[-1] + part)
    return tuple(range(starts[k], starts[k + 1]) for k in range(len(lam)))


def row_blocks(lam: IntVector, i: int) -> frozenset[int]:
    """The i-th consecutive block of {1, ..., r}, 1-based on both ends.

    >>> sorted(row_blocks((2, 1), 1))
    [1, 2]
    >>> sorted(row_blocks((2, 1), 2))
    [3]
    """
    if not 1 <= i <= len(lam):
        raise DomainError(f"block index {i} out of range")
    return frozenset(p + 1 for p in block_ranges(lam)[i - 1])


@cache
def young_subgroup(lam: IntVector) -> tuple[Permutation, ...]:
    """All permutations preserving each consecutive block of sizes lam."""
    blocks = block_ranges(lam)
    r = sum(lam)
    members: list[Permutation] = []
    choices = [list(_iter_permutations(blk)) for blk in blocks]
    for combo in _product(*choices):
        w = list(range(r))
        for blk, arrangement in zip(blocks, combo):
            for pos, val in zip(blk, arrangement):
                w[pos] = val
        members.append(tuple(w))
    return tuple(sorted(members, key=lambda w: (length(w), w)))
