"""Words over the alphabet {1, ..., N}: descents, standardization, inversion statistics.

A word is a tuple of integers.  Permutations of S_n are the repetition-free
words on exactly the letters 1..n.
"""

from __future__ import annotations

import itertools
from math import factorial

Word = tuple[int, ...]

MAX_ALPHABET = 16


def as_word(letters) -> Word:
    return tuple(int(x) for x in letters)


def check_letters(w: Word, alphabet: int) -> None:
    if alphabet > MAX_ALPHABET:
        raise ValueError(f"alphabet size {alphabet} exceeds supported maximum {MAX_ALPHABET}")
    for x in w:
        if not 1 <= x <= alphabet:
            raise ValueError(f"letter {x} outside alphabet [1..{alphabet}] in word {w}")


def is_repetition_free(w: Word) -> bool:
    return len(set(w)) == len(w)


def descent_set(w: Word) -> frozenset[int]:
    """Positions i (1-based, i < len(w)) with w_i > w_{i+1}."""
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def signature(w: Word) -> tuple[int, ...]:
    """Sequence over {+1, -1}; -1 exactly at the descent positions."""
    return tuple(-1 if w[i] > w[i + 1] else 1 for i in range(len(w) - 1))


def descent_mask(w: Word) -> int:
    """Descent set packed into a bitmask (bit i-1 set iff i is a descent)."""
    m = 0
    for i in range(len(w) - 1):
        if w[i] > w[i + 1]:
            m |= 1 << i
    return m


def signature_to_descents(sig: tuple[int, ...]) -> frozenset[int]:
    return frozenset(i + 1 for i, s in enumerate(sig) if s < 0)


def descents_to_signature(des, n: int) -> tuple[int, ...]:
    des = set(des)
    return tuple(-1 if i in des else 1 for i in range(1, n))


def signature_mask(sig: tuple[int, ...]) -> int:
    m = 0
    for i, s in enumerate(sig):
        if s < 0:
            m |= 1 << i
    return m


def standardize(w: Word) -> Word:
    """Relabel the smallest letter 1, the next smallest 2, etc.

    Requires a repetition-free word; preserves descents and every inv_k.
    """
    if not is_repetition_free(w):
        raise ValueError(f"cannot standardize word with repeated letters: {w}")
    rank = {x: r + 1 for r, x in enumerate(sorted(w))}
    return tuple(rank[x] for x in w)


def inv_k(w: Word, k: int) -> int:
    """Number of pairs i < j with 0 < w_i - w_j < k."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    n = len(w)
    count = 0
    for i in range(n):
        wi = w[i]
        for j in range(i + 1, n):
            if 0 < wi - w[j] < k:
                count += 1
    return count


def inversions(w: Word) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def reverse(w: Word) -> Word:
    return w[::-1]


def apply_injection(w: Word, theta) -> Word:
    """Image of a word under a letter map (callable or mapping)."""
    get = theta.__getitem__ if hasattr(theta, "__getitem__") else theta
    return tuple(get(x) for x in w)


def is_order_preserving(theta: dict[int, int]) -> bool:
    items = sorted(theta.items())
    vals = [v for _, v in items]
    return all(vals[i] < vals[i + 1] for i in range(len(vals) - 1))


def is_order_reversing(theta: dict[int, int]) -> bool:
    items = sorted(theta.items())
    vals = [v for _, v in items]
    return all(vals[i] > vals[i + 1] for i in range(len(vals) - 1))


def all_permutations(n: int):
    """All of S_n as tuples, in lexicographic (= Lehmer index) order."""
    return itertools.permutations(range(1, n + 1))


def lehmer_rank(perm: Word) -> int:
    """Index of a permutation of [n] in lexicographic order, 0-based."""
    n = len(perm)
    rank = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if perm[j] < perm[i])
        rank += smaller * factorial(n - 1 - i)
    return rank


def lehmer_unrank(rank: int, n: int) -> Word:
    letters = list(range(1, n + 1))
    out = []
    for i in range(n, 0, -1):
        f = factorial(i - 1)
        idx, rank = divmod(rank, f)
        out.append(letters.pop(idx))
    return tuple(out)
