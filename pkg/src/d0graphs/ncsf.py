"""Noncommutative elementary/Schur functions, the Knuth-rotation ideal, and
Schur expansions of generating functions.

Word vectors are sparse dicts mapping equal-length words to integer
coefficients; zero coefficients are dropped.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .words import Word, descent_mask, is_repetition_free
from .tableaux import (Partition, as_partition, conjugate, partitions_of,
                       standard_tableaux, superstandard_tableau)

WordVector = dict[Word, int]

MEMBERSHIP_DIMENSION_CAP = 5 ** 6


def add_term(acc: WordVector, w: Word, coeff: int) -> None:
    new = acc.get(w, 0) + coeff
    if new:
        acc[w] = new
    else:
        acc.pop(w, None)


def vector_sum(words, coeff: int = 1) -> WordVector:
    acc: WordVector = {}
    for w in words:
        add_term(acc, tuple(w), coeff)
    return acc


def vector_degree(f: WordVector) -> int:
    lengths = {len(w) for w in f}
    if len(lengths) > 1:
        raise ValueError(f"word vector is not homogeneous: lengths {sorted(lengths)}")
    return lengths.pop() if lengths else 0


def elementary(d: int, letters) -> WordVector:
    """e_d(S): sum of strictly decreasing words of length d in the letters S."""
    S = sorted(set(letters), reverse=True)
    if d < 0 or d > len(S):
        return {}
    if d == 0:
        return {(): 1}
    return {combo: 1 for combo in itertools.combinations(S, d)}


def product(f: WordVector, g: WordVector) -> WordVector:
    acc: WordVector = {}
    for v, cv in f.items():
        for w, cw in g.items():
            add_term(acc, v + w, cv * cw)
    return acc


def rev_map(f: WordVector) -> WordVector:
    acc: WordVector = {}
    for w, c in f.items():
        add_term(acc, w[::-1], c)
    return acc


def theta_map(f: WordVector, theta) -> WordVector:
    """Apply a letter injection to every word of f."""
    get = theta.__getitem__ if hasattr(theta, "__getitem__") else theta
    acc: WordVector = {}
    for w, c in f.items():
        add_term(acc, tuple(get(x) for x in w), c)
    return acc


def _signed_compositions(alpha_base: tuple[int, ...]):
    """Yield (sign, composition) over permutations pi of the Jacobi-Trudi sum,
    skipping pi whose composition alpha_base[c] + pi(c) - (c+1) has a negative
    part.  alpha_base is 0-indexed."""
    l = len(alpha_base)
    for pi in itertools.permutations(range(1, l + 1)):
        alpha = tuple(alpha_base[c] + pi[c] - (c + 1) for c in range(l))
        if any(a < 0 for a in alpha):
            continue
        inv = sum(1 for i in range(l) for j in range(i + 1, l) if pi[i] > pi[j])
        yield (-1) ** inv, alpha


def nc_flagged_schur(alpha, flags, reduce_repeats: bool = False) -> WordVector:
    """Column-flagged noncommutative Schur function: the signed sum over pi of
    e_{alpha_1+pi(1)-1}([n_1]) e_{alpha_2+pi(2)-2}([n_2]) ... as a word vector.

    With ``reduce_repeats`` words containing a repeated letter are dropped.
    """
    alpha = tuple(int(a) for a in alpha)
    flags = tuple(int(n) for n in flags)
    if len(alpha) != len(flags):
        raise ValueError("alpha and flags must have equal length")
    acc: WordVector = {}
    for sign, comp in _signed_compositions(alpha):
        partial: WordVector = {(): 1}
        for d, m in zip(comp, flags):
            term = elementary(d, range(1, m + 1))
            if not term:
                partial = {}
                break
            partial = product(partial, term)
        for w, c in partial.items():
            if reduce_repeats and not is_repetition_free(w):
                continue
            add_term(acc, w, sign * c)
    return acc


def nc_schur(lam: Partition, alphabet: int, repetition_free_only: bool = False) -> WordVector:
    """The noncommutative Schur function for lam via the Jacobi-Trudi formula,
    in the variables u_1..u_alphabet."""
    lam = as_partition(lam)
    lam_conj = conjugate(lam)
    return nc_flagged_schur(lam_conj, (alphabet,) * len(lam_conj),
                            reduce_repeats=repetition_free_only)


@lru_cache(maxsize=None)
def _nc_schur_repetition_free(lam: Partition, alphabet: int) -> WordVector:
    """Cached repetition-free part of nc_schur, built segment-by-segment so the
    full (repeating) expansion is never materialized."""
    lam_conj = conjugate(as_partition(lam))
    acc: WordVector = {}
    letters = list(range(alphabet, 0, -1))

    def place(ci: int, comp, remaining: tuple[int, ...], prefix: tuple[int, ...], sign: int):
        if ci == len(comp):
            add_term(acc, prefix, sign)
            return
        d = comp[ci]
        if d > len(remaining):
            return
        for segment in itertools.combinations(remaining, d):
            rest = tuple(x for x in remaining if x not in segment)
            place(ci + 1, comp, rest, prefix + segment, sign)

    for sign, comp in _signed_compositions(lam_conj):
        place(0, comp, tuple(letters), (), sign)
    return acc


def coeff_in_schur(lam: Partition, w: Word) -> int:
    """Coefficient of the word w in the noncommutative Schur function of lam.

    Subset DP over the Jacobi-Trudi columns; O(2^t * t * |w|) per word.
    """
    lam = as_partition(lam)
    if sum(lam) != len(w):
        raise ValueError(f"degree mismatch: |lam|={sum(lam)} but |w|={len(w)}")
    lam_conj = conjugate(lam)
    t = len(lam_conj)
    if t == 0:
        return 1 if w == () else 0
    pref = [0] * (t + 1)
    for r in range(t):
        pref[r + 1] = pref[r] + lam_conj[r]
    dec = _decreasing_run_table(w)

    full = (1 << t) - 1
    dp = {0: 1}
    for mask in range(1, full + 1):
        r = bin(mask).count("1")  # row being assigned
        colsum = 0
        m = mask
        while m:
            lsb = m & -m
            colsum += lsb.bit_length()
            m ^= lsb
        total = 0
        for c in range(1, t + 1):
            bit = 1 << (c - 1)
            if not mask & bit:
                continue
            sub = mask ^ bit
            prev = dp.get(sub, 0)
            if not prev:
                continue
            length = lam_conj[r - 1] + c - r
            if length < 0:
                continue
            start = pref[r - 1] + (colsum - c) - (r - 1) * r // 2
            if start < 0 or start + length > len(w):
                continue
            if length and not dec[start][length]:
                continue
            higher = bin(mask >> c).count("1")
            total += -prev if higher & 1 else prev
        if total:
            dp[mask] = total
    return dp.get(full, 0)


def _decreasing_run_table(w: Word):
    """dec[s][l] is True iff w[s:s+l] is strictly decreasing."""
    n = len(w)
    dec = [[False] * (n + 1) for _ in range(n + 1)]
    for s in range(n + 1):
        dec[s][0] = True
        if s < n:
            dec[s][1] = True
    for s in range(n - 1, -1, -1):
        for l in range(2, n - s + 1):
            dec[s][l] = dec[s][l - 1] and w[s + l - 2] > w[s + l - 1]
    return dec


def pair_schur(lam: Partition, f: WordVector, alphabet: int) -> int:
    """<J_lam(u), f> under the monomial-orthonormal pairing."""
    lam = as_partition(lam)
    if not f:
        return 0
    d = vector_degree(f)
    if sum(lam) != d:
        raise ValueError(f"degree mismatch: |lam|={sum(lam)} but deg(f)={d}")
    if len(f) <= 8:
        return sum(c * coeff_in_schur(lam, w) for w, c in f.items())
    table = _nc_schur_repetition_free(lam, alphabet)
    total = 0
    for w, c in f.items():
        if is_repetition_free(w):
            total += c * table.get(w, 0)
        else:
            total += c * coeff_in_schur(lam, w)
    return total


# ---------------------------------------------------------------------------
# The Knuth-rotation ideal: generated by b(ac-ca) - (ac-ca)b for a < b < c
# together with all repeated-letter words.


def square_relation(prefix: Word, triple, suffix: Word) -> WordVector:
    """The four-term generator v(bac - bca - acb + cab)w for a < b < c."""
    a, b, c = sorted(triple)
    return {
        prefix + (b, a, c) + suffix: 1,
        prefix + (b, c, a) + suffix: -1,
        prefix + (a, c, b) + suffix: -1,
        prefix + (c, a, b) + suffix: 1,
    }


def _kr_generators_projected(degree: int, alphabet: int):
    """Degree-d generators of the ideal, projected to repetition-free words.

    Generators whose fixed letters repeat project to zero and are skipped, so
    only placements with all of v, w, {a,b,c} disjoint survive.
    """
    gens = []
    letters = range(1, alphabet + 1)
    for pos in range(degree - 2):
        vlen, wlen = pos, degree - 3 - pos
        for triple in itertools.combinations(letters, 3):
            rest = [x for x in letters if x not in triple]
            for outer in itertools.permutations(rest, vlen + wlen):
                v, w = outer[:vlen], outer[vlen:]
                gens.append(square_relation(v, triple, w))
    return gens


def kr_ideal_contains(f: WordVector, alphabet: int) -> bool:
    """Decide membership of a homogeneous word vector in the Knuth-rotation
    ideal, over the rationals, by exact elimination.

    Repeated-letter words are generators, so membership is decided on the
    projection to repetition-free coordinates.
    """
    if not f:
        return True
    degree = vector_degree(f)
    if alphabet ** degree > MEMBERSHIP_DIMENSION_CAP:
        raise ValueError(
            f"membership check dimension {alphabet}^{degree} exceeds cap {MEMBERSHIP_DIMENSION_CAP}")
    target = {w: Fraction(c) for w, c in f.items() if is_repetition_free(w)}
    if not target:
        return True
    basis: dict[Word, dict[Word, Fraction]] = {}  # pivot word -> reduced row

    def reduce_row(row: dict[Word, Fraction]):
        for pivot in sorted(row):
            if row[pivot] == 0:
                continue
            if pivot in basis:
                factor = row[pivot]
                for w, c in basis[pivot].items():
                    nc = row.get(w, Fraction(0)) - factor * c
                    if nc:
                        row[w] = nc
                    else:
                        row.pop(w, None)
            else:
                return pivot, row
        return None, row

    for gen in _kr_generators_projected(degree, alphabet):
        row = {w: Fraction(c) for w, c in gen.items() if is_repetition_free(w)}
        pivot, row = reduce_row(row)
        if pivot is not None:
            inv = 1 / row[pivot]
            basis[pivot] = {w: c * inv for w, c in row.items()}
    pivot, rem = reduce_row(target)
    return pivot is None


# ---------------------------------------------------------------------------
# Schur expansions of generating functions.

SchurExpansion = dict[Partition, int]


class NotSymmetricError(ValueError):
    """The fundamental-basis expansion admits no exact Schur solution."""

    def __init__(self, residual: dict[int, int], n: int):
        self.residual = residual
        self.n = n
        super().__init__(f"not a symmetric function; residual on {len(residual)} "
                         f"fundamental terms")


@lru_cache(maxsize=None)
def schur_fundamental_vector(lam: Partition) -> dict[int, int]:
    """F-expansion of s_lam: descent-set bitmask -> multiplicity."""
    acc: dict[int, int] = {}
    for t in standard_tableaux(lam):
        mask = 0
        for i in t.descent_set():
            mask |= 1 << (i - 1)
        acc[mask] = acc.get(mask, 0) + 1
    return acc


def fundamental_vector(f: WordVector) -> dict[int, int]:
    """Image of f under Delta in the fundamental basis, keyed by descent mask."""
    acc: dict[int, int] = {}
    for w, c in f.items():
        m = descent_mask(w)
        new = acc.get(m, 0) + c
        if new:
            acc[m] = new
        else:
            acc.pop(m, None)
    return acc


def schur_from_fundamental(fvec: dict[int, int], n: int) -> SchurExpansion:
    """Solve for the Schur expansion from an F-expansion of degree n.

    The transition matrix is unitriangular when partitions are processed in
    decreasing lexicographic order, so the solve is integral back-substitution.
    Raises NotSymmetricError if a nonzero residual remains.
    """
    residual = dict(fvec)
    out: SchurExpansion = {}
    for lam in partitions_of(n):
        lead = 0
        for i in superstandard_tableau(lam).descent_set():
            lead |= 1 << (i - 1)
        c = residual.get(lead, 0)
        if c:
            out[lam] = c
            for mask, mult in schur_fundamental_vector(lam).items():
                new = residual.get(mask, 0) - c * mult
                if new:
                    residual[mask] = new
                else:
                    residual.pop(mask, None)
    if residual:
        raise NotSymmetricError(residual, n)
    return out


def delta_schur(f: WordVector, alphabet: int = 0, cross_check: bool = False) -> SchurExpansion:
    """Schur expansion of the generating function Delta(f).

    Solves the fundamental-basis system; with ``cross_check`` also computes
    every coefficient as <J_lam(u), f>, which must agree whenever f is
    orthogonal to the Knuth-rotation ideal (e.g. any KR set sum).
    """
    if not f:
        return {}
    n = vector_degree(f)
    expansion = schur_from_fundamental(fundamental_vector(f), n)
    if cross_check:
        if not alphabet:
            alphabet = max((max(w) for w in f if w), default=0)
        for lam in partitions_of(n):
            paired = pair_schur(lam, f, alphabet)
            if paired != expansion.get(lam, 0):
                raise AssertionError(
                    f"Schur expansion mismatch at {lam}: pairing gives {paired}, "
                    f"fundamental solve gives {expansion.get(lam, 0)}")
    return expansion


def is_schur_positive(expansion: SchurExpansion) -> bool:
    return all(c >= 0 for c in expansion.values())


def format_schur_expansion(expansion: SchurExpansion) -> str:
    if not expansion:
        return "0"
    parts = []
    for lam in sorted(expansion, reverse=True):
        c = expansion[lam]
        if c == 0:
            continue
        shape = ",".join(map(str, lam)) if lam else ""
        parts.append(f"{c:+d}*s({shape})")
    return " ".join(parts) if parts else "0"
