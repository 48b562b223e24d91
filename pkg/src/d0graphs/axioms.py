"""Executable checkers for the D graph axioms on signed colored graphs.

All checkers accept any graph object exposing ``vertices``, ``n``,
``signature(v)`` and ``neighbor(v, i)`` (PartialD0Graph and
SignedColoredGraph both do).  Checkers return None on success or a minimal
witness tuple describing the first violation in canonical vertex order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import (PartialD0Graph, SignedColoredGraph, KNUTH, ROTATION,
                     UNDETERMINED, square_members, restricted_component)
from .ncsf import (schur_from_fundamental, NotSymmetricError, is_schur_positive,
                   pair_schur, vector_sum)

EMPTY = "E"


def _ordered_vertices(graph):
    vs = graph.vertices
    return vs if isinstance(vs, list) else sorted(vs)


def check_axiom0(graph):
    """i-degree at most one; also validates neighbor symmetry."""
    for v in _ordered_vertices(graph):
        for i in graph.colors:
            w = graph.neighbor(v, i)
            if w is not None and graph.neighbor(w, i) != v:
                return ("axiom0", v, i, w)
    return None


def check_axiom1(graph):
    """v admits an i-neighbor iff its signature flips between i-1 and i."""
    for v in _ordered_vertices(graph):
        sig = graph.signature(v)
        for i in graph.colors:
            admits = graph.neighbor(v, i) is not None
            flips = sig[i - 2] == -sig[i - 1]
            if admits != flips:
                return ("axiom1", v, i)
    return None


def check_axiom2(graph):
    """An i-edge flips the signature at i-1, i and preserves it away from
    i-2..i+1."""
    for v in _ordered_vertices(graph):
        sv = graph.signature(v)
        for i in graph.colors:
            w = graph.neighbor(v, i)
            if w is None:
                continue
            sw = graph.signature(w)
            for h in range(1, graph.n):
                if h in (i - 1, i):
                    if sv[h - 1] != -sw[h - 1]:
                        return ("axiom2", v, w, i, h)
                elif h < i - 2 or h > i + 1:
                    if sv[h - 1] != sw[h - 1]:
                        return ("axiom2", v, w, i, h)
    return None


def check_axiom3(graph):
    for v in _ordered_vertices(graph):
        sv = graph.signature(v)
        for i in graph.colors:
            w = graph.neighbor(v, i)
            if w is None:
                continue
            sw = graph.signature(w)
            if i - 2 >= 1 and sv[i - 3] == -sw[i - 3] and sv[i - 3] != -sv[i - 2]:
                return ("axiom3", v, w, i, i - 2)
            if i + 1 <= graph.n - 1 and sv[i] == -sw[i] and sv[i] != -sv[i - 1]:
                return ("axiom3", v, w, i, i + 1)
    return None


def check_axiom5(graph):
    """i-edges and j-edges commute for |i - j| >= 3."""
    for v in _ordered_vertices(graph):
        for i in graph.colors:
            w = graph.neighbor(v, i)
            if w is None:
                continue
            for j in graph.colors:
                if abs(i - j) < 3:
                    continue
                y = graph.neighbor(v, j)
                if y is None:
                    continue
                u = graph.neighbor(w, j)
                if u is None or graph.neighbor(y, i) != u:
                    return ("axiom5", v, i, j)
    return None


def check_axiom4a(graph):
    """For each i-1-edge {w,v} that is not an i-edge and flips the signature
    at both i-3 and i, the component generating functions of the [i-3,i] and
    [i-2,i+1] restrictions at w agree."""
    for w in _ordered_vertices(graph):
        sw = graph.signature(w)
        for i in range(4, graph.n):
            v = graph.neighbor(w, i - 1)
            if v is None or graph.neighbor(w, i) == v:
                continue
            sv = graph.signature(v)
            if sw[i - 4] == sv[i - 4] or sw[i - 1] == sv[i - 1]:
                continue
            left = restricted_component(graph, w, i - 3, i)
            right = restricted_component(graph, w, i - 2, i + 1)
            if left.fundamental_vector() != right.fundamental_vector():
                return ("axiom4a", w, i)
    return None


def itype_w(graph, v, i: int) -> bool:
    """v admits i- and (i-1)-neighbors and its i-signature flips across the
    (i-1)-edge."""
    if i - 1 < 2 or i > graph.n - 1:
        return False
    if graph.neighbor(v, i) is None:
        return False
    u = graph.neighbor(v, i - 1)
    if u is None:
        return False
    return graph.signature(v)[i - 1] == -graph.signature(u)[i - 1]


# ---------------------------------------------------------------------------
# Flat chains and axioms 4'b / 4''b.


@dataclass
class Chain:
    color: int
    vertices: list


def _chain_ok_vertex(graph, v, i):
    return graph.neighbor(v, i - 2) is not None


def flat_successors(graph, x, i: int) -> list:
    """Valid successors x^{2j+1} of an even-position chain vertex x = x^{2j}:
    E_{i-2}((E_{i-1}E_{i-2})^m x) over m >= 0 where the inner vertex does not
    have (i-1)-type W.  Unique for D0 graphs."""
    out = []
    y = x
    seen = {x}
    while True:
        if not itype_w(graph, y, i - 1):
            s = graph.neighbor(y, i - 2)
            if s is not None:
                out.append(s)
        z = graph.neighbor(y, i - 2)
        if z is None:
            break
        y2 = graph.neighbor(z, i - 1)
        if y2 is None or y2 in seen:
            break
        seen.add(y2)
        y = y2
    return out


def weak_flat_successors(graph, x, i: int) -> list:
    """Successor candidates for weak flat chains: any vertex y on the
    (i-2)-(i-1)-string through x whose (i-2)-neighbor exists and does not have
    (i-1)-type W."""
    string = {x}
    frontier = [x]
    while frontier:
        v = frontier.pop()
        for c in (i - 2, i - 1):
            w = graph.neighbor(v, c)
            if w is not None and w not in string:
                string.add(w)
                frontier.append(w)
    out = []
    for y in sorted(string):
        z = graph.neighbor(y, i - 2)
        if z is not None and not itype_w(graph, z, i - 1) and y != x:
            out.append(y)
    return out


def _extend_chains(graph, i, start_pair, successors):
    """All maximal chains beginning with the oriented pair start_pair,
    extending rightward; branches when successors are not unique."""
    chains = []
    stack = [list(start_pair)]
    while stack:
        chain = stack.pop()
        x = chain[-1]
        extended = False
        for s in successors(graph, x, i):
            if s in chain:
                continue
            nxt = graph.neighbor(s, i)
            if nxt is None or nxt in chain:
                continue
            if not (_chain_ok_vertex(graph, s, i) and _chain_ok_vertex(graph, nxt, i)):
                continue
            stack.append(chain + [s, nxt])
            extended = True
        if not extended:
            chains.append(chain)
    return chains


def enumerate_chains(graph, i: int, weak: bool = False) -> list[Chain]:
    """Maximal(-to-the-right) flat or weak flat i-chains from every oriented
    i-edge start.  Every flat chain is a window of some enumerated chain."""
    successors = weak_flat_successors if weak else flat_successors
    chains = []
    for v in _ordered_vertices(graph):
        w = graph.neighbor(v, i)
        if w is None:
            continue
        if not (_chain_ok_vertex(graph, v, i) and _chain_ok_vertex(graph, w, i)):
            continue
        # oriented pair (x1, x2) = (v, w) with x1 = E_i(x2)
        for chain in _extend_chains(graph, i, (v, w), successors):
            chains.append(Chain(color=i, vertices=chain))
    return chains


def maximal_flat_chains(graph, i: int) -> list[Chain]:
    """Enumerated chains that cannot be extended to the left, deduplicated."""
    chains = enumerate_chains(graph, i, weak=False)
    out = []
    seen = set()
    for ch in chains:
        first = ch.vertices[0]
        left_extensible = False
        for x0 in _ordered_vertices(graph):
            if x0 in ch.vertices:
                continue
            if graph.neighbor(x0, i) is None or not _chain_ok_vertex(graph, x0, i):
                continue
            if first in flat_successors(graph, x0, i):
                xm1 = graph.neighbor(x0, i)
                if xm1 not in ch.vertices and xm1 != x0 and _chain_ok_vertex(graph, xm1, i):
                    left_extensible = True
                    break
        if not left_extensible:
            key = (i, tuple(ch.vertices))
            if key not in seen:
                seen.add(key)
                out.append(ch)
    return out


def _dichotomy_violation(graph, chain: Chain):
    """Check the prefix/suffix type-W dichotomy on one chain; returns the
    violating interior index or None."""
    i = chain.color
    xs = chain.vertices
    h2 = len(xs)
    flags = [itype_w(graph, x, i + 1) for x in xs]
    for j in range(3, h2 - 1):  # interior positions 2 < j < 2h-1, 1-based
        if not flags[j - 1]:
            continue
        if all(flags[: j]) or all(flags[j - 1:]):
            continue
        return j
    return None


def check_axiom4b(graph, weak: bool = False):
    """Axiom 4'b (or 4''b with ``weak``): on every (weak) flat i-chain, any
    interior vertex of (i+1)-type W forces the whole prefix or suffix to have
    (i+1)-type W."""
    for i in range(4, graph.n - 1):
        for chain in enumerate_chains(graph, i, weak=weak):
            j = _dichotomy_violation(graph, chain)
            if j is not None:
                return ("axiom4''b" if weak else "axiom4'b", i, chain.vertices, j)
    return None


def check_axiom4bb(graph):
    return check_axiom4b(graph, weak=True)


# ---------------------------------------------------------------------------
# Local Schur positivity.


def check_lsp(graph, d: int):
    """Every component of every size-d restriction has a Schur positive
    generating function."""
    for lo in range(1, graph.n - d + 2):
        hi = lo + d - 1
        res = graph.restrict(lo, hi)
        for comp in res.components():
            try:
                exp = schur_from_fundamental(comp.fundamental_vector(), d)
            except NotSymmetricError as e:
                return ("lsp", d, lo, sorted(comp.vertices)[0], dict(e.residual))
            if not is_schur_positive(exp):
                return ("lsp", d, lo, sorted(comp.vertices)[0], exp)
    return None


# ---------------------------------------------------------------------------
# KR hypercubes and the pattern reformulation of axiom 5.


def _pattern_matrices():
    """The 12 valid full patterns of Proposition-level axiom-5 analysis."""
    K, R = KNUTH, ROTATION
    raw = [
        (K, K, K, K, K, K, K, K),
        (K, K, K, K, K, K, R, R),
        (K, K, R, R, K, K, K, K),
        (K, K, R, R, K, K, R, R),
        (K, K, K, K, R, R, K, K),
        (R, R, K, K, K, K, K, K),
        (K, R, R, R, K, R, R, R),
        (R, K, R, R, R, K, R, R),
        (R, R, K, K, R, R, K, K),
        (R, R, K, R, R, R, K, R),
        (R, R, R, K, R, R, R, K),
        (R, R, R, R, R, R, R, R),
    ]
    # entries listed row-major: (t1i t2i t1j t2j / t3i t4i t3j t4j)
    return tuple(raw)


VALID_PATTERNS = _pattern_matrices()

_SLOTS = range(8)  # row-major: 0..3 top row, 4..7 bottom row


def _forbidden_partial_patterns():
    """The 64 forbidden partial patterns, as dicts slot -> type."""
    K, R = KNUTH, ROTATION
    # left-half slot layout: top (0,1), bottom (4,5); right half: top (2,3), bottom (6,7)
    def left(entries):
        return {(0, 1, 4, 5)[p]: t for p, t in entries}

    def right(entries):
        return {(2, 3, 6, 7)[p]: t for p, t in entries}

    singles_K = [[(p, K)] for p in range(4)]
    singles_R = [[(p, R)] for p in range(4)]
    rows_KR = [[(0, K), (1, R)], [(2, K), (3, R)], [(0, R), (1, K)], [(2, R), (3, K)]]
    cols_KR = [[(0, K), (2, R)], [(1, K), (3, R)], [(0, R), (2, K)], [(1, R), (3, K)]]
    out = []
    for ls, rs in ((singles_K, rows_KR), (singles_R, cols_KR),
                   (rows_KR, singles_K), (cols_KR, singles_R)):
        for le in ls:
            for re in rs:
                out.append({**left(le), **right(re)})
    return tuple(out)


FORBIDDEN_PARTIALS = _forbidden_partial_patterns()


def pattern_covers(full, pattern) -> bool:
    """A full K/R pattern covers a pattern iff it agrees wherever the pattern
    has a determined type (empty and undetermined entries are free)."""
    for slot in _SLOTS:
        t = pattern[slot]
        if t in (KNUTH, ROTATION) and full[slot] != t:
            return False
    return True


def pattern_contains_forbidden(pattern) -> bool:
    for partial in FORBIDDEN_PARTIALS:
        if all(pattern[slot] == t for slot, t in partial.items()):
            return True
    return False


def hypercube_square_keys(i: int, j: int, x, abc, y, dfe, z):
    """The eight square keys of the KR_{i,j} hypercube, row-major per the
    pattern layout."""
    a, b, c = sorted(abc)
    d, e, f = sorted(dfe)
    mids_abc = [(b, a, c), (b, c, a), (a, c, b), (c, a, b)]
    mids_def = [(e, d, f), (e, f, d), (d, f, e), (f, d, e)]
    i_keys = [(i,) + x + (b, a, c) + y + m + z for m in mids_def]
    j_keys = [(j,) + x + m + y + (e, d, f) + z for m in mids_abc]
    # slots: top row = (i1, i2, j1, j2), bottom = (i3, i4, j3, j4)
    return (i_keys[0], i_keys[1], j_keys[0], j_keys[1],
            i_keys[2], i_keys[3], j_keys[2], j_keys[3])


def hypercubes_of_degree(n: int, alphabet: int):
    """All KR_{i,j} hypercube descriptors (i, j, x, abc, y, dfe, z) for words
    of length n over the alphabet."""
    letters = list(range(1, alphabet + 1))
    for i in range(2, n):
        for j in range(i + 3, n):
            xl, yl, zl = i - 2, j - i - 3, n - j - 1
            for abc in itertools.combinations(letters, 3):
                rest1 = [t for t in letters if t not in abc]
                for dfe in itertools.combinations(rest1, 3):
                    rest2 = [t for t in rest1 if t not in dfe]
                    for outer in itertools.permutations(rest2, xl + yl + zl):
                        x = outer[:xl]
                        y = outer[xl:xl + yl]
                        z = outer[xl + yl:]
                        yield (i, j, x, abc, y, dfe, z)


def hypercubes_meeting(graph: PartialD0Graph):
    """Hypercube descriptors with at least one square meeting the graph,
    derived from the graph's own square table."""
    seen = set()
    for key in graph.types:
        i = key[0]
        word = key[1:]
        n = len(word)
        for j in range(2, n):
            if j >= i + 3:
                lo, hi = i, j
                trio = word[j - 2: j + 1]
            elif i >= j + 3:
                lo, hi = j, i
                trio = word[j - 2: j + 1]
            else:
                continue
            if trio[0] < trio[1] < trio[2] or trio[0] > trio[1] > trio[2]:
                continue
            desc = _hypercube_descriptor(word, lo, hi)
            if desc not in seen:
                seen.add(desc)
                yield desc


def _hypercube_descriptor(word, i, j):
    abc = tuple(sorted(word[i - 2: i + 1]))
    dfe = tuple(sorted(word[j - 2: j + 1]))
    x = word[: i - 2]
    y = word[i + 1: j - 2]
    z = word[j + 1:]
    return (i, j, x, abc, y, dfe, z)


def hypercube_pattern(graph: PartialD0Graph, desc):
    keys = hypercube_square_keys(*desc)
    return tuple(graph.square_type(k) for k in keys)


def iter_hypercube_patterns(graph: PartialD0Graph):
    for desc in hypercubes_meeting(graph):
        yield desc, hypercube_pattern(graph, desc)


def check_axiom5_patterns(graph: PartialD0Graph):
    """Axiom 5 via hypercube patterns: every pattern must avoid the 64
    forbidden partials (equivalently be covered by one of the 12)."""
    for desc, pattern in iter_hypercube_patterns(graph):
        if pattern_contains_forbidden(pattern):
            return ("axiom5-pattern", desc, pattern)
    return None


def is_d_graph(graph, debug: bool = False) -> bool:
    """A D0 graph is a D graph iff it satisfies axioms 4'b and 5; with
    ``debug`` the remaining axioms are asserted too."""
    if debug:
        for chk in (check_axiom0, check_axiom1, check_axiom2, check_axiom3, check_axiom4a):
            witness = chk(graph)
            assert witness is None, witness
        for d in (4, 5):
            witness = check_lsp(graph, d)
            assert witness is None, witness
    return check_axiom5(graph) is None and check_axiom4b(graph) is None
