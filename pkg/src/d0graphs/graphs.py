"""KR squares, KR sets, partial D0 graphs with derived edges, and the signed
colored graph view used by the axiom checkers.

A KR square on letters a < b < c with prefix v and suffix w is the 4-tuple
{v bac w, v bca w, v acb w, v cab w}; its color is len(v) + 2.  Each square of
a graph carries a type: Knuth, rotation, or undetermined (squares fully inside
the vertex set that carry no edges yet).  Squares disjoint from the vertex set
are simply absent from the type table.
"""

from __future__ import annotations

from collections import deque

from .words import Word, signature, is_repetition_free
from .ncsf import WordVector, vector_sum, delta_schur, SchurExpansion

KNUTH = "K"
ROTATION = "R"
UNDETERMINED = "0"

SquareKey = tuple  # (color, *bac_member_word); lexicographic order is canonical


def square_key(w: Word, i: int) -> SquareKey | None:
    """Key of the KR_i square containing w, or None if w has no such square.

    The key is (i,) followed by the member word v + (b,a,c) + w, so sorting
    keys lexicographically matches ordering the strings "i v bac w".
    """
    x, y, z = w[i - 2], w[i - 1], w[i]
    if x < y < z or x > y > z:
        return None
    a, b, c = sorted((x, y, z))
    return (i,) + w[: i - 2] + (b, a, c) + w[i + 1:]


def square_color(key: SquareKey) -> int:
    return key[0]


def square_members(key: SquareKey) -> tuple[Word, Word, Word, Word]:
    """The member words in the order (bac, bca, acb, cab)."""
    i = key[0]
    word = key[1:]
    v, trio, w = word[: i - 2], word[i - 2: i + 1], word[i + 1:]
    b, a, c = trio
    return (v + (b, a, c) + w, v + (b, c, a) + w, v + (a, c, b) + w, v + (c, a, b) + w)


def square_knuth_pairs(key):
    bac, bca, acb, cab = square_members(key)
    return (bac, bca), (acb, cab)


def square_rotation_pairs(key):
    bac, bca, acb, cab = square_members(key)
    return (bac, acb), (bca, cab)


def admissible_colors(w: Word) -> list[int]:
    """Colors i for which w lies in a KR_i square (sigma flips at i-1, i)."""
    sig = signature(w)
    return [i for i in range(2, len(w)) if sig[i - 2] != sig[i - 1]]


def squares_meeting(W) -> dict[SquareKey, list[Word]]:
    """All KR squares intersecting W, with their member lists within W."""
    hits: dict[SquareKey, list[Word]] = {}
    for w in W:
        for i in range(2, len(w)):
            key = square_key(w, i)
            if key is not None:
                hits.setdefault(key, []).append(w)
    return hits


def is_kr_set(W) -> bool:
    """True iff every KR square meets W in nothing, everything, or a Knuth or
    rotation pair."""
    W = set(W)
    if not all(is_repetition_free(w) for w in W):
        return False
    for key, members in squares_meeting(W).items():
        if not _legal_intersection(key, frozenset(members)):
            return False
    return True


def _legal_intersection(key: SquareKey, inter: frozenset[Word]):
    """Classify a square intersection: returns the forced type for pairs, None
    for full squares, raising nothing; illegal intersections return False."""
    if len(inter) == 4:
        return None
    if len(inter) != 2:
        return False
    for p in square_knuth_pairs(key):
        if inter == frozenset(p):
            return KNUTH
    for p in square_rotation_pairs(key):
        if inter == frozenset(p):
            return ROTATION
    return False


def complement(W, n: int, alphabet: int) -> frozenset[Word]:
    """The complement of W inside the repetition-free words of length n over
    the given alphabet; again a KR set when W is."""
    import itertools
    W = set(W)
    return frozenset(w for w in itertools.permutations(range(1, alphabet + 1), n)
                     if w not in W)


class PartialD0Graph:
    """A vertex set W with a type for every KR square meeting W.

    Edges are derived from square types: a Knuth square contributes its Knuth
    pairs (restricted to W), a rotation square its rotation pairs.  Adjacency
    is materialized for O(1) neighbor lookups.
    """

    def __init__(self, vertices, types: dict[SquareKey, str], n: int | None = None):
        self.vertex_set = frozenset(vertices)
        if not self.vertex_set and n is None:
            n = 0
        self.n = n if n is not None else len(next(iter(self.vertex_set)))
        self.types = types
        self._sig: dict[Word, tuple[int, ...]] = {}
        self.adj: dict[Word, dict[int, Word]] = {w: {} for w in self.vertex_set}
        for key, t in types.items():
            if t != UNDETERMINED:
                self._add_square_edges(key, t)

    # -- construction ------------------------------------------------------

    @classmethod
    def minimal(cls, W) -> "PartialD0Graph":
        """The partial D0 graph on the KR set W with as many undetermined
        squares as possible (pair squares get their forced type)."""
        W = frozenset(W)
        types: dict[SquareKey, str] = {}
        for key, members in squares_meeting(W).items():
            verdict = _legal_intersection(key, frozenset(members))
            if verdict is False:
                raise ValueError(f"not a KR set: square {key} meets W in {sorted(members)}")
            types[key] = UNDETERMINED if verdict is None else verdict
        return cls(W, types)

    def copy(self) -> "PartialD0Graph":
        g = object.__new__(PartialD0Graph)
        g.vertex_set = self.vertex_set
        g.n = self.n
        g.types = dict(self.types)
        g._sig = self._sig
        g.adj = {w: dict(nb) for w, nb in self.adj.items()}
        return g

    # -- basic queries -----------------------------------------------------

    @property
    def vertices(self):
        return self.vertex_set

    @property
    def colors(self):
        return range(2, self.n)

    def signature(self, w: Word) -> tuple[int, ...]:
        s = self._sig.get(w)
        if s is None:
            s = signature(w)
            self._sig[w] = s
        return s

    def word(self, v: Word) -> Word:
        return v

    def neighbor(self, v: Word, i: int) -> Word | None:
        return self.adj[v].get(i)

    def edges(self):
        """Iterate (v, w, color, type) with v < w."""
        for key, t in self.types.items():
            if t == UNDETERMINED:
                continue
            pairs = square_knuth_pairs(key) if t == KNUTH else square_rotation_pairs(key)
            for p, q in pairs:
                if p in self.vertex_set and q in self.vertex_set:
                    yield (p, q, key[0], t) if p < q else (q, p, key[0], t)

    def edge_type(self, v: Word, i: int) -> str | None:
        if self.adj[v].get(i) is None:
            return None
        return self.types[square_key(v, i)]

    def square_type(self, key: SquareKey) -> str:
        """Type of any KR square: absent squares report empty intersection."""
        t = self.types.get(key)
        if t is not None:
            return t
        return "E"  # irrelevant: square does not meet the vertex set

    def undetermined_squares(self) -> list[SquareKey]:
        return [k for k, t in self.types.items() if t == UNDETERMINED]

    # -- mutation ----------------------------------------------------------

    def _add_square_edges(self, key: SquareKey, t: str) -> None:
        pairs = square_knuth_pairs(key) if t == KNUTH else square_rotation_pairs(key)
        i = key[0]
        for p, q in pairs:
            if p in self.vertex_set and q in self.vertex_set:
                self.adj[p][i] = q
                self.adj[q][i] = p

    def assign_in_place(self, key: SquareKey, t: str) -> None:
        if t not in (KNUTH, ROTATION):
            raise ValueError(f"square type must be Knuth or rotation, got {t!r}")
        current = self.types.get(key)
        if current != UNDETERMINED:
            raise ValueError(f"square {key} is not undetermined (type {current!r})")
        self.types[key] = t
        self._add_square_edges(key, t)

    def assign(self, key: SquareKey, t: str) -> "PartialD0Graph":
        g = self.copy()
        g.assign_in_place(key, t)
        return g

    def complete_all(self, t: str = KNUTH) -> "PartialD0Graph":
        g = self.copy()
        for key in g.undetermined_squares():
            g.assign_in_place(key, t)
        return g

    def is_complete(self) -> bool:
        return all(t != UNDETERMINED for t in self.types.values())

    # -- structure ---------------------------------------------------------

    def component_vertex_sets(self) -> list[frozenset[Word]]:
        """Vertex sets of connected components, largest first (ties by min word)."""
        seen: set[Word] = set()
        comps = []
        for start in sorted(self.vertex_set):
            if start in seen:
                continue
            comp = {start}
            queue = deque([start])
            seen.add(start)
            while queue:
                v = queue.popleft()
                for w in self.adj[v].values():
                    if w not in seen:
                        seen.add(w)
                        comp.add(w)
                        queue.append(w)
            comps.append(frozenset(comp))
        comps.sort(key=lambda c: (-len(c), min(c)))
        return comps

    def components(self) -> list["PartialD0Graph"]:
        return [self.induced(c) for c in self.component_vertex_sets()]

    def induced(self, vertices) -> "PartialD0Graph":
        """The induced partial D0 graph on a union of components.

        Square types are inherited; squares no longer meeting the subset drop
        out, and intersections stay legal because edges are never cut."""
        vs = frozenset(vertices)
        types = {}
        for key, members in squares_meeting(vs).items():
            t = self.types[key]
            if t == UNDETERMINED and len(members) != 4:
                raise ValueError("induced subgraph cuts an undetermined square")
            types[key] = t
        return PartialD0Graph(vs, types, n=self.n)

    def restrict(self, lo: int, hi: int) -> "SignedColoredGraph":
        """The K-restriction for K = [lo..hi]: vertices keep their identity,
        labels become subwords, signatures shift, and s-edges survive for
        s in (lo, hi) with color s - lo + 1."""
        if not 1 <= lo <= hi <= self.n:
            raise ValueError(f"restriction interval [{lo},{hi}] outside [1,{self.n}]")
        m = hi - lo + 1
        vertices = sorted(self.vertex_set)
        sig = {}
        labels = {}
        adj: dict[Word, dict[int, Word]] = {}
        for v in vertices:
            s = self.signature(v)
            sig[v] = s[lo - 1: hi - 1]
            labels[v] = v[lo - 1: hi]
            nb = {}
            for s_col, w in self.adj[v].items():
                if lo + 1 <= s_col <= hi - 1:
                    nb[s_col - lo + 1] = w
            adj[v] = nb
        return SignedColoredGraph(vertices, m, sig, adj, labels=labels)

    def as_signed_colored(self) -> "SignedColoredGraph":
        vertices = sorted(self.vertex_set)
        sig = {v: self.signature(v) for v in vertices}
        adj = {v: dict(self.adj[v]) for v in vertices}
        labels = {v: v for v in vertices}
        return SignedColoredGraph(vertices, self.n, sig, adj, labels=labels)

    def vertex_sum(self) -> WordVector:
        return vector_sum(self.vertex_set)

    def generating_function(self, cross_check: bool = True) -> SchurExpansion:
        """Schur expansion of the graph's generating function."""
        return delta_schur(self.vertex_sum(), cross_check=cross_check)

    def __repr__(self):
        und = sum(1 for t in self.types.values() if t == UNDETERMINED)
        return (f"PartialD0Graph(n={self.n}, vertices={len(self.vertex_set)}, "
                f"squares={len(self.types)}, undetermined={und})")


class SignedColoredGraph:
    """Generic signed colored graph satisfying axiom 0.

    Vertices are arbitrary hashable ids; ``labels`` optionally attaches a word
    to each vertex (restrictions keep the originating full word as the id and
    the subword as the label, so duplicate labels stay distinct).
    """

    def __init__(self, vertices, n: int, sig: dict, adj: dict, labels: dict | None = None):
        self.vertex_list = list(vertices)
        self.n = n
        self.sig = sig
        self.adj = adj
        self.labels = labels

    @property
    def vertices(self):
        return self.vertex_list

    @property
    def colors(self):
        return range(2, self.n)

    def signature(self, v) -> tuple[int, ...]:
        return self.sig[v]

    def word(self, v) -> Word | None:
        if self.labels is None:
            return None
        return self.labels.get(v)

    def neighbor(self, v, i: int):
        return self.adj[v].get(i)

    def edges(self):
        for v in self.vertex_list:
            for i, w in self.adj[v].items():
                if (v, w) <= (w, v):
                    yield v, w, i

    def component_vertex_sets(self) -> list[frozenset]:
        seen = set()
        comps = []
        for start in self.vertex_list:
            if start in seen:
                continue
            comp = {start}
            queue = deque([start])
            seen.add(start)
            while queue:
                v = queue.popleft()
                for w in self.adj[v].values():
                    if w not in seen:
                        seen.add(w)
                        comp.add(w)
                        queue.append(w)
            comps.append(frozenset(comp))
        return comps

    def component_of(self, v) -> "SignedColoredGraph":
        comp = {v}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for w in self.adj[x].values():
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        return self.induced(comp)

    def components(self) -> list["SignedColoredGraph"]:
        return [self.induced(c) for c in self.component_vertex_sets()]

    def induced(self, vertices) -> "SignedColoredGraph":
        vs = set(vertices)
        ordered = [v for v in self.vertex_list if v in vs]
        sig = {v: self.sig[v] for v in ordered}
        adj = {v: {i: w for i, w in self.adj[v].items() if w in vs} for v in ordered}
        labels = None if self.labels is None else {v: self.labels[v] for v in ordered}
        return SignedColoredGraph(ordered, self.n, sig, adj, labels=labels)

    def restrict(self, lo: int, hi: int) -> "SignedColoredGraph":
        if not 1 <= lo <= hi <= self.n:
            raise ValueError(f"restriction interval [{lo},{hi}] outside [1,{self.n}]")
        m = hi - lo + 1
        sig = {v: self.sig[v][lo - 1: hi - 1] for v in self.vertex_list}
        adj = {v: {i - lo + 1: w for i, w in self.adj[v].items() if lo + 1 <= i <= hi - 1}
               for v in self.vertex_list}
        labels = None
        if self.labels is not None:
            labels = {v: (self.labels[v][lo - 1: hi] if self.labels[v] is not None else None)
                      for v in self.vertex_list}
        return SignedColoredGraph(list(self.vertex_list), m, sig, adj, labels=labels)

    def fundamental_vector(self) -> dict[int, int]:
        acc: dict[int, int] = {}
        for v in self.vertex_list:
            m = 0
            for i, s in enumerate(self.sig[v]):
                if s < 0:
                    m |= 1 << i
            acc[m] = acc.get(m, 0) + 1
        return acc

    def generating_function(self) -> SchurExpansion:
        from .ncsf import schur_from_fundamental
        return schur_from_fundamental(self.fundamental_vector(), self.n)

    def __repr__(self):
        return f"SignedColoredGraph(n={self.n}, vertices={len(self.vertex_list)})"


def restricted_component(graph, v, lo: int, hi: int) -> SignedColoredGraph:
    """Res_[lo..hi](graph, v): the component of the restriction containing v."""
    return graph.restrict(lo, hi).component_of(v)
