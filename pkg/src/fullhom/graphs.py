"""Finite simple graphs with adjacency-set semantics.

Vertices are always 0..n-1.  Graphs and mappings are immutable values, and
every operation in this module is a pure function, so shared instances are
safe to use from concurrent callers.  Loops are rejected here; structures
that allow loops live in :mod:`fullhom.relstruct`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations

VertexSet = frozenset
"""A subset of 0..n-1 of some ambient graph."""


@dataclass(frozen=True)
class Graph:
    """Undirected loopless graph stored as one neighbour set per vertex."""

    n: int
    adj: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        for v, nb in enumerate(self.adj):
            if v in nb:
                raise ValueError(f"loop at vertex {v}")
            for u in nb:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbour {u} of vertex {v} out of range")
                if v not in self.adj[u]:
                    raise ValueError(f"adjacency not symmetric on ({u}, {v})")

    @classmethod
    def from_edges(cls, n, edges=()):
        """Build a graph from an edge iterable; duplicates are collapsed."""
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        nbs = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise ValueError(f"loop ({u}, {v}) not allowed")
            nbs[u].add(v)
            nbs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbs))

    @cached_property
    def masks(self):
        """Neighbour sets as bitmasks: bit u of masks[v] is set iff u ~ v."""
        return tuple(sum(1 << u for u in nb) for nb in self.adj)

    def has_edge(self, u, v):
        return v in self.adj[u]

    def edges(self):
        """All edges as (u, v) pairs with u < v, sorted."""
        return tuple(
            (u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v
        )

    def degree(self, v):
        return len(self.adj[v])


@dataclass(frozen=True)
class Mapping:
    """Total map between vertex ranges; the witness object for homomorphisms."""

    n_source: int
    n_target: int
    image: tuple

    def __post_init__(self):
        if self.n_source < 1 or self.n_target < 1:
            raise ValueError("mapping endpoints need at least one vertex")
        if len(self.image) != self.n_source:
            raise ValueError("image must assign every source vertex")
        for v, w in enumerate(self.image):
            if not 0 <= w < self.n_target:
                raise ValueError(f"image {w} of vertex {v} out of range")

    def __call__(self, v):
        return self.image[v]

    def is_injective(self):
        return len(set(self.image)) == self.n_source

    def compose(self, inner):
        """Return self after inner (inner is applied first)."""
        if inner.n_target != self.n_source:
            raise ValueError("composition endpoints do not match")
        return Mapping(
            inner.n_source, self.n_target, tuple(self.image[x] for x in inner.image)
        )

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(range(n)))


def _check_vertex(g, v):
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for a {g.n}-vertex graph")


# Common constructions, mostly for tests and the CLI examples.

def empty_graph(n):
    return Graph.from_edges(n)


def complete_graph(n):
    return Graph.from_edges(n, combinations(range(n), 2))


def path_graph(n):
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def neighborhood(g, v):
    """Open neighbourhood of v; never contains v itself."""
    _check_vertex(g, v)
    return g.adj[v]


def is_point_determining(g):
    """True iff no two vertices share the same neighbourhood."""
    return len(set(g.adj)) == g.n


def pd_quotient(g):
    """Merge equal-neighbourhood vertex classes until none remain.

    Returns the point-determining quotient together with the merge map,
    which is a full homomorphism onto it.  Each merge class is collapsed
    onto its lowest-index vertex, and the quotient is the induced subgraph
    on those representatives (relabelled order-preservingly), so the result
    is isomorphic to an induced subgraph of the input.  Merging can create
    new equal-neighbourhood pairs, hence the fixpoint loop.
    """
    current = g
    image = list(range(g.n))
    while True:
        groups = {}
        for v, nb in enumerate(current.adj):
            groups.setdefault(nb, []).append(v)
        if len(groups) == current.n:
            break
        reps = sorted(min(vs) for vs in groups.values())
        index = {rep: i for i, rep in enumerate(reps)}
        step = {}
        for vs in groups.values():
            cls = index[min(vs)]
            for v in vs:
                step[v] = cls
        adj = tuple(
            frozenset(index[u] for u in current.adj[rep] if u in index)
            for rep in reps
        )
        current = Graph(len(reps), adj)
        image = [step[x] for x in image]
    return current, Mapping(g.n, current.n, tuple(image))


def remove_vertex(g, v):
    """Delete v; returns the reduced graph and the order-preserving old->new map."""
    if g.n < 2:
        raise ValueError("cannot remove the last vertex of a graph")
    _check_vertex(g, v)
    relabel = {u: (u if u < v else u - 1) for u in range(g.n) if u != v}
    adj = tuple(
        frozenset(relabel[w] for w in g.adj[u] if w != v)
        for u in range(g.n)
        if u != v
    )
    return Graph(g.n - 1, adj), relabel


def induced_subgraph(g, vertices):
    """Graph induced on the given vertices, relabelled order-preservingly."""
    sel = sorted(set(vertices))
    if not sel:
        raise ValueError("an induced subgraph needs at least one vertex")
    for v in sel:
        _check_vertex(g, v)
    relabel = {v: i for i, v in enumerate(sel)}
    adj = tuple(
        frozenset(relabel[w] for w in g.adj[v] if w in relabel) for v in sel
    )
    return Graph(len(sel), adj)


def add_vertex(g, neighbours):
    """Extend g by one vertex (index n) adjacent to the given existing vertices."""
    nb = frozenset(neighbours)
    for v in nb:
        _check_vertex(g, v)
    adj = tuple(
        (g.adj[v] | {g.n}) if v in nb else g.adj[v] for v in range(g.n)
    ) + (nb,)
    return Graph(g.n + 1, adj)


@lru_cache(maxsize=None)
def _canonical_payload(g):
    """Lexicographically minimal placement masks over all vertex orders.

    Vertices are placed one at a time; position k contributes a k-bit mask
    holding its adjacency to the already placed vertices, earliest placement
    in the highest bit.  Tuple comparison of payloads therefore matches the
    bit-string comparison of the packed form.  Branch and bound: each
    vertex's pending mask is maintained incrementally, candidates are tried
    smallest mask (then smallest degree) first so a near-minimal payload
    appears early, and a partial placement is dropped as soon as it exceeds
    the best payload found so far.
    """
    n = g.n
    if n == 1:
        return ()
    masks = g.masks
    deg = [len(nb) for nb in g.adj]
    best = None
    current = []
    pmask = [0] * n  # adjacency of each unplaced vertex to the placed prefix

    def extend(k, tight, avail):
        nonlocal best
        if not avail:
            if best is None or current < best:
                best = current.copy()
            return
        for v in sorted(avail, key=lambda u: (pmask[u], deg[u], u)):
            m = pmask[v]
            if tight and best is not None:
                if m > best[k]:
                    break  # candidates are sorted, the rest only get worse
                child_tight = m == best[k]
            else:
                child_tight = False
            current.append(m)
            rest = [u for u in avail if u != v]
            mv = masks[v]
            for u in rest:
                pmask[u] = (pmask[u] << 1) | ((mv >> u) & 1)
            extend(k + 1, child_tight, rest)
            for u in rest:
                pmask[u] >>= 1
            current.pop()

    extend(0, True, list(range(n)))
    return tuple(best[1:])  # position 0 carries no bits


def canonical_form(g):
    """Canonical label: equal byte strings exactly for isomorphic graphs.

    The encoding is the vertex count followed by the minimal placement
    masks, fixed width, so byte-wise ordering first sorts by size and then
    by the canonical adjacency bits.
    """
    payload = _canonical_payload(g)
    n = g.n
    width = (n - 1 + 7) // 8 if n > 1 else 0
    return n.to_bytes(2, "big") + b"".join(m.to_bytes(width, "big") for m in payload)


def graph_from_canonical(form):
    """Rebuild the canonically labelled representative from its label."""
    if len(form) < 2:
        raise ValueError("canonical form too short")
    n = int.from_bytes(form[:2], "big")
    if n < 1:
        raise ValueError("canonical form encodes an empty graph")
    width = (n - 1 + 7) // 8 if n > 1 else 0
    if len(form) != 2 + (n - 1) * width:
        raise ValueError("canonical form has the wrong length")
    edges = []
    for k in range(1, n):
        mask = int.from_bytes(form[2 + (k - 1) * width : 2 + k * width], "big")
        for i in range(k):
            if (mask >> (k - 1 - i)) & 1:
                edges.append((i, k))
    return Graph.from_edges(n, edges)


def is_isomorphic(g, h):
    return canonical_form(g) == canonical_form(h)
