"""Determining pairs, removable vertices, gap decisions, and core chains.

Vertex v determines a pair u, u' when deleting v makes their neighbourhoods
equal although they differed before.  On point-determining graphs each pair
has at most one determining vertex, which is what the forest argument and
the one-vertex gap characterisation build on.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import InvariantError
from .graphs import (
    Graph,
    Mapping,
    add_vertex,
    canonical_form,
    is_point_determining,
    remove_vertex,
    _check_vertex,
)
from .homs import induced_embedding


@dataclass(frozen=True)
class DeterminingGraph:
    """Auxiliary graph of determined pairs over a witness set.

    aux_edges holds each determined pair (u, u') with u < u' whose unique
    determining vertex lies in witness_set; determiner maps each such pair
    to that vertex.
    """

    base: Graph
    witness_set: frozenset
    aux_edges: frozenset
    determiner: dict


@dataclass(frozen=True)
class GapCertificate:
    """Witness that upper covers lower: a one-vertex induced extension."""

    lower: Graph
    upper: Graph
    embedding: Mapping
    removed_vertex: int


def determines(g, v, u, u2):
    """True when deleting v equalises the neighbourhoods of u and u2.

    The pair must have distinct neighbourhoods in g itself; without that
    condition every vertex would trivially determine a twin pair and
    uniqueness would fail.
    """
    if len({v, u, u2}) != 3:
        raise ValueError("vertices must be pairwise distinct")
    for x in (v, u, u2):
        _check_vertex(g, x)
    nu, nu2 = g.adj[u], g.adj[u2]
    if nu == nu2:
        return False
    return nu - {v} == nu2 - {v}


def _unique_determiner(g, u, u2):
    found = None
    for v in range(g.n):
        if v == u or v == u2:
            continue
        if determines(g, v, u, u2):
            if found is not None:
                raise InvariantError(
                    f"pair ({u}, {u2}) has two determining vertices: {found} and {v}"
                )
            found = v
    return found


def determining_vertex(g, u, u2):
    """The unique vertex determining the pair, or None."""
    if not is_point_determining(g):
        raise ValueError("graph must be point-determining")
    if u == u2:
        raise ValueError("vertices must be distinct")
    _check_vertex(g, u)
    _check_vertex(g, u2)
    return _unique_determiner(g, u, u2)


def determining_graph(g, witness_set):
    """Collect every pair determined by a vertex of the witness set."""
    if not is_point_determining(g):
        raise ValueError("graph must be point-determining")
    wset = frozenset(witness_set)
    for v in wset:
        _check_vertex(g, v)
    det = {}
    for u, u2 in combinations(range(g.n), 2):
        v = _unique_determiner(g, u, u2)
        if v is not None and v in wset:
            det[(u, u2)] = v
    return DeterminingGraph(g, wset, frozenset(det), det)


def check_forest_determiners(g, witness_set):
    """Compare determiners seen on all determined pairs against a spanning forest.

    Builds the auxiliary graph of determined pairs, extracts a spanning
    forest by breadth-first search from lowest-index roots (neighbours in
    ascending order), and returns the set of determining vertices over all
    auxiliary edges, the same set over forest edges only, and whether the
    two agree.  Agreement for every witness set is a library invariant
    exercised by the property suite.
    """
    dg = determining_graph(g, witness_set)
    nbrs = {v: set() for v in range(g.n)}
    for u, u2 in dg.aux_edges:
        nbrs[u].add(u2)
        nbrs[u2].add(u)
    forest = []
    seen = set()
    for root in range(g.n):
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in sorted(nbrs[x]):
                if y not in seen:
                    seen.add(y)
                    forest.append((min(x, y), max(x, y)))
                    queue.append(y)
    edge_det = frozenset(dg.determiner.values())
    forest_det = frozenset(dg.determiner[e] for e in forest)
    return edge_det, forest_det, edge_det == forest_det


def removable_vertices(g):
    """Vertices whose deletion leaves the graph point-determining.

    On point-determining inputs with at least two vertices this is never
    empty (in fact at least two vertices always qualify).
    """
    if not is_point_determining(g):
        raise ValueError("graph must be point-determining")
    if g.n < 2:
        raise ValueError("need at least two vertices")
    out = frozenset(
        v for v in range(g.n) if is_point_determining(remove_vertex(g, v)[0])
    )
    if not out:
        raise InvariantError("point-determining graph with no removable vertex")
    return out


def is_gap(g, h):
    """Certificate that h covers g in the order on point-determining graphs.

    Gaps are exactly the one-vertex induced extensions: both graphs
    point-determining, h one vertex larger, and g induced inside h.
    Non-point-determining inputs simply yield None (gaps are defined
    between cores only).
    """
    if not (is_point_determining(g) and is_point_determining(h)):
        return None
    if h.n != g.n + 1:
        return None
    emb = induced_embedding(g, h)
    if emb is None:
        return None
    removed = (set(range(h.n)) - set(emb.image)).pop()
    return GapCertificate(g, h, emb, removed)


def gap_extensions(g):
    """All point-determining one-vertex extensions of g, up to isomorphism.

    Tries each subset of g's vertices as the neighbourhood of a new
    highest-index vertex, keeps the point-determining results, and returns
    one representative per isomorphism class in canonical-form order.
    Every returned graph forms a gap above g.
    """
    if not is_point_determining(g):
        raise ValueError("graph must be point-determining")
    found = {}
    for mask in range(1 << g.n):
        h = add_vertex(g, (i for i in range(g.n) if (mask >> i) & 1))
        if not is_point_determining(h):
            continue
        found.setdefault(canonical_form(h), h)
    return [found[k] for k in sorted(found)]


def core_chain(g):
    """Chain of point-determining graphs from a single vertex up to g.

    Each step removes the lowest-index removable vertex, so consecutive
    members form gaps and the chain has exactly one member per size.
    """
    if not is_point_determining(g):
        raise ValueError("graph must be point-determining")
    chain = [g]
    cur = g
    while cur.n > 1:
        v = min(removable_vertices(cur))
        cur = remove_vertex(cur, v)[0]
        chain.append(cur)
    chain.reverse()
    return chain
