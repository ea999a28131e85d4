"""Exhaustive small-n catalogs and the brute-force homomorphism oracle.

Everything here is desk scale on purpose: hard cost guards keep the sweeps
bounded and every catalog is deterministic (canonical-form sorted), so
property suites built on top of them are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product

from .errors import CostGuardError
from .formats import graph_to_inline
from .graphs import (
    Graph,
    Mapping,
    add_vertex,
    canonical_form,
    graph_from_canonical,
    is_point_determining,
)
from .homs import is_full_hom
from .relstruct import (
    RelStructure,
    rel_canonical_form,
    rel_is_full_hom,
    rel_is_point_determining,
    structure_to_json,
)

GRAPH_VERTEX_LIMIT = 7
REL_LABELLED_LIMIT = 1 << 16
BRUTE_FORCE_MAP_LIMIT = 10_000_000


@dataclass(frozen=True)
class IsoClassCatalog:
    """One representative per isomorphism class, canonical-form sorted."""

    n: int
    members: tuple
    count: int


def _sweep_graph_keys(n):
    # every labelled graph, deduplicated through the canonical form
    pairs = list(combinations(range(n), 2))
    keys = set()
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        keys.add(canonical_form(Graph.from_edges(n, edges)))
    return keys


def _augment_graph_keys(n):
    # every n-vertex class extends an (n-1)-vertex class by one vertex, so
    # growing each smaller catalog member in all 2^(n-1) ways covers them all
    keys = set()
    for g in enumerate_graphs(n - 1).members:
        for mask in range(1 << g.n):
            h = add_vertex(g, (i for i in range(g.n) if (mask >> i) & 1))
            keys.add(canonical_form(h))
    return keys


@lru_cache(maxsize=None)
def enumerate_graphs(n):
    """All isomorphism classes of simple n-vertex graphs, 1 <= n <= 7."""
    if not 1 <= n <= GRAPH_VERTEX_LIMIT:
        raise CostGuardError(
            f"graph enumeration supports 1 <= n <= {GRAPH_VERTEX_LIMIT}, got {n}"
        )
    keys = _sweep_graph_keys(n) if n <= 5 else _augment_graph_keys(n)
    members = tuple(graph_from_canonical(k) for k in sorted(keys))
    return IsoClassCatalog(n, members, len(members))


@lru_cache(maxsize=None)
def enumerate_pd_graphs(n):
    """The point-determining classes among enumerate_graphs(n)."""
    members = tuple(
        g for g in enumerate_graphs(n).members if is_point_determining(g)
    )
    return IsoClassCatalog(n, members, len(members))


def _tuple_space(language, n):
    return tuple(
        (name, t)
        for name, arity in language.symbols
        for t in product(range(n), repeat=arity)
    )


def _structure_from_mask(language, n, mask, space):
    rels = {name: set() for name in language.names()}
    for i, (name, t) in enumerate(space):
        if (mask >> i) & 1:
            rels[name].add(t)
    return RelStructure.make(language, n, rels)


@lru_cache(maxsize=None)
def enumerate_rel_structures(language, n):
    """All isomorphism classes of n-vertex structures over the language.

    Sweeps every labelled structure (one bit per possible tuple) and
    deduplicates by the minimum of the bit pattern under vertex
    permutations, applied through per-permutation byte lookup tables.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    space = _tuple_space(language, n)
    bits = len(space)
    if 1 << bits > REL_LABELLED_LIMIT:
        raise CostGuardError(
            f"structure enumeration supports at most {REL_LABELLED_LIMIT} "
            f"labelled structures, this language and n give 2^{bits}"
        )
    index = {st: i for i, st in enumerate(space)}
    nchunks = (bits + 7) // 8 if bits else 0
    tables = []
    for p in permutations(range(n)):
        if p == tuple(range(n)):
            continue
        tgt = [index[(name, tuple(p[x] for x in t))] for name, t in space]
        chunks = []
        for c in range(nchunks):
            lo = c * 8
            width = min(8, bits - lo)
            table = []
            for val in range(1 << width):
                m = 0
                for b in range(width):
                    if (val >> b) & 1:
                        m |= 1 << tgt[lo + b]
                table.append(m)
            chunks.append(table)
        tables.append(chunks)
    reps = set()
    for mask in range(1 << bits):
        best = mask
        for chunks in tables:
            m = 0
            for c, table in enumerate(chunks):
                m |= table[(mask >> (8 * c)) & 255]
            if m < best:
                best = m
        reps.add(best)
    members = [_structure_from_mask(language, n, mask, space) for mask in reps]
    members.sort(key=rel_canonical_form)
    return IsoClassCatalog(n, tuple(members), len(members))


@lru_cache(maxsize=None)
def enumerate_pd_rel_structures(language, n):
    members = tuple(
        a
        for a in enumerate_rel_structures(language, n).members
        if rel_is_point_determining(a)
    )
    return IsoClassCatalog(n, members, len(members))


def brute_force_full_hom(a, b):
    """First full homomorphism over all total maps in lexicographic order.

    The reference oracle for the quotient-plus-embedding search; works on
    graphs and on structures over a shared language.
    """
    if isinstance(a, Graph) and isinstance(b, Graph):
        check = is_full_hom
    elif isinstance(a, RelStructure) and isinstance(b, RelStructure):
        check = rel_is_full_hom
    else:
        raise ValueError("operands must be two graphs or two structures")
    if b.n ** a.n > BRUTE_FORCE_MAP_LIMIT:
        raise CostGuardError(
            f"brute force over {b.n}^{a.n} maps exceeds {BRUTE_FORCE_MAP_LIMIT}"
        )
    for image in product(range(b.n), repeat=a.n):
        f = Mapping(a.n, b.n, image)
        if check(a, b, f):
            return f
    return None


def catalog_export(catalog):
    """Text export: a count comment, then one member per line."""
    lines = [f"# count: {catalog.count}"]
    for m in catalog.members:
        if isinstance(m, Graph):
            lines.append(graph_to_inline(m))
        else:
            lines.append(structure_to_json(m))
    return "\n".join(lines) + "\n"
