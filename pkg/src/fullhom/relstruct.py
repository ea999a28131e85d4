"""Relational structures with unary and binary (and larger) relations.

This is the loop-aware generalisation of the graph machinery.  The
neighbourhood of a vertex collects its incident tuples with every
occurrence of the vertex replaced by a marker; for a looped vertex
(constant tuple present, arity at least 2) the tuples are drawn from the
complemented relation plus the loop itself instead.  Point-determinacy,
quotients, and full homomorphisms then mirror the graph case, but the gap
decision is only sound for arities up to 2: :func:`ternary_counterexample`
returns a point-determining structure with a single ternary tuple whose
only point-determining proper substructures are single vertices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product

from .errors import ParseError, UnsupportedArityError
from .graphs import Graph, Mapping

MARK = None
"""Marker standing in for the removed vertex inside marked tuples."""


@dataclass(frozen=True)
class Language:
    """Ordered list of relation symbols with their arities."""

    symbols: tuple

    def __post_init__(self):
        seen = set()
        for entry in self.symbols:
            name, arity = entry
            if not isinstance(name, str) or not name:
                raise ValueError("relation names must be non-empty strings")
            if name in seen:
                raise ValueError(f"duplicate relation name {name!r}")
            seen.add(name)
            if not isinstance(arity, int) or arity < 1:
                raise ValueError(f"arity of {name!r} must be a positive integer")

    @classmethod
    def make(cls, arities):
        """Build from a name -> arity dict, symbols ordered by name."""
        return cls(tuple(sorted(arities.items())))

    @cached_property
    def _index(self):
        return {name: i for i, (name, _) in enumerate(self.symbols)}

    def arity(self, name):
        return self.symbols[self._index[name]][1]

    def names(self):
        return tuple(name for name, _ in self.symbols)

    def max_arity(self):
        return max(ar for _, ar in self.symbols)


@dataclass(frozen=True)
class RelStructure:
    """Vertices 0..n-1 plus one tuple set per language symbol."""

    language: Language
    n: int
    relations: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a structure needs at least one vertex")
        if len(self.relations) != len(self.language.symbols):
            raise ValueError("one relation required per language symbol")
        for (name, arity), rel in zip(self.language.symbols, self.relations):
            for t in rel:
                if len(t) != arity:
                    raise ValueError(f"tuple {t} has wrong length for {name!r}")
                for x in t:
                    if not 0 <= x < self.n:
                        raise ValueError(f"tuple entry {x} out of range in {name!r}")

    @classmethod
    def make(cls, language, n, rels=None):
        rels = rels or {}
        unknown = set(rels) - set(language.names())
        if unknown:
            raise ValueError(f"unknown relation names: {sorted(unknown)}")
        return cls(
            language,
            n,
            tuple(
                frozenset(tuple(t) for t in rels.get(name, ()))
                for name, _ in language.symbols
            ),
        )

    def rel(self, name):
        return self.relations[self.language._index[name]]


def _check_vertex(a, v):
    if not 0 <= v < a.n:
        raise ValueError(f"vertex {v} out of range for a {a.n}-vertex structure")


def mark_tuple(t, v):
    """Replace every occurrence of v by the marker; v must occur."""
    if v not in t:
        raise ValueError(f"vertex {v} does not occur in {t}")
    return tuple(MARK if x == v else x for x in t)


def has_loop(a, v):
    """True iff some relation of arity >= 2 contains the constant tuple on v."""
    _check_vertex(a, v)
    return any(
        arity >= 2 and (v,) * arity in rel
        for (_, arity), rel in zip(a.language.symbols, a.relations)
    )


def rel_neighborhood(a, v):
    """Per-symbol marked-tuple neighbourhood of v.

    Direct case: the marked versions of the relation's tuples containing v.
    Loop case (constant tuple present, arity >= 2): tuples containing v are
    drawn from the complement of the relation united with the loop itself.
    Arity-1 symbols always use the direct reading; for them the two cases
    produce the same single-marker neighbourhood anyway.
    """
    _check_vertex(a, v)
    out = {}
    for (name, arity), rel in zip(a.language.symbols, a.relations):
        loop = (v,) * arity
        if arity >= 2 and loop in rel:
            tuples = (
                t
                for t in product(range(a.n), repeat=arity)
                if v in t and (t == loop or t not in rel)
            )
        else:
            tuples = (t for t in rel if v in t)
        out[name] = frozenset(mark_tuple(t, v) for t in tuples)
    return out


def _neighborhood_key(a, v):
    nb = rel_neighborhood(a, v)
    return tuple(nb[name] for name in a.language.names())


def rel_is_point_determining(a):
    """True iff all vertex neighbourhoods are pairwise distinct."""
    return len({_neighborhood_key(a, v) for v in range(a.n)}) == a.n


def rel_pd_quotient(a):
    """Fixpoint merge of equal-neighbourhood vertex classes.

    Classes collapse onto their lowest-index vertex and tuples are rewritten
    through the merge map (duplicates collapsing).  Returns the
    point-determining quotient and the composite map, which is a full
    homomorphism onto it.
    """
    current = a
    image = list(range(a.n))
    while True:
        groups = {}
        for v in range(current.n):
            groups.setdefault(_neighborhood_key(current, v), []).append(v)
        if len(groups) == current.n:
            break
        reps = sorted(min(vs) for vs in groups.values())
        index = {rep: i for i, rep in enumerate(reps)}
        step = {}
        for vs in groups.values():
            cls = index[min(vs)]
            for v in vs:
                step[v] = cls
        relations = tuple(
            frozenset(tuple(step[x] for x in t) for t in rel)
            for rel in current.relations
        )
        current = RelStructure(current.language, len(reps), relations)
        image = [step[x] for x in image]
    return current, Mapping(a.n, current.n, tuple(image))


def rel_is_full_hom(a, b, f):
    """True iff f preserves tuple membership in both directions, all symbols."""
    if a.language != b.language:
        raise ValueError("structures use different languages")
    if f.n_source != a.n or f.n_target != b.n:
        raise ValueError("mapping endpoints do not match the given structures")
    img = f.image
    for (_, arity), ra, rb in zip(a.language.symbols, a.relations, b.relations):
        for t in product(range(a.n), repeat=arity):
            if (t in ra) != (tuple(img[x] for x in t) in rb):
                return False
    return True


def rel_induced_embedding(a, b):
    """Lexicographically first injective map with exact tuple agreement.

    Source vertices are assigned in index order, candidates in index order.
    After each assignment every tuple over the assigned sources that
    involves the new one is checked in both directions.
    """
    if a.language != b.language:
        raise ValueError("structures use different languages")
    if a.n > b.n:
        return None
    arities = [arity for _, arity in a.language.symbols]
    assign = []
    used = [False] * b.n

    def consistent(k, t_img):
        for arity, ra, rb in zip(arities, a.relations, b.relations):
            srcs = range(k + 1)
            for t in product(srcs, repeat=arity):
                if k not in t:
                    continue
                mapped = tuple(t_img[x] for x in t)
                if ((t in ra)) != (mapped in rb):
                    return False
        return True

    def place(k):
        if k == a.n:
            return True
        for t in range(b.n):
            if used[t]:
                continue
            assign.append(t)
            if consistent(k, assign):
                used[t] = True
                if place(k + 1):
                    return True
                used[t] = False
            assign.pop()
        return False

    if not place(0):
        return None
    return Mapping(a.n, b.n, tuple(assign))


def rel_find_full_hom(a, b):
    """Full homomorphism a -> b, or None; quotient, embed, include back."""
    aq, amap = rel_pd_quotient(a)
    bq, bmap = rel_pd_quotient(b)
    emb = rel_induced_embedding(aq, bq)
    if emb is None:
        return None
    section = [None] * bq.n
    for v in range(b.n):
        x = bmap(v)
        if section[x] is None:
            section[x] = v
    return Mapping(a.n, b.n, tuple(section[emb(amap(v))] for v in range(a.n)))


@dataclass(frozen=True)
class RelGapCertificate:
    lower: RelStructure
    upper: RelStructure
    embedding: Mapping
    removed_vertex: int


def rel_is_gap(a, b):
    """Gap certificate for structures over languages of arity at most 2.

    Same criterion as for graphs: both point-determining, one vertex of
    size difference, induced embedding exists.  Any symbol of arity 3 or
    more is rejected outright: a point-determining structure with a single
    ternary tuple has no point-determining substructure short of single
    vertices, so the one-vertex criterion is unsound there.
    """
    for lang in (a.language, b.language):
        bad = [name for name, arity in lang.symbols if arity > 2]
        if bad:
            raise UnsupportedArityError(
                f"gap decision needs arity <= 2, got {bad[0]!r} of arity "
                f"{lang.arity(bad[0])}; beyond binary relations gaps are not "
                "one-vertex extensions (single ternary tuple counterexample)"
            )
    if a.language != b.language:
        raise ValueError("structures use different languages")
    if not (rel_is_point_determining(a) and rel_is_point_determining(b)):
        return None
    if b.n != a.n + 1:
        return None
    emb = rel_induced_embedding(a, b)
    if emb is None:
        return None
    removed = (set(range(b.n)) - set(emb.image)).pop()
    return RelGapCertificate(a, b, emb, removed)


def rel_induced_substructure(a, vertices):
    """Substructure on the given vertices: tuples lying entirely inside them."""
    sel = sorted(set(vertices))
    if not sel:
        raise ValueError("an induced substructure needs at least one vertex")
    for v in sel:
        _check_vertex(a, v)
    relabel = {v: i for i, v in enumerate(sel)}
    relations = tuple(
        frozenset(
            tuple(relabel[x] for x in t) for t in rel if all(x in relabel for x in t)
        )
        for rel in a.relations
    )
    return RelStructure(a.language, len(sel), relations)


def ternary_counterexample():
    """Point-determining 3-vertex structure with one ternary tuple.

    Every 2-vertex induced substructure has two empty neighbourhoods and is
    therefore not point-determining, which is why the gap decision refuses
    languages of arity 3 and above.
    """
    lang = Language((("R", 3),))
    return RelStructure.make(lang, 3, {"R": [(0, 1, 2)]})


DIGRAPH_LANGUAGE = Language((("E", 2),))


def graph_as_structure(g):
    """Encode a simple graph as a symmetric loopless one-symbol digraph."""
    arcs = set()
    for u, v in g.edges():
        arcs.add((u, v))
        arcs.add((v, u))
    return RelStructure.make(DIGRAPH_LANGUAGE, g.n, {"E": arcs})


def structure_as_graph(a):
    """Decode a symmetric loopless binary structure back into a graph."""
    if a.language != DIGRAPH_LANGUAGE:
        raise ValueError("expected the one-symbol digraph language")
    arcs = a.rel("E")
    edges = []
    for u, v in arcs:
        if u == v:
            raise ValueError(f"loop at vertex {u} cannot decode into a graph")
        if (v, u) not in arcs:
            raise ValueError(f"arc ({u}, {v}) lacks its reverse")
        if u < v:
            edges.append((u, v))
    return Graph.from_edges(a.n, edges)


def rel_canonical_form(a):
    """Canonical label for structures: minimal relabelled relation listing."""
    sig = ";".join(f"{name}/{arity}" for name, arity in a.language.symbols)
    best = None
    for p in permutations(range(a.n)):
        key = tuple(
            tuple(sorted(tuple(p[x] for x in t) for t in rel))
            for rel in a.relations
        )
        if best is None or key < best:
            best = key
    return f"{a.n}|{sig}|{best}".encode()


def rel_is_isomorphic(a, b):
    return a.language == b.language and rel_canonical_form(a) == rel_canonical_form(b)


def parse_structure_json(text):
    """Parse the structure JSON document; symbols end up ordered by name."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("structure document must be a JSON object")
    for key in ("language", "n", "relations"):
        if key not in doc:
            raise ParseError(f"missing {key!r} field")
    lang_doc = doc["language"]
    if not isinstance(lang_doc, dict) or not lang_doc:
        raise ParseError("'language' must be a non-empty object of name -> arity")
    for name, arity in lang_doc.items():
        if not isinstance(arity, int) or arity < 1:
            raise ParseError(f"arity of {name!r} must be a positive integer")
    language = Language.make(lang_doc)
    n = doc["n"]
    if not isinstance(n, int) or n < 1:
        raise ParseError("'n' must be a positive integer")
    rels_doc = doc["relations"]
    if not isinstance(rels_doc, dict):
        raise ParseError("'relations' must be an object of name -> tuple list")
    unknown = set(rels_doc) - set(language.names())
    if unknown:
        raise ParseError(f"relations listed for unknown symbols: {sorted(unknown)}")
    rels = {}
    for name, tuples in rels_doc.items():
        arity = language.arity(name)
        out = set()
        if not isinstance(tuples, list):
            raise ParseError(f"relation {name!r} must be a list of tuples")
        for t in tuples:
            if (
                not isinstance(t, list)
                or len(t) != arity
                or not all(isinstance(x, int) for x in t)
            ):
                raise ParseError(f"relation {name!r}: bad tuple {t!r}")
            for x in t:
                if not 0 <= x < n:
                    raise ParseError(f"relation {name!r}: entry {x} out of range")
            out.add(tuple(t))
        rels[name] = out
    return RelStructure.make(language, n, rels)


def structure_to_json(a, indent=None):
    doc = {
        "language": {name: arity for name, arity in a.language.symbols},
        "n": a.n,
        "relations": {
            name: [list(t) for t in sorted(a.rel(name))] for name in a.language.names()
        },
    }
    return json.dumps(doc, sort_keys=True, indent=indent)
