"""Full-homomorphism decisions and witnesses.

A full homomorphism preserves edges and non-edges alike.  Between
point-determining graphs its existence coincides with induced-subgraph
containment, which is what :func:`find_full_hom` exploits: reduce both
sides to their point-determining quotients, search for an induced
embedding there, and lift the answer back.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, Mapping, canonical_form, is_point_determining, pd_quotient


@dataclass(frozen=True)
class FullHomWitness:
    """A verified full homomorphism; kind is 'embedding' when injective."""

    mapping: Mapping
    kind: str


def is_full_hom(g, h, f):
    """True iff f maps edges to edges and non-edges to non-edges.

    Two non-adjacent vertices may share an image (the shared image has no
    loop, so the non-edge survives); two adjacent ones may not.
    """
    if f.n_source != g.n or f.n_target != h.n:
        raise ValueError("mapping endpoints do not match the given graphs")
    gm, hm = g.masks, h.masks
    img = f.image
    for u in range(g.n):
        row = gm[u]
        fu = img[u]
        for v in range(u + 1, g.n):
            if ((row >> v) & 1) != ((hm[fu] >> img[v]) & 1):
                return False
    return True


def induced_embedding(g, h):
    """Lexicographically first injective map realising g induced inside h.

    Source vertices are assigned in index order and candidate targets tried
    in index order, so the witness is reproducible.  The degree bounds only
    prune; they never change which witness comes first.
    """
    if g.n > h.n:
        return None
    gm, hm = g.masks, h.masks
    gdeg = [len(a) for a in g.adj]
    hdeg = [len(a) for a in h.adj]
    assign = []
    used = [False] * h.n

    def place(k):
        if k == g.n:
            return True
        need = gdeg[k]
        row = gm[k]
        for t in range(h.n):
            if used[t]:
                continue
            if hdeg[t] < need or h.n - 1 - hdeg[t] < g.n - 1 - need:
                continue
            if any(((row >> i) & 1) != ((hm[t] >> assign[i]) & 1) for i in range(k)):
                continue
            used[t] = True
            assign.append(t)
            if place(k + 1):
                return True
            used[t] = False
            assign.pop()
        return False

    if not place(0):
        return None
    return Mapping(g.n, h.n, tuple(assign))


def find_full_hom(g, h):
    """Witness of a full homomorphism g -> h, or None when there is none.

    The returned witness is the quotient map of g, followed by an induced
    embedding between the two quotients, followed by the inclusion of h's
    quotient back into h (each quotient vertex is represented by its
    lowest-index preimage).
    """
    gq, gmap = pd_quotient(g)
    hq, hmap = pd_quotient(h)
    emb = induced_embedding(gq, hq)
    if emb is None:
        return None
    section = [None] * hq.n
    for v in range(h.n):
        x = hmap(v)
        if section[x] is None:
            section[x] = v
    image = tuple(section[emb(gmap(v))] for v in range(g.n))
    mapping = Mapping(g.n, h.n, image)
    kind = "embedding" if mapping.is_injective() else "general"
    return FullHomWitness(mapping, kind)


def is_f_core(g):
    """True iff g is minimal in its full-homomorphism equivalence class."""
    return is_point_determining(g)


def fhom_equivalent(g, h):
    """True iff full homomorphisms exist both ways (equal quotients up to iso)."""
    return canonical_form(pd_quotient(g)[0]) == canonical_form(pd_quotient(h)[0])
