"""Generalised duality pairs in the full-homomorphism order.

For a finite target family D, the obstruction family F consists of the
point-determining graphs just outside the lower set of D: each one covers
some member of the lower set.  A graph then maps fully into some target
exactly when no obstruction maps fully into it, and whether a graph lies
in the lower set reduces to a canonical-form lookup.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .enumeration import enumerate_pd_graphs
from .gaps import gap_extensions
from .graphs import (
    canonical_form,
    graph_from_canonical,
    induced_subgraph,
    is_point_determining,
    pd_quotient,
)
from .homs import induced_embedding


@dataclass(frozen=True)
class DualityPair:
    """Obstruction family, normalised targets, their lower set, and how far
    the duality biconditional has been verified (0 = not verified)."""

    frontier: tuple
    targets: tuple
    lower_set: tuple
    verified_up_to: int = 0


def lower_set(targets):
    """Every point-determining graph mapping fully into some target.

    Computed, up to isomorphism, as the point-determining induced subgraphs
    of the targets' quotients; returned canonically labelled and sorted.
    """
    targets = list(targets)
    if not targets:
        raise ValueError("need at least one target graph")
    keys = set()
    for t in targets:
        tq, _ = pd_quotient(t)
        for mask in range(1, 1 << tq.n):
            sub = induced_subgraph(tq, (i for i in range(tq.n) if (mask >> i) & 1))
            if is_point_determining(sub):
                keys.add(canonical_form(sub))
    return [graph_from_canonical(k) for k in sorted(keys)]


def duality_frontier(targets):
    """Build the duality pair for the given targets.

    Targets are first replaced by their point-determining quotients.  The
    frontier collects every one-vertex point-determining extension of a
    lower-set member that leaves the lower set, deduplicated and sorted by
    canonical form.
    """
    lower = lower_set(targets)
    lower_keys = {canonical_form(g) for g in lower}
    frontier_keys = set()
    for g in lower:
        for h in gap_extensions(g):
            k = canonical_form(h)
            if k not in lower_keys:
                frontier_keys.add(k)
    norm_keys = sorted({canonical_form(pd_quotient(t)[0]) for t in targets})
    return DualityPair(
        frontier=tuple(graph_from_canonical(k) for k in sorted(frontier_keys)),
        targets=tuple(graph_from_canonical(k) for k in norm_keys),
        lower_set=tuple(lower),
    )


def check_duality(frontier, targets, n_max):
    """First point-determining graph violating the duality biconditional.

    Sweeps all point-determining classes up to n_max vertices in canonical
    order and checks, for each, that some frontier member maps fully into
    it exactly when it maps fully into no target.  Returns None on success.
    Restricting the sweep to point-determining representatives is sound
    because both sides of the biconditional only depend on the quotient.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    lower_keys = {canonical_form(g) for g in lower_set(targets)}
    fronts = [pd_quotient(f)[0] for f in frontier]
    for n in range(1, n_max + 1):
        for g in enumerate_pd_graphs(n).members:
            obstructed = any(induced_embedding(f, g) is not None for f in fronts)
            maps_to_target = canonical_form(g) in lower_keys
            if obstructed != (not maps_to_target):
                return g
    return None


def verify(pair, n_max):
    """Run check_duality over the pair and record the verified bound."""
    bad = check_duality(pair.frontier, pair.targets, n_max)
    if bad is not None:
        return pair, bad
    return replace(pair, verified_up_to=n_max), None
