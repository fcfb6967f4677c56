"""Labelings over {0,1,2}, label-class partitions, and n-attack validation.

A labeling is valid for attack number n when every set S of j <= n vertices
labeled 0 has at least j vertices labeled 2 in its open neighborhood.  For
n=1 this is the classical Roman domination condition; for n=2 there is a
linear-time characterization (see ``validate``), and for larger n we fall
back to subset enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, iter_bits

LABELS = (0, 1, 2)


@dataclass(frozen=True)
class Labeling:
    """Total assignment of {0,1,2} to the vertices of one graph."""

    graph: Graph
    labels: tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != self.graph.order:
            raise ValueError(
                f"labeling has {len(self.labels)} entries for order {self.graph.order}")
        for lab in self.labels:
            if lab not in LABELS:
                raise ValueError(f"label out of range: {lab}")

    @property
    def weight(self) -> int:
        return sum(self.labels)

    def label_mask(self, value: int) -> int:
        m = 0
        for v, lab in enumerate(self.labels):
            if lab == value:
                m |= 1 << v
        return m


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of an n-attack check; carries a re-checkable witness on failure."""

    valid: bool
    attack_n: int
    witness: tuple[int, ...] | None = None


def weight(labeling: Labeling) -> int:
    return labeling.weight


def partition(labeling: Labeling) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """Split the vertex set into (V0, V1, V2) by label."""
    parts = ([], [], [])
    for v, lab in enumerate(labeling.labels):
        parts[lab].append(v)
    return tuple(frozenset(p) for p in parts)


def epn_set(labeling: Labeling) -> frozenset[int]:
    """Vertices labeled 0 adjacent to exactly one vertex labeled 2."""
    two_mask = labeling.label_mask(2)
    out = []
    for v, lab in enumerate(labeling.labels):
        if lab == 0 and (labeling.graph.adjacency_mask(v) & two_mask).bit_count() == 1:
            out.append(v)
    return frozenset(out)


def public_set(labeling: Labeling) -> frozenset[int]:
    """Vertices labeled 0 adjacent to two or more vertices labeled 2."""
    two_mask = labeling.label_mask(2)
    out = []
    for v, lab in enumerate(labeling.labels):
        if lab == 0 and (labeling.graph.adjacency_mask(v) & two_mask).bit_count() >= 2:
            out.append(v)
    return frozenset(out)


def _pair_witness(adj, zeros, two_mask) -> tuple[int, int] | None:
    """Lexicographically first pair of 0-vertices sharing one unique 2-neighbor."""
    groups: dict[int, list[int]] = {}
    for v in zeros:
        t = adj[v] & two_mask
        if t and t & (t - 1) == 0:
            groups.setdefault(t, []).append(v)
    best = None
    for members in groups.values():
        if len(members) >= 2 and (best is None or members[0] < best[0]):
            best = (members[0], members[1])
    return best


def validate(labeling: Labeling, attack_n: int = 2) -> ValidationReport:
    """Check the n-attack condition; report the first violating subset if any.

    The n=2 check uses the pair-grouping characterization: the labeling is
    valid iff every 0 has a 2-neighbor and no vertex labeled 2 is the unique
    2-neighbor of two different 0-vertices.  Witnesses match the ones subset
    enumeration would return (subsets ordered by size, then lexicographically).
    """
    if attack_n < 1:
        raise ValueError("attack_n must be >= 1")
    g = labeling.graph
    adj = [g.adjacency_mask(v) for v in range(g.order)]
    two_mask = labeling.label_mask(2)
    zeros = [v for v, lab in enumerate(labeling.labels) if lab == 0]

    for v in zeros:
        if adj[v] & two_mask == 0:
            return ValidationReport(False, attack_n, (v,))
    if attack_n >= 2:
        pair = _pair_witness(adj, zeros, two_mask)
        if pair is not None:
            return ValidationReport(False, attack_n, pair)
    for j in range(3, attack_n + 1):
        hit = _first_violation(adj, zeros, two_mask, j)
        if hit is not None:
            return ValidationReport(False, attack_n, hit)
    return ValidationReport(True, attack_n)


def _first_violation(adj, zeros, two_mask, j) -> tuple[int, ...] | None:
    for subset in combinations(zeros, j):
        smask = 0
        nmask = 0
        for v in subset:
            smask |= 1 << v
            nmask |= adj[v]
        if (nmask & ~smask & two_mask).bit_count() < j:
            return subset
    return None


def validate_by_enumeration(labeling: Labeling, attack_n: int = 2) -> ValidationReport:
    """Subset-enumeration form of ``validate``; the reference the fast path
    must agree with."""
    if attack_n < 1:
        raise ValueError("attack_n must be >= 1")
    g = labeling.graph
    adj = [g.adjacency_mask(v) for v in range(g.order)]
    two_mask = labeling.label_mask(2)
    zeros = [v for v, lab in enumerate(labeling.labels) if lab == 0]
    for j in range(1, attack_n + 1):
        hit = _first_violation(adj, zeros, two_mask, j)
        if hit is not None:
            return ValidationReport(False, attack_n, hit)
    return ValidationReport(True, attack_n)
