"""Connectedness in codimension 1 on spaces of monomial-prime components.

Two components are chained when their intersection has codimension at most 1
in the whole space; the partition into chain classes drives the predicted
splitting of the canonical module and of the S_2-ification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .complexes import Face, SimplicialComplex, top_subcomplex
from .errors import InputError
from .fields import RATIONALS, Field
from .homology import reduced_betti
from .monomials import MonomialPrime, stanley_reisner_components
from .serre import _require_nonvoid


@dataclass(frozen=True)
class ComponentSpace:
    """A union of coordinate-subspace components inside affine n-space."""

    n_vars: int
    components: tuple[MonomialPrime, ...]

    def __post_init__(self) -> None:
        if not self.components:
            raise InputError("a component space needs at least one component")
        for p in self.components:
            if p.n_vars != self.n_vars:
                raise InputError("component arity mismatch")

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(p.dim for p in self.components)

    @property
    def space_dim(self) -> int:
        return max(self.dims)

    @property
    def equidimensional(self) -> bool:
        return len(set(self.dims)) == 1


@dataclass(frozen=True)
class Codim1Partition:
    """Blocks of component indices chained through codimension <= 1 overlaps."""

    blocks: tuple[tuple[int, ...], ...]
    adjacency: tuple[tuple[int, int, int], ...]  # (i, j, dim of intersection)
    space_dim: int
    equidimensional: bool

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)


def codim1_partition(space: ComponentSpace) -> Codim1Partition:
    """Join components whose pairwise intersection has codimension <= 1."""
    comps = space.components
    n = len(comps)
    space_dim = space.space_dim
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            union_vars = set(comps[i].vars) | set(comps[j].vars)
            meet_dim = space.n_vars - len(union_vars)
            if space_dim - meet_dim <= 1:
                edges.append((i, j, meet_dim))
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    blocks = tuple(sorted((tuple(sorted(g)) for g in groups.values()), key=lambda b: b[0]))
    return Codim1Partition(blocks, tuple(edges), space_dim, space.equidimensional)


def complex_codim1(cx: SimplicialComplex) -> Codim1Partition:
    """The codim-1 partition of the face ring's components (one per facet).

    For a pure complex this is the facet-ridge chain partition: two facets
    are adjacent exactly when they share a ridge.
    """
    _require_nonvoid(cx)
    primes = tuple(p for p, _ in stanley_reisner_components(cx))
    return codim1_partition(ComponentSpace(cx.n_vertices, primes))


@dataclass(frozen=True)
class SummandReport:
    """Predicted indecomposable summand count of the canonical module."""

    r: int
    blocks: tuple[tuple[Face, ...], ...]
    degree0_check: int
    partition: Codim1Partition


def summand_report(cx: SimplicialComplex, field: Field = RATIONALS) -> SummandReport:
    """Count codim-1 components of the top-dimensional part.

    degree0_check carries the top reduced Betti number of the top part (the
    degree-0 dimension of the top local cohomology row) for cross-validation:
    on disjoint unions of orientable closed manifolds it equals r.
    """
    _require_nonvoid(cx)
    top = top_subcomplex(cx)
    partition = complex_codim1(top)
    facets = top.facets
    blocks = tuple(tuple(facets[i] for i in block) for block in partition.blocks)
    degree0 = reduced_betti(top, field)[top.dim]
    return SummandReport(partition.n_blocks, blocks, degree0, partition)


@dataclass(frozen=True)
class HochsterHunekeReport:
    """The three equivalent predictions tied to codim-1 connectedness."""

    r: int
    connected_in_codim1: bool
    canonical_module_indecomposable: bool
    s2ification_connected: bool
    equidimensional: bool


def hochster_huneke_report(cx: SimplicialComplex, field: Field = RATIONALS) -> HochsterHunekeReport:
    report = summand_report(cx, field)
    connected = report.r == 1
    return HochsterHunekeReport(
        r=report.r,
        connected_in_codim1=connected,
        canonical_module_indecomposable=connected,
        s2ification_connected=connected,
        equidimensional=report.partition.equidimensional,
    )
