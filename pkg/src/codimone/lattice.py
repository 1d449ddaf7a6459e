"""Codimension-2 lattice data: the four-generator quadrangle analysis and the
quadrangle/triangle incidence connectivity certificate.

The quadrangle input is the last differential column of the length-3
resolution: four monomials with pairwise disjoint supports.  Signs play no
role in any computed invariant and are not stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .connectivity import Codim1Partition, ComponentSpace, codim1_partition
from .errors import InputError
from .monomials import Monomial, MonomialIdeal, MonomialPrime, minimal_primes


@dataclass(frozen=True)
class QuadrangleData:
    """Four monomial exponent vectors (positions 1..4) in n_vars variables."""

    n_vars: int
    monomials: tuple[Monomial, Monomial, Monomial, Monomial]

    def __post_init__(self) -> None:
        if len(self.monomials) != 4:
            raise InputError("quadrangle data needs exactly 4 monomials")
        for m in self.monomials:
            if m.n_vars != self.n_vars:
                raise InputError("monomial arity mismatch")


@dataclass(frozen=True)
class ValidationIssue:
    kind: str  # "constant_monomial" | "overlapping_supports"
    positions: tuple[int, ...]  # 1-based positions into the quadrangle
    variables: tuple[int, ...] = ()


@dataclass(frozen=True)
class QuadrangleValidation:
    ok: bool
    issues: tuple[ValidationIssue, ...] = ()


def validate_quadrangle(quad: QuadrangleData) -> QuadrangleValidation:
    """Check the regular-sequence certificate: nonconstant, disjoint supports."""
    issues = []
    supports = [set(m.support) for m in quad.monomials]
    for pos, supp in enumerate(supports, start=1):
        if not supp:
            issues.append(ValidationIssue("constant_monomial", (pos,)))
    for i in range(4):
        for j in range(i + 1, 4):
            shared = sorted(supports[i] & supports[j])
            if shared:
                issues.append(
                    ValidationIssue("overlapping_supports", (i + 1, j + 1), tuple(shared))
                )
    return QuadrangleValidation(not issues, tuple(issues))


@dataclass(frozen=True)
class DeficiencySupport:
    ideal: MonomialIdeal
    primes: tuple[MonomialPrime, ...]
    dims: tuple[int, ...]
    equidimensional: bool


def deficiency_support(quad: QuadrangleData) -> DeficiencySupport:
    """Support of the quotient by the four monomials: all primes have height 4."""
    validation = validate_quadrangle(quad)
    if not validation.ok:
        raise InputError(f"invalid quadrangle: {validation.issues}")
    ideal = MonomialIdeal(quad.n_vars, quad.monomials)
    primes = tuple(minimal_primes(ideal))
    dims = tuple(p.dim for p in primes)
    expected = 1
    for m in quad.monomials:
        expected *= len(m.support)
    if len(primes) != expected or any(p.height != 4 for p in primes):
        raise AssertionError("deficiency support violated the height-4 count")
    return DeficiencySupport(ideal, primes, dims, len(set(dims)) == 1)


@dataclass(frozen=True)
class NonS2TopReport:
    dim_A: int
    non_s2_dim: int
    partition: Codim1Partition
    connected: bool
    positively_graded: bool


def non_s2_top_report(quad: QuadrangleData) -> NonS2TopReport:
    """Dimension and codim-1 connectivity of the top non-S_2 locus.

    The locus has dimension dim_A - 2 and is connected in codimension 1;
    a disconnected partition here means an implementation bug, so it is
    asserted.  positively_graded records the reason the quotient has no
    nontrivial idempotents: all four monomials have positive degree.
    """
    support = deficiency_support(quad)
    dim_a = quad.n_vars - 2
    space = ComponentSpace(quad.n_vars, support.primes)
    partition = codim1_partition(space)
    connected = partition.n_blocks == 1
    assert connected, "codim-1 partition of a quadrangle support split; this is a bug"
    assert support.dims[0] == dim_a - 2
    return NonS2TopReport(
        dim_A=dim_a,
        non_s2_dim=dim_a - 2,
        partition=partition,
        connected=connected,
        positively_graded=all(not m.is_constant for m in quad.monomials),
    )


@dataclass(frozen=True)
class PSIncidence:
    """Quadrangle-to-triangle incidence lists, in homology-tree order."""

    quadrangles: tuple[tuple[str, str, str, str], ...]

    def __post_init__(self) -> None:
        if not self.quadrangles:
            raise InputError("incidence data needs at least one quadrangle")


@dataclass(frozen=True)
class PSCertificate:
    ok: bool
    n_quadrangles: int
    n_triangles: int
    spanning_tree: tuple[tuple[int, str], ...] = ()  # (quadrangle index, triangle id)
    violation: Optional[tuple[int, str]] = None  # (quadrangle index, reason)


def ps_connectivity_certificate(incidence: PSIncidence) -> PSCertificate:
    """Verify the 4-new / 2-shared-2-new growth pattern and graph connectivity.

    Quadrangle 1 must introduce four fresh triangles; every later quadrangle
    must share exactly two triangles with its predecessors and introduce
    exactly two fresh ones.  The certificate is a spanning tree of the
    bipartite quadrangle-triangle graph; the first violated constraint is
    reported with its 1-based quadrangle index.
    """
    quads = incidence.quadrangles
    seen: set[str] = set()
    tree: list[tuple[int, str]] = []
    for idx, tris in enumerate(quads, start=1):
        if len(tris) != 4 or len(set(tris)) != 4:
            return PSCertificate(False, len(quads), len(seen),
                                 violation=(idx, "quadrangle must list 4 distinct triangles"))
        shared = [t for t in tris if t in seen]
        fresh = [t for t in tris if t not in seen]
        if idx == 1:
            if len(fresh) != 4:
                return PSCertificate(False, len(quads), len(seen),
                                     violation=(idx, "root quadrangle must introduce 4 new triangles"))
            tree.extend((idx, t) for t in fresh)
        else:
            if len(shared) != 2 or len(fresh) != 2:
                return PSCertificate(
                    False, len(quads), len(seen),
                    violation=(idx, f"expected 2 shared + 2 new triangles, got "
                                    f"{len(shared)} shared + {len(fresh)} new"))
            tree.append((idx, shared[0]))
            tree.extend((idx, t) for t in fresh)
        seen.update(tris)
    # The pattern already forces connectivity; walk the tree defensively.
    reached_q: set[int] = {1}
    reached_t: set[str] = set()
    frontier = [("q", 1)]
    adjacency: dict[int, list[str]] = {i: list(t) for i, t in enumerate(quads, start=1)}
    tri_to_quads: dict[str, list[int]] = {}
    for i, tris in adjacency.items():
        for t in tris:
            tri_to_quads.setdefault(t, []).append(i)
    while frontier:
        kind, node = frontier.pop()
        if kind == "q":
            for t in adjacency[node]:
                if t not in reached_t:
                    reached_t.add(t)
                    frontier.append(("t", t))
        else:
            for q in tri_to_quads[node]:
                if q not in reached_q:
                    reached_q.add(q)
                    frontier.append(("q", q))
    if len(reached_q) != len(quads) or len(reached_t) != len(seen):
        return PSCertificate(False, len(quads), len(seen),
                             violation=(1, "incidence graph is disconnected"))
    return PSCertificate(True, len(quads), len(seen), spanning_tree=tuple(tree))
