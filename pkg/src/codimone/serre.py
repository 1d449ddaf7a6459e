"""Serre condition checking and local cohomology tables for face rings.

The face ring satisfies S_r exactly when every face F has
H~_i(link F) = 0 for all i < min(r-1, dim link F).  Local cohomology is
tabulated through the link homology of faces: the table entry at
(cohomological degree i, face G) is dim H~_{i-|G|-1}(link G).  Conventions:
the irrelevant complex has dimension -1 and H~_{-1} = K, so facets feed the
table row at their cardinality and never constrain the S_r quantifier.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Optional

from .complexes import EMPTY_FACE, Face, SimplicialComplex, all_faces, link
from .errors import InputError
from .fields import RATIONALS, Field
from .homology import BettiVector, reduced_betti


def _require_nonvoid(cx: SimplicialComplex) -> None:
    if cx.is_void:
        raise InputError("operation undefined on the void complex")


@lru_cache(maxsize=32)
def _link_profiles(cx: SimplicialComplex, field: Field) -> tuple[tuple[Face, int, BettiVector], ...]:
    """Per face (ordered by cardinality then vertices): link dim and link Betti."""
    out = []
    for face in all_faces(cx):
        lk = link(cx, face)
        out.append((face, lk.dim, reduced_betti(lk, field)))
    return tuple(out)


@dataclass(frozen=True)
class SerreReport:
    r_checked: int
    holds: bool
    witness: Optional[tuple[Face, int]] = None


def check_Sr(cx: SimplicialComplex, r: int, field: Field = RATIONALS) -> SerreReport:
    """Check S_r; on failure return the first witness in (|F|, F, i) order."""
    _require_nonvoid(cx)
    if r < 1:
        raise InputError(f"S_r needs r >= 1, got {r}")
    for face, link_dim, betti in _link_profiles(cx, field):
        for i in range(-1, min(r - 1, link_dim)):
            if betti[i]:
                return SerreReport(r, False, (face, i))
    return SerreReport(r, True)


@dataclass(frozen=True)
class SerreLevel:
    """Largest r with S_r, or the Cohen-Macaulay flag when unbounded."""

    cohen_macaulay: bool
    r_max: Optional[int]


def max_Sr(cx: SimplicialComplex, field: Field = RATIONALS) -> SerreLevel:
    _require_nonvoid(cx)
    best: Optional[int] = None
    for _, link_dim, betti in _link_profiles(cx, field):
        for i in range(-1, link_dim):
            if betti[i]:
                cap = i + 1
                if best is None or cap < best:
                    best = cap
                break
    return SerreLevel(best is None, best)


def is_CM_reisner(cx: SimplicialComplex, field: Field = RATIONALS) -> bool:
    """Reisner's criterion: every link is homology-free below its dimension."""
    return max_Sr(cx, field).cohen_macaulay


@dataclass(frozen=True)
class HochsterTable:
    """Nonzero entries (i, G) -> dim H~_{i-|G|-1}(link G) for all faces G."""

    field: Field
    complex_dim: int
    entries: tuple[tuple[int, Face, int], ...]

    def entry(self, i: int, face: Face) -> int:
        for j, g, h in self.entries:
            if j == i and g == face:
                return h
        return 0

    def row(self, i: int) -> dict[Face, int]:
        return {g: h for j, g, h in self.entries if j == i}

    def degree0(self, i: int) -> int:
        """The coarse degree-0 dimension of row i (the empty-face entry)."""
        return self.entry(i, EMPTY_FACE)

    def row_is_zero(self, i: int) -> bool:
        return all(j != i for j, _, _ in self.entries)

    @property
    def rows_nonzero(self) -> tuple[int, ...]:
        return tuple(sorted({j for j, _, _ in self.entries}))


def hochster_table(cx: SimplicialComplex, field: Field = RATIONALS) -> HochsterTable:
    _require_nonvoid(cx)
    dim = cx.dim
    entries = []
    for face, _, betti in _link_profiles(cx, field):
        for i in range(0, dim + 2):
            h = betti[i - len(face) - 1]
            if h:
                entries.append((i, face, h))
    entries.sort(key=lambda t: (t[0], len(t[1]), t[1].vertices))
    return HochsterTable(field, dim, tuple(entries))


def depth(cx: SimplicialComplex, field: Field = RATIONALS) -> int:
    """Least cohomological degree with a nonzero table row.

    Equals dim + 1 exactly when the face ring is Cohen-Macaulay.
    """
    table = hochster_table(cx, field)
    return min(table.rows_nonzero)


@dataclass(frozen=True)
class GradedHilbert:
    """Hilbert data of one local cohomology module, face by face.

    A face G with coefficient h contributes h * prod_{j in G} t^-1/(1 - t^-1)
    to the Z-graded Hilbert series; the empty face sits in degree 0.  With
    graded_dual set, degrees are read reversed (canonical module convention).
    """

    field: Field
    cohomological_degree: int
    coefficients: tuple[tuple[Face, int], ...]
    graded_dual: bool = False

    def coefficient(self, face: Face) -> int:
        for g, h in self.coefficients:
            if g == face:
                return h
        return 0

    def dimension_in_degree(self, degree: int) -> int:
        d = -degree if self.graded_dual else degree
        total = 0
        for face, h in self.coefficients:
            g = len(face)
            if g == 0:
                if d == 0:
                    total += h
            elif d <= -g:
                total += h * comb(-d - 1, g - 1)
        return total

    @property
    def is_zero(self) -> bool:
        return not self.coefficients


def lc_hilbert(cx: SimplicialComplex, i: int, field: Field = RATIONALS) -> GradedHilbert:
    """Hilbert data of the i-th local cohomology of the face ring."""
    _require_nonvoid(cx)
    if not (0 <= i <= cx.dim + 1):
        raise InputError(f"cohomological degree {i} outside 0..{cx.dim + 1}")
    row = hochster_table(cx, field).row(i)
    coeffs = tuple(sorted(row.items(), key=lambda t: (len(t[0]), t[0].vertices)))
    return GradedHilbert(field, i, coeffs)


def canonical_hilbert(cx: SimplicialComplex, field: Field = RATIONALS) -> GradedHilbert:
    """Hilbert data of the canonical module: the top row, degrees reversed."""
    _require_nonvoid(cx)
    top = lc_hilbert(cx, cx.dim + 1, field)
    return GradedHilbert(field, top.cohomological_degree, top.coefficients, graded_dual=True)
