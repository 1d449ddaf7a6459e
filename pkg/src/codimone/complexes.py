"""Abstract simplicial complexes: faces, links, products, and a built-in corpus.

A complex is stored by its inclusion-maximal facets over a fixed vertex index
space 0..n_vertices-1.  Two degenerate values are distinct: the void complex
(no facets at all) and the irrelevant complex (single empty facet).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError


@dataclass(frozen=True, order=True)
class Face:
    """A face: a strictly increasing tuple of vertex indices. May be empty."""

    vertices: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        v = tuple(self.vertices)
        if any(b <= a for a, b in zip(v, v[1:])):
            raise InputError(f"face vertices must be strictly increasing: {v}")
        object.__setattr__(self, "vertices", v)

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "Face":
        return cls(tuple(sorted(set(vertices))))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def issubset(self, other: "Face") -> bool:
        return set(self.vertices) <= set(other.vertices)

    def union(self, other: "Face") -> "Face":
        return Face.of(set(self.vertices) | set(other.vertices))

    def intersection(self, other: "Face") -> "Face":
        return Face.of(set(self.vertices) & set(other.vertices))

    def difference(self, other: "Face") -> "Face":
        return Face.of(set(self.vertices) - set(other.vertices))

    def isdisjoint(self, other: "Face") -> bool:
        return set(self.vertices).isdisjoint(other.vertices)


EMPTY_FACE = Face(())


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by its maximal faces.

    n_vertices fixes the ambient index space; isolated indices that appear in
    no facet are allowed (they are ghost vertices of the polynomial ring).
    """

    n_vertices: int
    facets: tuple[Face, ...]

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == (EMPTY_FACE,)

    @property
    def dim(self) -> int:
        """Max facet dimension; -1 for the irrelevant complex, -2 for void."""
        if self.is_void:
            return -2
        return max(f.dim for f in self.facets)

    @property
    def is_pure(self) -> bool:
        if self.is_void:
            return True
        return len({f.dim for f in self.facets}) == 1

    def __contains__(self, face: Face) -> bool:
        return any(face.issubset(f) for f in self.facets)

    def f_vector(self) -> dict[int, int]:
        """Face counts by dimension, including f_{-1} = 1 when nonvoid."""
        counts: dict[int, int] = {}
        for f in all_faces(self):
            counts[f.dim] = counts.get(f.dim, 0) + 1
        return counts

    def euler_characteristic_reduced(self) -> int:
        return sum((-1) ** d * c for d, c in self.f_vector().items())


def from_facets(n_vertices: int, candidate_facets: Iterable[Face | Iterable[int]]) -> SimplicialComplex:
    """Build a complex from candidate facets, dropping duplicates and non-maximal ones."""
    if n_vertices < 0:
        raise InputError(f"negative vertex count: {n_vertices}")
    cands = []
    for c in candidate_facets:
        f = c if isinstance(c, Face) else Face.of(c)
        if f.vertices and (f.vertices[0] < 0 or f.vertices[-1] >= n_vertices):
            raise InputError(f"vertex index out of range [0, {n_vertices}): {f.vertices}")
        cands.append(f)
    cands = sorted(set(cands), key=lambda f: (-len(f), f.vertices))
    maximal: list[Face] = []
    for f in cands:
        if not any(f.issubset(g) for g in maximal):
            maximal.append(f)
    return SimplicialComplex(n_vertices, tuple(sorted(maximal, key=lambda f: f.vertices)))


def all_faces(cx: SimplicialComplex) -> list[Face]:
    """Every face of the complex, ordered by (cardinality, vertex tuple).

    Includes the empty face whenever the complex is nonvoid.
    """
    seen: set[Face] = set()
    for facet in cx.facets:
        for k in range(len(facet) + 1):
            for combo in itertools.combinations(facet.vertices, k):
                seen.add(Face(combo))
    return sorted(seen, key=lambda f: (len(f), f.vertices))


def link(cx: SimplicialComplex, face: Face) -> SimplicialComplex:
    """The link of a face: all G disjoint from it with G ∪ face in the complex.

    Kept on the same vertex index space.  link(cx, empty) == cx; the link of
    a facet is the irrelevant complex.
    """
    if face not in cx:
        raise InputError(f"face {face.vertices} is not in the complex")
    return from_facets(cx.n_vertices, [f.difference(face) for f in cx.facets if face.issubset(f)])


def _staircase_paths(fa: tuple[int, ...], fb: tuple[int, ...]):
    """Monotone lattice paths through the grid fa x fb, as index pairs."""
    p, q = len(fa) - 1, len(fb) - 1
    for ups in itertools.combinations(range(p + q), p):
        i = j = 0
        path = [(fa[0], fb[0])]
        for step in range(p + q):
            if step in ups:
                i += 1
            else:
                j += 1
            path.append((fa[i], fb[j]))
        yield path


def product(cx: SimplicialComplex, cy: SimplicialComplex) -> SimplicialComplex:
    """Staircase triangulation of the product of the underlying spaces.

    The vertex (a, b) gets the row-major index a * cy.n_vertices + b.  For
    each facet pair the top simplices are the monotone staircase chains of
    the grid, ordered by the vertex indices.
    """
    if cx.is_void or cy.is_void:
        raise InputError("product of a void complex is undefined")
    nb = cy.n_vertices
    facets: list[Face] = []
    for fa in cx.facets:
        for fb in cy.facets:
            if not fa.vertices or not fb.vertices:
                facets.append(EMPTY_FACE)
                continue
            for path in _staircase_paths(fa.vertices, fb.vertices):
                facets.append(Face(tuple(a * nb + b for a, b in path)))
    return from_facets(cx.n_vertices * nb, facets)


def disjoint_union(cx: SimplicialComplex, cy: SimplicialComplex) -> SimplicialComplex:
    """Concatenate the two complexes on re-indexed vertices."""
    shift = cx.n_vertices
    facets = list(cx.facets) + [Face(tuple(v + shift for v in f)) for f in cy.facets]
    return from_facets(shift + cy.n_vertices, facets)


def wedge(cx: SimplicialComplex, cy: SimplicialComplex, va: int, vb: int) -> SimplicialComplex:
    """Glue the two complexes by identifying vertex vb of the second with va."""
    if not (0 <= va < cx.n_vertices):
        raise InputError(f"wedge vertex {va} out of range for first complex")
    if not (0 <= vb < cy.n_vertices):
        raise InputError(f"wedge vertex {vb} out of range for second complex")
    shift = cx.n_vertices

    def remap(v: int) -> int:
        if v == vb:
            return va
        return shift + v - (1 if v > vb else 0)

    facets = list(cx.facets) + [Face.of(remap(v) for v in f) for f in cy.facets]
    return from_facets(shift + cy.n_vertices - 1, facets)


def cone(cx: SimplicialComplex) -> SimplicialComplex:
    """Add a fresh apex vertex to every facet."""
    if cx.is_void:
        raise InputError("cone over the void complex is undefined")
    apex = cx.n_vertices
    return from_facets(apex + 1, [Face(f.vertices + (apex,)) for f in cx.facets])


def top_subcomplex(cx: SimplicialComplex) -> SimplicialComplex:
    """The subcomplex generated by the facets of maximal dimension."""
    if cx.is_void:
        raise InputError("void complex has no top-dimensional part")
    d = cx.dim
    return from_facets(cx.n_vertices, [f for f in cx.facets if f.dim == d])


# The 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
_TORUS_7_FACETS = tuple(
    tuple(sorted((i, (i + 1) % 7, (i + 3) % 7))) for i in range(7)
) + tuple(tuple(sorted((i, (i + 2) % 7, (i + 3) % 7))) for i in range(7))

# The 6-vertex real projective plane (antipodal quotient of the icosahedron).
_RP2_6_FACETS = (
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
    (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5),
)


def boundary_simplex(n: int) -> SimplicialComplex:
    """The boundary of the n-simplex: a triangulated (n-1)-sphere on n+1 vertices."""
    if n < 1:
        raise InputError(f"boundary_simplex needs n >= 1, got {n}")
    return from_facets(n + 1, itertools.combinations(range(n + 1), n))


def cycle(m: int) -> SimplicialComplex:
    """The m-gon: a triangulated circle on m vertices."""
    if m < 3:
        raise InputError(f"cycle needs m >= 3, got {m}")
    return from_facets(m, [(i, (i + 1) % m) for i in range(m)])


def torus_7() -> SimplicialComplex:
    return from_facets(7, _TORUS_7_FACETS)


def rp2_6() -> SimplicialComplex:
    return from_facets(6, _RP2_6_FACETS)


def sphere_product(k: int) -> SimplicialComplex:
    """Staircase triangulation of the product of two (k-1)-spheres."""
    if k < 2:
        raise InputError(f"sphere_product needs k >= 2, got {k}")
    return product(boundary_simplex(k), boundary_simplex(k))


_BUILTINS = {
    "boundary_simplex": (boundary_simplex, 1),
    "cycle": (cycle, 1),
    "rp2_6": (rp2_6, 0),
    "torus_7": (torus_7, 0),
    "sphere_product": (sphere_product, 1),
}


def builtin(name: str, *params: int) -> SimplicialComplex:
    """Look up a named complex from the built-in corpus."""
    if name not in _BUILTINS:
        raise InputError(f"unknown builtin {name!r}; known: {sorted(_BUILTINS)}")
    fn, arity = _BUILTINS[name]
    if len(params) != arity:
        raise InputError(f"builtin {name!r} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def builtin_names() -> list[str]:
    return sorted(_BUILTINS)


def corpus() -> list[tuple[str, SimplicialComplex]]:
    """The fixed example corpus used by the property suites."""
    entries = [
        ("boundary_simplex(2)", boundary_simplex(2)),
        ("boundary_simplex(3)", boundary_simplex(3)),
        ("boundary_simplex(4)", boundary_simplex(4)),
        ("cycle(4)", cycle(4)),
        ("cycle(5)", cycle(5)),
        ("cycle(6)", cycle(6)),
        ("rp2_6", rp2_6()),
        ("torus_7", torus_7()),
        ("sphere_product(2)", sphere_product(2)),
    ]
    return entries
