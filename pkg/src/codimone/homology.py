"""Exact reduced simplicial homology via integer Smith normal form.

The chain complex includes the augmentation: the empty face spans C_{-1}
whenever the complex is nonvoid, so H~_{-1}(irrelevant complex) = K and all
reduced homology of the void complex vanishes.  All arithmetic is over Z with
Python integers; no floating point anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Mapping

from .complexes import Face, SimplicialComplex, all_faces
from .errors import InputError
from .fields import RATIONALS, Field


@dataclass(frozen=True)
class IntegerMatrix:
    """A sparse integer matrix; entries holds the nonzero values."""

    rows: int
    cols: int
    entries: Mapping[tuple[int, int], int]

    def entry(self, r: int, c: int) -> int:
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise InputError(f"index ({r},{c}) outside {self.rows}x{self.cols}")
        return self.entries.get((r, c), 0)

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def matmul(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise InputError("shape mismatch in matmul")
        by_row: dict[int, list[tuple[int, int]]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out: dict[tuple[int, int], int] = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, ()):
                key = (r, c)
                s = out.get(key, 0) + v * w
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return IntegerMatrix(self.rows, other.cols, out)

    def to_dense(self) -> list[list[int]]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            dense[r][c] = v
        return dense


@dataclass(frozen=True)
class SNFResult:
    """Elementary divisors d1 | d2 | ... and the rank (their count)."""

    elementary_divisors: tuple[int, ...]
    rank: int


def matrix_from_dense(dense: list[list[int]]) -> IntegerMatrix:
    rows = len(dense)
    cols = len(dense[0]) if rows else 0
    entries = {(r, c): v for r, row in enumerate(dense) for c, v in enumerate(row) if v}
    return IntegerMatrix(rows, cols, entries)


class _Sparse:
    """Mutable dict-of-rows workspace for eliminations."""

    def __init__(self, m: IntegerMatrix):
        self.row: dict[int, dict[int, int]] = {}
        self.col: dict[int, set[int]] = {}
        for (r, c), v in m.entries.items():
            self.row.setdefault(r, {})[c] = v
            self.col.setdefault(c, set()).add(r)

    def set(self, r: int, c: int, v: int) -> None:
        if v:
            self.row.setdefault(r, {})[c] = v
            self.col.setdefault(c, set()).add(r)
        else:
            rr = self.row.get(r)
            if rr and c in rr:
                del rr[c]
                if not rr:
                    del self.row[r]
                cc = self.col[c]
                cc.discard(r)
                if not cc:
                    del self.col[c]

    def get(self, r: int, c: int) -> int:
        return self.row.get(r, {}).get(c, 0)

    def add_row_multiple(self, target: int, source: int, q: int) -> None:
        """row[target] += q * row[source]"""
        if not q:
            return
        for c, v in list(self.row.get(source, {}).items()):
            self.set(target, c, self.get(target, c) + q * v)

    def add_col_multiple(self, target: int, source: int, q: int) -> None:
        """col[target] += q * col[source]"""
        if not q:
            return
        for r in list(self.col.get(source, set())):
            self.set(r, target, self.get(r, target) + q * self.get(r, source))

    def negate_row(self, r: int) -> None:
        for c, v in self.row.get(r, {}).items():
            self.row[r][c] = -v

    def pick_pivot(self) -> tuple[int, int] | None:
        """Smallest magnitude first, then least fill-in, then position."""
        best = None
        best_key = None
        for r, cols in self.row.items():
            rlen = len(cols)
            for c, v in cols.items():
                key = (abs(v) != 1, abs(v), (rlen - 1) * (len(self.col[c]) - 1), r, c)
                if best_key is None or key < best_key:
                    best_key = key
                    best = (r, c)
        return best


def smith_normal_form(m: IntegerMatrix) -> SNFResult:
    """Elementary divisors of an integer matrix, via unimodular row/column ops."""
    w = _Sparse(m)
    diagonal: list[int] = []
    while w.row:
        r, c = w.pick_pivot()
        if w.get(r, c) < 0:
            w.negate_row(r)
        # Euclid phase: shrink the pivot until it divides its row and column.
        while True:
            p = w.get(r, c)
            offender = None
            for r2 in w.col[c]:
                if r2 != r and w.get(r2, c) % p:
                    offender = ("row", r2)
                    break
            if offender is None:
                for c2, v in w.row[r].items():
                    if c2 != c and v % p:
                        offender = ("col", c2)
                        break
            if offender is None:
                break
            kind, idx = offender
            if kind == "row":
                q = w.get(idx, c) // p
                w.add_row_multiple(idx, r, -q)
                r = idx
            else:
                q = w.get(r, idx) // p
                w.add_col_multiple(idx, c, -q)
                c = idx
            if w.get(r, c) < 0:
                w.negate_row(r)
        p = w.get(r, c)
        for r2 in list(w.col[c]):
            if r2 != r:
                w.add_row_multiple(r2, r, -(w.get(r2, c) // p))
        for c2 in list(w.row[r].keys()):
            if c2 != c:
                w.add_col_multiple(c2, c, -(w.get(r, c2) // p))
        diagonal.append(p)
        w.set(r, c, 0)
    return SNFResult(tuple(_divisor_chain(diagonal)), len(diagonal))


def _divisor_chain(diagonal: list[int]) -> list[int]:
    """Normalize a diagonal to the divisibility chain via gcd/lcm exchanges."""
    ds = [abs(d) for d in diagonal]
    while True:
        ds.sort()
        changed = False
        for i in range(len(ds) - 1):
            a, b = ds[i], ds[i + 1]
            if b % a:
                g = gcd(a, b)
                ds[i], ds[i + 1] = g, a * b // g
                changed = True
        if not changed:
            return ds


def rank_over_Z(m: IntegerMatrix) -> int:
    """Rank over Z (equivalently over Q), by fraction-free elimination.

    Row rescaling and content extraction are allowed here; they change the
    divisors but not the rank.
    """
    w = _Sparse(m)
    rank = 0
    while w.row:
        r, c = w.pick_pivot()
        p = w.get(r, c)
        rank += 1
        prow = dict(w.row[r])
        for cc in prow:
            w.set(r, cc, 0)
        for r2 in list(w.col.get(c, set())):
            v2 = w.get(r2, c)
            merged = dict(w.row.get(r2, {}))
            for cc in merged:
                merged[cc] *= p
            for cc, v in prow.items():
                merged[cc] = merged.get(cc, 0) - v2 * v
            content = 0
            for v in merged.values():
                content = gcd(content, v)
                if content == 1:
                    break
            for cc in list(w.row.get(r2, {})):
                w.set(r2, cc, 0)
            if content > 1:
                for cc, v in merged.items():
                    w.set(r2, cc, v // content)
            else:
                for cc, v in merged.items():
                    w.set(r2, cc, v)
    return rank


def _faces_by_dim(cx: SimplicialComplex) -> dict[int, list[Face]]:
    by_dim: dict[int, list[Face]] = {}
    for f in all_faces(cx):
        by_dim.setdefault(f.dim, []).append(f)
    return by_dim


def boundary_matrix(cx: SimplicialComplex, i: int) -> IntegerMatrix:
    """The boundary map from i-chains to (i-1)-chains, alternating signs.

    Columns are the i-faces in sorted order, rows the (i-1)-faces; i = 0 is
    the augmentation onto the empty face.  Out-of-range degrees give empty
    matrices of the correct shape.
    """
    by_dim = _faces_by_dim(cx)
    domain = by_dim.get(i, [])
    codomain = by_dim.get(i - 1, [])
    index = {f: r for r, f in enumerate(codomain)}
    entries: dict[tuple[int, int], int] = {}
    for c, f in enumerate(domain):
        for j in range(len(f.vertices)):
            sub = Face(f.vertices[:j] + f.vertices[j + 1:])
            entries[(index[sub], c)] = (-1) ** j
    return IntegerMatrix(len(codomain), len(domain), entries)


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers over a field, indexed from -1 to the dimension."""

    field: Field
    dims: tuple[tuple[int, int], ...]

    def __getitem__(self, degree: int) -> int:
        for d, b in self.dims:
            if d == degree:
                return b
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.dims)

    @property
    def total(self) -> int:
        return sum(b for _, b in self.dims)


def _boundary_ranks(cx: SimplicialComplex, field: Field) -> tuple[dict[int, int], dict[int, list[Face]]]:
    by_dim = _faces_by_dim(cx)
    ranks: dict[int, int] = {}
    for i in by_dim:
        d = boundary_matrix(cx, i)
        if field.is_rationals:
            ranks[i] = rank_over_Z(d)
        else:
            snf = smith_normal_form(d)
            ranks[i] = sum(1 for e in snf.elementary_divisors if e % field.char)
    return ranks, by_dim


def reduced_betti(cx: SimplicialComplex, field: Field = RATIONALS) -> BettiVector:
    """Reduced Betti numbers: nullity of the boundary minus the next rank."""
    ranks, by_dim = _boundary_ranks(cx, field)
    dims = []
    for i in sorted(by_dim):
        b = len(by_dim[i]) - ranks[i] - ranks.get(i + 1, 0)
        dims.append((i, b))
    return BettiVector(field, tuple(dims))


def homology_over_Z(cx: SimplicialComplex) -> dict[int, tuple[int, tuple[int, ...]]]:
    """Per degree, the free rank and the nontrivial torsion divisors."""
    by_dim = _faces_by_dim(cx)
    snfs = {i: smith_normal_form(boundary_matrix(cx, i)) for i in by_dim}
    out: dict[int, tuple[int, tuple[int, ...]]] = {}
    for i in sorted(by_dim):
        rank_i = snfs[i].rank
        nxt = snfs.get(i + 1)
        rank_next = nxt.rank if nxt else 0
        torsion = tuple(d for d in (nxt.elementary_divisors if nxt else ()) if d > 1)
        out[i] = (len(by_dim[i]) - rank_i - rank_next, torsion)
    return out


def random_complex(rng, max_vertices: int = 8):
    """A small random complex; used by the property suites."""
    from .complexes import from_facets

    n = rng.randint(1, max_vertices)
    n_cands = rng.randint(1, 6)
    cands = []
    for _ in range(n_cands):
        size = rng.randint(1, min(n, 4))
        cands.append(tuple(sorted(rng.sample(range(n), size))))
    return from_facets(n, cands)


def random_pure_complex(rng, max_vertices: int = 8):
    """A random pure complex: all facets drawn with one fixed cardinality."""
    from .complexes import from_facets

    n = rng.randint(2, max_vertices)
    size = rng.randint(1, min(n, 4))
    count = rng.randint(1, 6)
    pool = list(itertools.combinations(range(n), size))
    picks = [pool[rng.randrange(len(pool))] for _ in range(count)]
    return from_facets(n, picks)
