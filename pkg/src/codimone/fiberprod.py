"""Symbolic local cohomology bookkeeping for the fiber-product family.

The family glues two copies of a sphere-product face ring along a length-2
regular sequence.  Its local cohomology rows mix finite dimensions with two
opaque infinite-dimensional atoms per level k (the top module T_k and its
J-torsion ann_J_T_k) and, at k = 3, unresolved extensions.  The tables are
transcribed constants; the machine-checked content is their internal long
exact sequence consistency and the grounding of the finite rows in actual
triangulation homology.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from typing import Optional

from .complexes import sphere_product
from .errors import InputError
from .fields import RATIONALS, Field
from .homology import reduced_betti
from .serre import max_Sr


def t_atom(k: int) -> str:
    return f"T_{k}"


def ann_j_atom(k: int) -> str:
    return f"ann_J_T_{k}"


@dataclass(frozen=True)
class SymDim:
    """A symbolic dimension: finite part, opaque atoms, optional extension.

    The extension marker records an unresolved short exact sequence
    (sub, quotient) with the total left unsplit.  A value is finite exactly
    when it has no atoms and no extension marker.
    """

    finite: int = 0
    atoms: tuple[tuple[str, int], ...] = ()
    extension: Optional[tuple["SymDim", "SymDim"]] = None

    @classmethod
    def fin(cls, n: int) -> "SymDim":
        return cls(finite=n)

    @classmethod
    def atom(cls, label: str, multiplicity: int = 1) -> "SymDim":
        return cls(atoms=((label, multiplicity),))

    @classmethod
    def ext(cls, sub: "SymDim", quotient: "SymDim") -> "SymDim":
        return cls(extension=(sub, quotient))

    @property
    def is_zero(self) -> bool:
        return self.finite == 0 and not self.atoms and self.extension is None

    @property
    def is_finite(self) -> bool:
        return not self.atoms and self.extension is None

    def __add__(self, other: "SymDim") -> "SymDim":
        if self.extension is not None or other.extension is not None:
            raise InputError("extension markers do not add componentwise")
        merged: dict[str, int] = dict(self.atoms)
        for label, mult in other.atoms:
            merged[label] = merged.get(label, 0) + mult
        return SymDim(self.finite + other.finite, tuple(sorted(merged.items())))

    def scaled(self, factor: int) -> "SymDim":
        if self.extension is not None:
            raise InputError("extension markers do not scale")
        return SymDim(self.finite * factor,
                      tuple((label, mult * factor) for label, mult in self.atoms))

    def totals(self) -> tuple[int, dict[str, int]]:
        """Collapse to (finite total, atom totals), folding any extension in."""
        fin = self.finite
        atoms: dict[str, int] = {}
        for label, mult in self.atoms:
            atoms[label] = atoms.get(label, 0) + mult
        if self.extension is not None:
            for part in self.extension:
                f, a = part.totals()
                fin += f
                for label, mult in a.items():
                    atoms[label] = atoms.get(label, 0) + mult
        return fin, atoms

    def to_json(self):
        if self.extension is not None:
            sub, quot = self.extension
            return {"extension": [sub.to_json(), quot.to_json()]}
        if not self.atoms:
            return {"finite": self.finite}
        out: dict = {"atoms": dict(self.atoms)}
        if self.finite:
            out["finite"] = self.finite
        return out


ZERO = SymDim()


@dataclass(frozen=True)
class LCProfile:
    """Local cohomology rows of one ring in the family, by cohomological degree."""

    ring: str  # 'R', 'B', 'C', or 'A'
    k: int
    rows: tuple[tuple[int, SymDim], ...]

    def row(self, i: int) -> SymDim:
        for degree, value in self.rows:
            if degree == i:
                return value
        return ZERO

    @property
    def max_degree(self) -> int:
        return max(d for d, _ in self.rows)

    def to_json(self) -> dict:
        return {
            "ring": self.ring,
            "k": self.k,
            "rows": {str(d): v.to_json() for d, v in self.rows},
        }


def table_R(k: int) -> LCProfile:
    """One sphere-product factor: K^2 in degree k, the atom T_k on top."""
    if k < 2:
        raise InputError(f"table_R needs k >= 2, got {k}")
    rows = ((k, SymDim.fin(2)), (2 * k - 1, SymDim.atom(t_atom(k))))
    return LCProfile("R", k, rows)


def table_B(k: int) -> LCProfile:
    """The doubled factor: every row of table_R twice."""
    base = table_R(k)
    return LCProfile("B", k, tuple((d, v.scaled(2)) for d, v in base.rows))


def table_C(k: int) -> LCProfile:
    """The quotient by the regular sequence; k = 3 keeps an extension row."""
    if k < 3:
        raise InputError(f"table_C needs k >= 3, got {k}")
    if k == 3:
        rows = (
            (1, SymDim.fin(2)),
            (2, SymDim.fin(4)),
            (3, SymDim.ext(SymDim.fin(2), SymDim.atom(ann_j_atom(3)))),
        )
    else:
        rows = (
            (k - 2, SymDim.fin(2)),
            (k - 1, SymDim.fin(4)),
            (k, SymDim.fin(2)),
            (2 * k - 3, SymDim.atom(ann_j_atom(k))),
        )
    return LCProfile("C", k, rows)


def table_A(k: int) -> LCProfile:
    """The fiber product itself; k = 3 keeps an extension row."""
    if k < 3:
        raise InputError(f"table_A needs k >= 3, got {k}")
    if k == 3:
        rows = (
            (2, SymDim.fin(2)),
            (3, SymDim.ext(SymDim.fin(4), SymDim.fin(2))),
            (4, SymDim.atom(ann_j_atom(3))),
            (5, SymDim.atom(t_atom(3), 2)),
        )
    else:
        rows = (
            (k - 1, SymDim.fin(2)),
            (k, SymDim.fin(6)),
            (2 * k - 2, SymDim.atom(ann_j_atom(k))),
            (2 * k - 1, SymDim.atom(t_atom(k), 2)),
        )
    return LCProfile("A", k, rows)


@dataclass(frozen=True)
class LESWindow:
    """A maximal run of nonzero terms between zero entries of the sequence."""

    degrees: tuple[int, ...]  # degree of each term in the run
    rings: tuple[str, ...]
    finite_sum: int
    atom_sums: tuple[tuple[str, int], ...]

    @property
    def consistent(self) -> bool:
        return self.finite_sum == 0 and all(m == 0 for _, m in self.atom_sums)


@dataclass(frozen=True)
class LESReport:
    k: int
    ok: bool
    windows: tuple[LESWindow, ...]

    @property
    def failures(self) -> tuple[LESWindow, ...]:
        return tuple(w for w in self.windows if not w.consistent)


def les_consistency(a: LCProfile, b: LCProfile, c: LCProfile) -> LESReport:
    """Check the long exact sequence of the gluing square for consistency.

    The sequence runs H^i(A) -> H^i(B) -> H^i(C) -> H^{i+1}(A) -> ...; each
    maximal run of nonzero terms bounded by zeros must have alternating sum
    zero, computed with finite parts numerically, atoms per label, and
    extensions folded to their totals.
    """
    top = max(a.max_degree, b.max_degree, c.max_degree) + 1
    terms: list[tuple[int, str, SymDim]] = []
    for i in range(0, top + 1):
        terms.append((i, "A", a.row(i)))
        terms.append((i, "B", b.row(i)))
        terms.append((i, "C", c.row(i)))
    windows: list[LESWindow] = []
    run: list[tuple[int, str, SymDim]] = []

    def close_run() -> None:
        if not run:
            return
        fin = 0
        atoms: dict[str, int] = {}
        for position, (_, _, value) in enumerate(run):
            sign = 1 if position % 2 == 0 else -1
            f, a_tot = value.totals()
            fin += sign * f
            for label, mult in a_tot.items():
                atoms[label] = atoms.get(label, 0) + sign * mult
        windows.append(LESWindow(
            degrees=tuple(d for d, _, _ in run),
            rings=tuple(rg for _, rg, _ in run),
            finite_sum=fin,
            atom_sums=tuple(sorted(atoms.items())),
        ))
        run.clear()

    for degree, ring, value in terms:
        if value.is_zero:
            close_run()
        else:
            run.append((degree, ring, value))
    close_run()
    return LESReport(a.k, all(w.consistent for w in windows), tuple(windows))


def verify_les(k: int) -> LESReport:
    if k < 3:
        raise InputError(f"verify_les needs k >= 3, got {k}")
    return les_consistency(table_A(k), table_B(k), table_C(k))


_EXPECTED_DESK_SCALE = (2, 3)


def verify_kunneth(k: int, field: Field = RATIONALS) -> bool:
    """Ground the finite table rows in the actual sphere-product triangulation.

    The reduced Betti numbers must be 2 in degree k-1, 1 in degree 2k-2, and
    zero elsewhere.
    """
    if k not in _EXPECTED_DESK_SCALE:
        raise InputError(f"verify_kunneth runs at desk scale k in {_EXPECTED_DESK_SCALE}")
    betti = reduced_betti(sphere_product(k), field)
    expected = {k - 1: 2, 2 * k - 2: 1}
    return all(b == expected.get(d, 0) for d, b in betti.dims)


def verify_Sk(k: int, field: Field = RATIONALS) -> bool:
    """The sphere-product face ring satisfies S_k and nothing stronger."""
    if k not in _EXPECTED_DESK_SCALE:
        raise InputError(f"verify_Sk runs at desk scale k in {_EXPECTED_DESK_SCALE}")
    level = max_Sr(sphere_product(k), field)
    return not level.cohen_macaulay and level.r_max == k
