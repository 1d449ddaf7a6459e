"""Monomials, monomial ideals, and their minimal primes.

Minimal primes of a monomial ideal are computed by support transversals: pick
one variable from each generator's support and keep the inclusion-minimal
variable sets.  Exponential in the generator count, fine at desk scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .complexes import Face, SimplicialComplex
from .errors import InputError, UnitIdealError


@dataclass(frozen=True)
class Monomial:
    """A monomial given by its exponent vector."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        e = tuple(self.exponents)
        if any(x < 0 for x in e):
            raise InputError(f"negative exponent in {e}")
        object.__setattr__(self, "exponents", e)

    @property
    def n_vars(self) -> int:
        return len(self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(j for j, e in enumerate(self.exponents) if e > 0)

    @property
    def is_constant(self) -> bool:
        return not self.support

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))


def variable(n_vars: int, j: int, power: int = 1) -> Monomial:
    exps = [0] * n_vars
    exps[j] = power
    return Monomial(tuple(exps))


@dataclass(frozen=True)
class MonomialIdeal:
    n_vars: int
    generators: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        for g in self.generators:
            if g.n_vars != self.n_vars:
                raise InputError(f"generator arity {g.n_vars} != n_vars {self.n_vars}")

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def minimalized(self) -> "MonomialIdeal":
        """Drop duplicate generators and generators divisible by another."""
        gens = sorted(set(self.generators), key=lambda m: (sum(m.exponents), m.exponents))
        kept: list[Monomial] = []
        for g in gens:
            if not any(h.divides(g) for h in kept):
                kept.append(g)
        return MonomialIdeal(self.n_vars, tuple(kept))


@dataclass(frozen=True, order=True)
class MonomialPrime:
    """A monomial prime, i.e. an ideal generated by a subset of the variables."""

    n_vars: int
    vars: tuple[int, ...]

    def __post_init__(self) -> None:
        v = tuple(sorted(set(self.vars)))
        if v and (v[0] < 0 or v[-1] >= self.n_vars):
            raise InputError(f"variable index out of range [0, {self.n_vars}): {v}")
        object.__setattr__(self, "vars", v)

    @property
    def height(self) -> int:
        return len(self.vars)

    @property
    def dim(self) -> int:
        """Dimension of the zero set V(P)."""
        return self.n_vars - len(self.vars)


def _minimalize_sets(sets: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    ordered = sorted(set(sets), key=lambda s: (len(s), sorted(s)))
    kept: list[frozenset[int]] = []
    for s in ordered:
        if not any(t <= s for t in kept):
            kept.append(s)
    return kept


def minimal_primes(ideal: MonomialIdeal) -> list[MonomialPrime]:
    """Minimal primes over a nonzero monomial ideal, sorted by (height, vars)."""
    if ideal.is_zero:
        raise InputError("minimal primes of the zero ideal are not defined here")
    gens = ideal.minimalized().generators
    if any(g.is_constant for g in gens):
        raise UnitIdealError("ideal contains the constant monomial 1 (unit ideal)")
    supports = [g.support for g in gens]
    transversals = {frozenset(pick) for pick in itertools.product(*supports)}
    minimal = _minimalize_sets(transversals)
    return sorted(MonomialPrime(ideal.n_vars, tuple(sorted(s))) for s in minimal)


def stanley_reisner_components(cx: SimplicialComplex) -> list[tuple[MonomialPrime, Face]]:
    """The irreducible components of the face ring's spectrum, one per facet.

    The facet F corresponds to the prime generated by the variables outside F;
    the component has dimension |F|.
    """
    if cx.is_void:
        raise InputError("the void complex has no components")
    out = []
    for facet in cx.facets:
        complement = tuple(v for v in range(cx.n_vertices) if v not in facet.vertices)
        out.append((MonomialPrime(cx.n_vertices, complement), facet))
    return out
