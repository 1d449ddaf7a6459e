"""File formats: complexes (text and JSON), monomial ideals, quadrangles,
incidence data.

Text complex format: first line `n <n_vertices>`, then one facet per line as
space-separated vertex indices; `#` starts a comment and blank lines are
skipped.  The irrelevant complex (a single empty facet) is representable only
in the JSON form, as {"n_vertices": N, "facets": [[]]}.
"""

from __future__ import annotations

import json
from typing import Any

from .complexes import SimplicialComplex, from_facets
from .errors import InputError
from .lattice import PSIncidence, QuadrangleData
from .monomials import Monomial, MonomialIdeal


def parse_complex_text(text: str) -> SimplicialComplex:
    n_vertices = None
    facets = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n_vertices is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "n":
                raise InputError(f"expected header 'n <count>', got {raw!r}")
            try:
                n_vertices = int(parts[1])
            except ValueError:
                raise InputError(f"bad vertex count in header: {raw!r}") from None
            continue
        try:
            facets.append(tuple(int(tok) for tok in line.split()))
        except ValueError:
            raise InputError(f"bad facet line: {raw!r}") from None
    if n_vertices is None:
        raise InputError("missing 'n <count>' header line")
    return from_facets(n_vertices, facets)


def complex_to_text(cx: SimplicialComplex) -> str:
    lines = [f"n {cx.n_vertices}"]
    lines += [" ".join(str(v) for v in f.vertices) for f in cx.facets]
    return "\n".join(lines) + "\n"


def _require_keys(data: Any, keys: tuple[str, ...], what: str) -> None:
    if not isinstance(data, dict) or set(data) != set(keys):
        raise InputError(f"{what} object must have exactly the keys {list(keys)}")


def complex_from_json_dict(data: Any) -> SimplicialComplex:
    _require_keys(data, ("n_vertices", "facets"), "complex")
    return from_facets(data["n_vertices"], [tuple(f) for f in data["facets"]])


def complex_to_json_dict(cx: SimplicialComplex) -> dict:
    return {"n_vertices": cx.n_vertices, "facets": [list(f.vertices) for f in cx.facets]}


def parse_complex(text: str) -> SimplicialComplex:
    """Parse either format; JSON is detected by a leading brace."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad JSON: {exc}") from None
        return complex_from_json_dict(data)
    return parse_complex_text(text)


def monomial_ideal_from_json_dict(data: Any) -> MonomialIdeal:
    _require_keys(data, ("n_vars", "generators"), "monomial ideal")
    gens = tuple(Monomial(tuple(e)) for e in data["generators"])
    return MonomialIdeal(data["n_vars"], gens)


def quadrangle_from_json_dict(data: Any) -> QuadrangleData:
    _require_keys(data, ("n_vars", "monomials"), "quadrangle")
    monomials = data["monomials"]
    if not isinstance(monomials, list) or len(monomials) != 4:
        raise InputError("quadrangle needs exactly 4 exponent vectors")
    return QuadrangleData(data["n_vars"], tuple(Monomial(tuple(e)) for e in monomials))


def incidence_from_json_dict(data: Any) -> PSIncidence:
    _require_keys(data, ("quadrangles",), "incidence")
    quads = data["quadrangles"]
    if not isinstance(quads, list) or not quads:
        raise InputError("incidence needs a nonempty quadrangle list")
    rows = []
    for row in quads:
        if not isinstance(row, list) or len(row) != 4:
            raise InputError("each quadrangle must list exactly 4 triangle ids")
        rows.append(tuple(str(t) for t in row))
    return PSIncidence(tuple(rows))


def load_json(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad JSON in {path}: {exc}") from None


def load_complex(path: str) -> SimplicialComplex:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_complex(fh.read())


def dump_json(data: Any) -> str:
    """Deterministic JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2) + "\n"
