"""JSON documents for complexes and chain maps.

Scalars are strings in the same syntax the parsers accept ("p/q" over Q,
infix expressions in t over Q(t)), never floats, so serialization is
exact and parse(serialize(x)) == x.  A complex document carries a field
tag, the dims list, and the boundary matrices row by row (boundary i has
dims[i+1] rows of dims[i] entries).  A map document holds two complexes,
inline or by path, plus the per-degree matrices.
"""

from __future__ import annotations

import json
import os

from .chain_maps import ChainMap, make_chain_map
from .complexes import BasedChainComplex, make_complex
from .errors import (
    ParseError,
    TorsionError,
    ValidationError,
)
from .fields import FIELD_BY_NAME, QPOLY, QT, Ring


def _wrap_validation(exc: TorsionError) -> ValidationError:
    name = type(exc).__name__
    degree = getattr(exc, "degree", None)
    return ValidationError(f"{name}: {exc}", invariant=name, degree=degree)


def _parse_scalar(ring: Ring, text, locus: str):
    if not isinstance(text, str):
        raise ParseError(f"scalar must be a string, got {type(text).__name__}", locus)
    try:
        return ring.parse(text)
    except TorsionError as exc:
        raise ParseError(f"{type(exc).__name__}: {exc}", locus) from exc


def _require(cond: bool, message: str, locus: str) -> None:
    if not cond:
        raise ParseError(message, locus)


def parse_complex_document(
    doc: dict, ring: Ring | None = None, name: str = "<complex>"
) -> BasedChainComplex:
    _require(isinstance(doc, dict), "complex document must be an object", name)
    field_name = doc.get("field")
    _require(
        field_name in FIELD_BY_NAME,
        f'field must be one of {sorted(FIELD_BY_NAME)}, got {field_name!r}',
        f"{name}.field",
    )
    if ring is None:
        ring = FIELD_BY_NAME[field_name]
    elif ring is QPOLY:
        _require(
            field_name == "Q(t)",
            "polynomial input needs a Q(t) document",
            f"{name}.field",
        )
    dims = doc.get("dims")
    _require(
        isinstance(dims, list)
        and dims
        and all(isinstance(n, int) and n >= 0 for n in dims),
        "dims must be a nonempty list of nonnegative integers",
        f"{name}.dims",
    )
    boundaries = doc.get("boundaries")
    _require(isinstance(boundaries, list), "boundaries must be a list", f"{name}.boundaries")
    m = len(dims) - 1
    if len(boundaries) != m:
        raise _wrap_validation(
            ValidationError(
                f"ShapeMismatch: expected {m} boundary matrices, found {len(boundaries)}",
                invariant="ShapeMismatch",
            )
        )
    mats = []
    for i, grid in enumerate(boundaries):
        locus = f"{name}.boundaries[{i}]"
        _require(isinstance(grid, list), "boundary must be a list of rows", locus)
        rows = []
        for r, row in enumerate(grid):
            _require(isinstance(row, list), "row must be a list", f"{locus}[{r}]")
            rows.append(
                [
                    _parse_scalar(ring, x, f"{locus}[{r}][{j}]")
                    for j, x in enumerate(row)
                ]
            )
        mats.append(rows if rows else [])
    try:
        if ring is QPOLY:
            from .ufd import make_poly_complex

            padded = [
                _shape_rows(mats[i], dims[i + 1], dims[i], f"{name}.boundaries[{i}]")
                for i in range(m)
            ]
            return make_poly_complex(dims, padded)
        padded = [
            _shape_rows(mats[i], dims[i + 1], dims[i], f"{name}.boundaries[{i}]")
            for i in range(m)
        ]
        return make_complex(ring, dims, padded)
    except ValidationError:
        raise
    except TorsionError as exc:
        raise _wrap_validation(exc) from exc


def _shape_rows(rows: list, nrows: int, ncols: int, locus: str) -> list:
    if len(rows) != nrows or any(len(r) != ncols for r in rows):
        raise _wrap_validation(
            ValidationError(
                f"ShapeMismatch: boundary at {locus} is not {nrows}x{ncols}",
                invariant="ShapeMismatch",
            )
        )
    return rows


def complex_to_document(c: BasedChainComplex, comment: str | None = None) -> dict:
    field_name = "Q(t)" if c.ring in (QT, QPOLY) else "Q"
    doc: dict = {}
    if comment:
        doc["comment"] = comment
    doc["field"] = field_name
    doc["dims"] = list(c.dims)
    doc["boundaries"] = [
        [[c.ring.to_str(x) for x in row] for row in b.entries] for b in c.boundaries
    ]
    return doc


def parse_map_document(
    doc: dict,
    base_dir: str = ".",
    ring: Ring | None = None,
    name: str = "<map>",
) -> ChainMap:
    _require(isinstance(doc, dict), "map document must be an object", name)
    sides = {}
    for key in ("source", "target"):
        spec = doc.get(key)
        if isinstance(spec, str):
            sides[key] = load_complex(os.path.join(base_dir, spec), ring=ring)
        elif isinstance(spec, dict):
            sides[key] = parse_complex_document(spec, ring=ring, name=f"{name}.{key}")
        else:
            raise ParseError(
                f"{key} must be an inline complex or a path", f"{name}.{key}"
            )
    source, target = sides["source"], sides["target"]
    if source.ring is not target.ring:
        raise _wrap_validation(
            ValidationError(
                "FieldMismatch: source and target use different fields",
                invariant="FieldMismatch",
            )
        )
    grids = doc.get("matrices")
    _require(isinstance(grids, list), "matrices must be a list", f"{name}.matrices")
    mats = []
    for i, grid in enumerate(grids):
        locus = f"{name}.matrices[{i}]"
        _require(isinstance(grid, list), "matrix must be a list of rows", locus)
        rows = []
        for r, row in enumerate(grid):
            _require(isinstance(row, list), "row must be a list", f"{locus}[{r}]")
            rows.append(
                [
                    _parse_scalar(source.ring, x, f"{locus}[{r}][{j}]")
                    for j, x in enumerate(row)
                ]
            )
        mats.append(rows)
    m = max(source.length, target.length)
    if len(mats) != m + 1:
        raise _wrap_validation(
            ValidationError(
                f"ShapeMismatch: expected {m + 1} matrices, found {len(mats)}",
                invariant="ShapeMismatch",
            )
        )
    try:
        return make_chain_map(source, target, mats)
    except ValidationError:
        raise
    except TorsionError as exc:
        raise _wrap_validation(exc) from exc


def map_to_document(f: ChainMap, comment: str | None = None) -> dict:
    doc: dict = {}
    if comment:
        doc["comment"] = comment
    doc["source"] = complex_to_document(f.source)
    doc["target"] = complex_to_document(f.target)
    doc["matrices"] = [
        [[f.source.ring.to_str(x) for x in row] for row in mat.entries]
        for mat in f.mats
    ]
    return doc


def load_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise ParseError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", f"{path}:{exc.lineno}:{exc.colno}") from exc


def load_complex(path: str, ring: Ring | None = None) -> BasedChainComplex:
    return parse_complex_document(load_json(path), ring=ring, name=path)


def load_map(path: str, ring: Ring | None = None) -> ChainMap:
    return parse_map_document(
        load_json(path), base_dir=os.path.dirname(path) or ".", ring=ring, name=path
    )


def parse_documents(paths) -> tuple[list[BasedChainComplex], list[ChainMap]]:
    """Load a mix of complex and map documents, dispatching on their keys."""
    complexes = []
    maps = []
    for path in paths:
        doc = load_json(path)
        if isinstance(doc, dict) and "matrices" in doc:
            maps.append(
                parse_map_document(
                    doc, base_dir=os.path.dirname(path) or ".", name=path
                )
            )
        else:
            complexes.append(parse_complex_document(doc, name=path))
    return complexes, maps


def dump_document(doc: dict, path: str | None = None) -> str:
    text = json.dumps(doc, indent=2) + "\n"
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text
