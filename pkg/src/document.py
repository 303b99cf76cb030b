"""
Complex and morphism-map documents

A complex document is one compact JSON object
``{"vertices":[...],"edges":[[u,v,w],...],"cells":[{"boundary":[...],"weight":w},...]}``
in canonical order; the string "inf" encodes the infinite weight. Equal complexes
serialize to byte-identical documents.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Mapping, Union

from src.core.complex import Vertex, WeightedComplex, validate
from src.core.weights import format_weight, parse_weight
from src.exceptions import DocumentError, WeightError

logger = logging.getLogger("Document")

_KEYS = ("vertices", "edges", "cells")


def to_document(complex_: WeightedComplex) -> Dict[str, Any]:
    return {
        "vertices": list(complex_.vertices),
        "edges": [[e.u, e.v, format_weight(e.weight)] for e in complex_.edges],
        "cells": [{"boundary": list(f.boundary.vertices), "weight": f.weight} for f in complex_.cells],
    }


def serialize(complex_: WeightedComplex) -> str:
    validate(complex_).raise_if_invalid()
    return json.dumps(to_document(complex_), separators=(",", ":"), ensure_ascii=False)


def _loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON: {e.msg}", e.lineno, e.colno)


def _vertex(value: Any, path: str) -> Vertex:
    if not isinstance(value, str):
        raise DocumentError(f"{path} must be a vertex identifier string", details={"path": path})
    return value


def _weight(value: Any, path: str):
    try:
        return parse_weight(value)
    except WeightError:
        raise DocumentError(f"{path} must be a natural number or \"inf\", got {value!r}", details={"path": path})


def _list(value: Any, path: str) -> List[Any]:
    if not isinstance(value, list):
        raise DocumentError(f"{path} must be a list", details={"path": path})
    return value


def from_document(doc: Any) -> WeightedComplex:
    """Structure check and normalization; axioms are not checked here"""
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    missing = [k for k in _KEYS if k not in doc]
    if missing:
        raise DocumentError(f"missing key {missing[0]}", details={"missing": missing})
    unknown = sorted(set(doc) - set(_KEYS))
    if unknown:
        raise DocumentError(f"unknown key {unknown[0]}", details={"unknown": unknown})

    vertices = [_vertex(v, f"vertices[{i}]") for i, v in enumerate(_list(doc["vertices"], "vertices"))]
    seen = set()
    for v in vertices:
        if v in seen:
            raise DocumentError(f"duplicate vertex {v}", details={"vertex": v})
        seen.add(v)

    edges = []
    for i, raw in enumerate(_list(doc["edges"], "edges")):
        path = f"edges[{i}]"
        if not isinstance(raw, list) or len(raw) != 3:
            raise DocumentError(f"{path} must be [u, v, weight]", details={"path": path})
        edges.append((_vertex(raw[0], f"{path}[0]"), _vertex(raw[1], f"{path}[1]"), _weight(raw[2], f"{path}[2]")))

    cells = []
    for i, raw in enumerate(_list(doc["cells"], "cells")):
        path = f"cells[{i}]"
        if not isinstance(raw, dict) or set(raw) != {"boundary", "weight"}:
            raise DocumentError(f"{path} must be {{\"boundary\": [...], \"weight\": w}}", details={"path": path})
        boundary = [_vertex(v, f"{path}.boundary[{j}]") for j, v in enumerate(_list(raw["boundary"], f"{path}.boundary"))]
        cells.append((boundary, _weight(raw["weight"], f"{path}.weight")))

    return WeightedComplex.create(vertices, edges, cells)


def parse(text: str, check: bool = True) -> WeightedComplex:
    """Document text to complex; ``check`` requires every axiom (ValidationError otherwise)"""
    complex_ = from_document(_loads(text))
    if check:
        validate(complex_).raise_if_invalid()
    return complex_


def is_canonical(text: str, complex_: WeightedComplex) -> bool:
    canonical = serialize(complex_)
    return text == canonical or text == canonical + "\n"


def load_complex(path: Union[str, Path], check: bool = True) -> WeightedComplex:
    return parse(read_text(path), check)


def save_complex(path: Union[str, Path], complex_: WeightedComplex) -> None:
    write_text(path, serialize(complex_) + "\n")


def read_text(path: Union[str, Path]) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise DocumentError(f"cannot read {path}: {e.strerror}", details={"path": str(path)})


def write_text(path: Union[str, Path], text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as e:
        raise DocumentError(f"cannot write {path}: {e.strerror}", details={"path": str(path)})
    logger.debug(f"Wrote {path}")


def load_morphism_map(text: str) -> Dict[Vertex, Vertex]:
    """``{"map": {source vertex: target vertex, ...}}``"""
    doc = _loads(text)
    if not isinstance(doc, dict) or set(doc) != {"map"} or not isinstance(doc["map"], dict):
        raise DocumentError('morphism map must be {"map": {...}}')
    mapping = doc["map"]
    for k, v in mapping.items():
        _vertex(v, f"map[{k}]")
    return dict(mapping)


def dump_morphism_map(mapping: Mapping[Vertex, Vertex]) -> str:
    return json.dumps({"map": dict(sorted(mapping.items()))}, separators=(",", ":"), ensure_ascii=False)
