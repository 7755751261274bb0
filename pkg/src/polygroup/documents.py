"""JSON documents for polytopes and group elements, with exact fraction strings."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

from .exact_geometry import Number, Polytope, PolytopeError, extreme_points, normalize_number
from .group import GroupElement


class DocumentError(ValueError):
    pass


def _parse_number(x: Any, where: str) -> Number:
    if isinstance(x, bool):
        raise DocumentError(f"{where}: malformed coordinate {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return normalize_number(Fraction(x.strip()))
        except (ValueError, ZeroDivisionError):
            raise DocumentError(f"{where}: malformed coordinate {x!r}") from None
    raise DocumentError(f"{where}: malformed coordinate {x!r} (use an integer or a 'p/q' string)")


def emit_number(x: Number):
    x = normalize_number(x)
    return x if isinstance(x, int) else f"{x.numerator}/{x.denominator}"


def parse_polytope(doc: Any, where: str = "document") -> Polytope:
    if not isinstance(doc, dict):
        raise DocumentError(f"{where}: expected an object")
    if "vertices" not in doc:
        raise DocumentError(f"{where}: missing 'vertices'")
    verts = doc["vertices"]
    if not isinstance(verts, list) or not verts:
        raise DocumentError(f"{where}.vertices: empty vertex list")
    n = doc.get("ambient_dim")
    if n is None:
        n = len(verts[0]) if isinstance(verts[0], list) else None
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DocumentError(f"{where}.ambient_dim: expected a positive integer")
    pts = []
    for i, v in enumerate(verts):
        if not isinstance(v, list):
            raise DocumentError(f"{where}.vertices[{i}]: expected a coordinate list")
        if len(v) != n:
            raise DocumentError(f"{where}.vertices[{i}]: dimension mismatch ({len(v)} != {n})")
        pts.append(tuple(_parse_number(x, f"{where}.vertices[{i}][{j}]") for j, x in enumerate(v)))
    return extreme_points(pts)


def emit_polytope(P: Polytope, name: Optional[str] = None) -> dict:
    doc: dict = {
        "ambient_dim": P.ambient_dim,
        "vertices": [[emit_number(x) for x in v] for v in P.vertices],
    }
    if name:
        doc["name"] = name
    return doc


def is_element_doc(doc: Any) -> bool:
    return isinstance(doc, dict) and "positive" in doc


def parse_element(doc: Any, where: str = "document", quotient: Optional[bool] = None) -> GroupElement:
    """An element document, or a polytope document read as P - 0."""
    if is_element_doc(doc):
        if "negative" not in doc:
            raise DocumentError(f"{where}: missing 'negative'")
        P = parse_polytope(doc["positive"], f"{where}.positive")
        Q = parse_polytope(doc["negative"], f"{where}.negative")
        if P.ambient_dim != Q.ambient_dim:
            raise DocumentError(f"{where}: positive and negative parts differ in dimension")
        q = bool(doc.get("quotient", False))
    else:
        P = parse_polytope(doc, where)
        Q = Polytope(((0,) * P.ambient_dim,))
        q = False
    if quotient is not None:
        q = q or quotient
    return GroupElement(P, Q, q)


def emit_element(x: GroupElement) -> dict:
    return {
        "positive": emit_polytope(x.positive),
        "negative": emit_polytope(x.negative),
        "quotient": x.quotient,
    }


def loads(text: str, where: str = "document") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{where}: invalid JSON at line {exc.lineno} column {exc.colno}") from None


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=None, separators=(", ", ": "))


__all__ = [
    "DocumentError",
    "PolytopeError",
    "dumps",
    "emit_element",
    "emit_number",
    "emit_polytope",
    "is_element_doc",
    "loads",
    "parse_element",
    "parse_polytope",
]
