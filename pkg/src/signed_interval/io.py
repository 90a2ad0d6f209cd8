"""Text and JSON formats used by the command line.

Graph text: first non-comment line is ``n``, then one ``u v`` arc per line
(0-indexed, ``u u`` for a loop).  ``#`` starts a comment.  Matrix text: one
row of ``0``/``1`` characters per line.  Rationals in JSON are strings
``"p/q"`` or integer strings.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .biarc import BiArcModel
from .exceptions import GraphInputError
from .graph import Digraph
from .interval_models import CoTTModel, SignedIntervalModel, ThresholdToleranceModel
from .matrix import BinaryMatrix
from .ordering import VertexOrdering
from .rays import RayModel


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_graph(text: str) -> Digraph:
    lines = list(_content_lines(text))
    if not lines:
        raise GraphInputError("graph file is empty")
    lineno, first = lines[0]
    try:
        n = int(first)
    except ValueError:
        raise GraphInputError(f"line {lineno}: expected vertex count, got {first!r}") from None
    if n < 0:
        raise GraphInputError(f"line {lineno}: negative vertex count")
    arcs = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphInputError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphInputError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"line {lineno}: arc ({u}, {v}) outside 0..{n - 1}")
        arcs.append((u, v))
    return Digraph(n, arcs)


def format_graph(h: Digraph) -> str:
    return "".join([f"{h.n}\n"] + [f"{u} {v}\n" for u, v in h.arcs])


def read_graph(path: str) -> Digraph:
    with open(path, newline="") as fh:
        return parse_graph(fh.read())


def parse_matrix(text: str) -> BinaryMatrix:
    rows = []
    for lineno, line in _content_lines(text):
        if set(line) - {"0", "1"}:
            raise GraphInputError(f"line {lineno}: matrix rows must contain only 0 and 1")
        rows.append([int(c) for c in line])
    return BinaryMatrix(rows)


def read_matrix(path: str) -> BinaryMatrix:
    with open(path, newline="") as fh:
        return parse_matrix(fh.read())


def format_matrix(m: BinaryMatrix) -> str:
    return "".join("".join(map(str, row)) + "\n" for row in m.rows)


def rational(value) -> Fraction:
    if isinstance(value, bool):
        raise GraphInputError(f"not a rational: {value!r}")
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError):
        raise GraphInputError(f"not a rational: {value!r}") from None


def rational_str(value: Fraction) -> str:
    return str(Fraction(value))


def _rationals(data: dict, key: str, n: int) -> list[Fraction]:
    values = data.get(key)
    if not isinstance(values, list) or len(values) != n:
        raise GraphInputError(f"model field {key!r} must be a list of {n} rationals")
    return [rational(v) for v in values]


# -- model JSON -----------------------------------------------------------------------


def signed_to_json(model: SignedIntervalModel) -> dict:
    return {"n": model.n, "x": [rational_str(v) for v in model.x],
            "y": [rational_str(v) for v in model.y], "z": [rational_str(v) for v in model.z]}


def cott_to_json(model: CoTTModel) -> dict:
    return {"n": model.n, "x": [rational_str(v) for v in model.x], "y": [rational_str(v) for v in model.y]}


def tt_to_json(model: ThresholdToleranceModel) -> dict:
    return {"n": model.n, "w": [rational_str(v) for v in model.w], "t": [rational_str(v) for v in model.t]}


def _model_n(data) -> int:
    if not isinstance(data, dict) or not isinstance(data.get("n"), int):
        raise GraphInputError("model JSON must be an object with integer field 'n'")
    return data["n"]


def signed_from_json(data: dict) -> SignedIntervalModel:
    n = _model_n(data)
    return SignedIntervalModel(_rationals(data, "x", n), _rationals(data, "y", n), _rationals(data, "z", n))


def cott_from_json(data: dict) -> CoTTModel:
    n = _model_n(data)
    return CoTTModel(_rationals(data, "x", n), _rationals(data, "y", n))


def biarc_to_json(model: BiArcModel) -> list:
    return [{"I": [rational_str(p) for p in i], "J": [rational_str(p) for p in j]}
            for i, j in zip(model.I, model.J)]


def biarc_from_json(data) -> BiArcModel:
    if not isinstance(data, list):
        raise GraphInputError("bi-arc JSON must be a list of {'I': [ccw, cw], 'J': [ccw, cw]}")
    try:
        I = [tuple(rational(p) for p in entry["I"]) for entry in data]
        J = [tuple(rational(p) for p in entry["J"]) for entry in data]
    except (KeyError, TypeError):
        raise GraphInputError("every bi-arc entry needs 'I' and 'J' endpoint pairs") from None
    if any(len(a) != 2 for a in I + J):
        raise GraphInputError("every arc needs exactly two endpoints")
    return BiArcModel(I, J)


def rays_to_json(model: RayModel) -> dict:
    return {
        "A": [{"v": a, "P": [rational_str(c) for c in p]} for a, p in model.P.items()],
        "B": [{"v": b, "Q": [rational_str(c) for c in q]} for b, q in model.Q.items()],
    }


def rays_from_json(data: dict) -> RayModel:
    """Entries may omit ``"v"``; vertices are then numbered ``A`` first, then ``B``."""
    if not isinstance(data, dict):
        raise GraphInputError("ray JSON must be an object with 'A' and 'B' lists")
    A, B = data.get("A", []), data.get("B", [])
    try:
        P = {entry.get("v", i): tuple(rational(c) for c in entry["P"]) for i, entry in enumerate(A)}
        Q = {entry.get("v", len(A) + i): tuple(rational(c) for c in entry["Q"]) for i, entry in enumerate(B)}
    except (KeyError, TypeError, AttributeError):
        raise GraphInputError("ray entries need 'P' (part A) or 'Q' (part B) coordinate pairs") from None
    return RayModel(P, Q)


def ordering_to_json(ordering: VertexOrdering) -> list:
    return list(ordering.order)


def ordering_from_json(data) -> VertexOrdering:
    if not isinstance(data, list) or not all(isinstance(v, int) for v in data):
        raise GraphInputError("ordering JSON must be an array of vertex indices")
    return VertexOrdering(data)


def lists_from_json(data: Any, n: int) -> list[set]:
    """Lists object ``{"u": [images...]}``; vertices without an entry keep every image (``None``)."""
    if not isinstance(data, dict):
        raise GraphInputError("lists JSON must be an object mapping vertex to array")
    out: list = [None] * n
    for key, images in data.items():
        try:
            u = int(key)
        except ValueError:
            raise GraphInputError(f"list key {key!r} is not a vertex index") from None
        if not 0 <= u < n:
            raise GraphInputError(f"list key {u} outside 0..{n - 1}")
        if not isinstance(images, list):
            raise GraphInputError(f"list for vertex {u} must be an array")
        out[u] = set(images)
    return out


def dumps(payload: Any, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(payload, indent=2, sort_keys=True)
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))
