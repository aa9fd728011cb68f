"""Instance files: JSON descriptions of finite shifts and co-finite presentations.

Field elements travel as literal strings under the field grammar, never as
native JSON numbers, so arbitrary precision survives the round trip.  Two
error layers: :class:`InstanceFormatError` for anything that fails to parse
(bad JSON, missing keys, wrong types, malformed literals) and
:class:`InstanceValidationError` for well-formed files with inconsistent
content (out-of-range phi, length mismatches, composite p).
"""

from __future__ import annotations

import json
from typing import Union

from .errors import (
    InstanceFormatError,
    InstanceValidationError,
    MalformedLiteralError,
    ZeroDenominatorError,
)
from .fields import Field, PrimeField, RationalField
from .graphs import FunctionalGraph
from .infinite import CoFinitePresentation
from .shifts import WeightedShift

Instance = Union[WeightedShift, CoFinitePresentation]


def _need(mapping: dict, key: str, kind, where: str):
    if not isinstance(mapping, dict) or key not in mapping:
        raise InstanceFormatError(f"missing key {key!r} in {where}")
    value = mapping[key]
    if kind is int and isinstance(value, bool):
        raise InstanceFormatError(f"{where}.{key} must be an integer")
    if not isinstance(value, kind):
        raise InstanceFormatError(f"{where}.{key} has the wrong type")
    return value


def parse_field(data) -> Field:
    kind = _need(data, "kind", str, "field")
    if kind == "gfp":
        p = _need(data, "p", int, "field")
        try:
            return PrimeField(p)
        except ValueError as exc:
            raise InstanceValidationError(str(exc)) from exc
    if kind == "rational":
        return RationalField()
    raise InstanceFormatError(f"unknown field kind {kind!r}")


def field_to_dict(field: Field) -> dict:
    return field.describe()


def _parse_elements(field: Field, raw, where: str) -> list:
    if not isinstance(raw, list) or not all(isinstance(v, str) for v in raw):
        raise InstanceFormatError(f"{where} must be a list of literal strings")
    out = []
    for i, text in enumerate(raw):
        try:
            out.append(field.parse(text))
        except (MalformedLiteralError, ZeroDenominatorError) as exc:
            raise InstanceFormatError(f"{where}[{i}]: {exc}") from exc
    return out


def _parse_nodes(raw, where: str) -> list[int]:
    if not isinstance(raw, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in raw
    ):
        raise InstanceFormatError(f"{where} must be a list of integers")
    return list(raw)


def parse_instance(data) -> Instance:
    """Build the in-memory object an instance dictionary describes."""
    if not isinstance(data, dict):
        raise InstanceFormatError("instance must be a JSON object")
    field = parse_field(_need(data, "field", dict, "instance"))
    shape = _need(data, "shape", dict, "instance")
    kind = _need(shape, "kind", str, "shape")
    if kind == "finite":
        n = _need(shape, "n", int, "shape")
        phi = _parse_nodes(_need(shape, "phi", list, "shape"), "shape.phi")
        weights = _parse_elements(
            field, _need(shape, "weights", list, "shape"), "shape.weights"
        )
        if n < 1:
            raise InstanceValidationError("n must be at least 1")
        if len(phi) != n or len(weights) != n:
            raise InstanceValidationError(
                f"phi and weights must both have length n={n}"
            )
        try:
            graph = FunctionalGraph(phi)
        except ValueError as exc:
            raise InstanceValidationError(str(exc)) from exc
        return WeightedShift(graph, field, weights)
    if kind == "cofinite":
        boundary = _need(shape, "B", int, "shape")
        phi_table = _parse_nodes(_need(shape, "phi_table", list, "shape"), "shape.phi_table")
        weight_table = _parse_elements(
            field, _need(shape, "weight_table", list, "shape"), "shape.weight_table"
        )
        tail_text = _need(shape, "tail_weight", str, "shape")
        try:
            tail = field.parse(tail_text)
        except (MalformedLiteralError, ZeroDenominatorError) as exc:
            raise InstanceFormatError(f"shape.tail_weight: {exc}") from exc
        try:
            return CoFinitePresentation(field, boundary, phi_table, weight_table, tail)
        except ValueError as exc:
            raise InstanceValidationError(str(exc)) from exc
    raise InstanceFormatError(f"unknown shape kind {kind!r}")


def instance_to_dict(obj: Instance) -> dict:
    """Serialize back to the file shape; the round trip is the identity."""
    if isinstance(obj, WeightedShift):
        return {
            "field": field_to_dict(obj.field),
            "shape": {
                "kind": "finite",
                "n": obj.n,
                "phi": list(obj.graph.phi),
                "weights": [str(w) for w in obj.weights],
            },
        }
    return {
        "field": field_to_dict(obj.field),
        "shape": {
            "kind": "cofinite",
            "B": obj.boundary,
            "phi_table": list(obj.phi_table),
            "weight_table": [str(w) for w in obj.weight_table],
            "tail_weight": str(obj.tail_weight),
        },
    }


def loads_instance(text: str) -> Instance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"not valid JSON: {exc}") from exc
    return parse_instance(data)


def load_instance(path) -> Instance:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise InstanceFormatError(f"cannot read {path}: {exc}") from exc
    return loads_instance(text)


def dumps_instance(obj: Instance) -> str:
    return json.dumps(instance_to_dict(obj), ensure_ascii=False, indent=2)
