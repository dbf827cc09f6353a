"""JSON forms of descriptors, function-ring elements and quotient rings.

Descriptor::

    {"const": <cut>,
     "tail": {"uniform": <cut>}
           | {"arithmetic": {"base": <value>, "step": <value>}}
           | {"geometric": {"limit": <rational>, "amp": <rational>}},
     "overrides": {"<index>": <cut>, ...}}

Element: ``{"default": <element>, "overrides": {"<index>": <element>}}``.
Ring file: a descriptor object with an extra ``"group"`` key.
Cuts, values and elements are strings in the valuation syntax.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from ..valuation import GroupKind, parse_cut, parse_element, parse_kind, parse_value
from .descriptors import Arithmetic, GeometricToLimit, SubmoduleDescriptor, Uniform
from .elements import FunElement
from .ring import SRingQuotient


def tail_to_json(tail) -> dict:
    if isinstance(tail, Uniform):
        return {"uniform": str(tail.cut)}
    if isinstance(tail, Arithmetic):
        return {"arithmetic": {"base": str(tail.base), "step": str(tail.step)}}
    return {"geometric": {"limit": str(tail.limit), "amp": str(tail.amp)}}


def descriptor_to_json(d: SubmoduleDescriptor) -> dict:
    return {
        "const": str(d.const),
        "tail": tail_to_json(d.tail),
        "overrides": {str(i): str(c) for i, c in d.overrides},
    }


def _tail_from_json(kind: GroupKind, obj: dict):
    if len(obj) != 1:
        raise ValueError(f"tail must have exactly one rule, got {sorted(obj)}")
    (rule, body), = obj.items()
    if rule == "uniform":
        return Uniform(parse_cut(kind, body))
    if rule == "arithmetic":
        return Arithmetic(parse_value(kind, body["base"]), parse_value(kind, body["step"]))
    if rule == "geometric":
        if kind is not GroupKind.DENSE_Q:
            raise ValueError("geometric tails need group Q")
        return GeometricToLimit(Fraction(body["limit"]), Fraction(body["amp"]))
    raise ValueError(f"unknown tail rule {rule!r}")


def descriptor_from_json(kind: GroupKind, obj: dict) -> SubmoduleDescriptor:
    overrides = {int(i): parse_cut(kind, c) for i, c in obj.get("overrides", {}).items()}
    return SubmoduleDescriptor.build(
        parse_cut(kind, obj["const"]), _tail_from_json(kind, obj["tail"]), overrides
    )


def element_to_json(f: FunElement) -> dict:
    return {"default": str(f.default), "overrides": {str(i): str(x) for i, x in f.overrides}}


def element_from_json(kind: GroupKind, obj) -> FunElement:
    """Accepts the JSON object, or a bare element string meaning ``x*1``."""
    if isinstance(obj, str):
        return FunElement.constant(parse_element(kind, obj))
    overrides = {int(i): parse_element(kind, x) for i, x in obj.get("overrides", {}).items()}
    return FunElement.build(parse_element(kind, obj["default"]), overrides)


def ring_to_json(ring: SRingQuotient) -> dict:
    return {"group": ring.kind.value, **descriptor_to_json(ring.modulus)}


def ring_from_json(obj: dict) -> SRingQuotient:
    kind = parse_kind(obj["group"])
    return SRingQuotient(kind, descriptor_from_json(kind, obj))


def load_ring(path: str | Path) -> SRingQuotient:
    return ring_from_json(json.loads(Path(path).read_text(encoding="utf-8")))
