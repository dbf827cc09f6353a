"""The finite-support function ring S(I, D) and its quotients."""

from .descriptors import (
    Arithmetic,
    GeometricToLimit,
    SubmoduleDescriptor,
    Uniform,
    desc_contains,
    desc_equal,
)
from .elements import FunElement
from .ring import (
    EXAMPLE_NAMES,
    FgCertificate,
    NamedExample,
    SRingQuotient,
    ann_cyclic,
    build_named_example,
    desc_fg_mod,
    desc_member,
    desc_quotient,
    jacobson_descriptor,
    lambda_cyclic_S,
    noncoherent_b,
)
from .serialize import (
    descriptor_from_json,
    descriptor_to_json,
    element_from_json,
    element_to_json,
    load_ring,
    ring_from_json,
    ring_to_json,
)

__all__ = [
    "Arithmetic",
    "EXAMPLE_NAMES",
    "FgCertificate",
    "FunElement",
    "GeometricToLimit",
    "NamedExample",
    "SRingQuotient",
    "SubmoduleDescriptor",
    "Uniform",
    "ann_cyclic",
    "build_named_example",
    "desc_contains",
    "desc_equal",
    "desc_fg_mod",
    "desc_member",
    "desc_quotient",
    "descriptor_from_json",
    "descriptor_to_json",
    "element_from_json",
    "element_to_json",
    "jacobson_descriptor",
    "lambda_cyclic_S",
    "load_ring",
    "noncoherent_b",
    "ring_from_json",
    "ring_to_json",
]
