"""Permanental ideals of Hankel matrices.

Polynomials are strings such as ``"x1*x3 + x2^2"``; ideals are lists of them.
"""

from ._core import (
    FieldError,
    ParseError,
    classify_embedded,
    closed_form_gb,
    colon,
    components,
    default_grid,
    groebner_basis,
    ideals_equal,
    intersect,
    is_groebner,
    member,
    normal_form,
    permanent_generators,
    radical_member,
    run_cli,
    saturate,
    subpermanents,
    verify,
)

__all__ = [
    "FieldError",
    "ParseError",
    "classify_embedded",
    "closed_form_gb",
    "colon",
    "components",
    "default_grid",
    "groebner_basis",
    "ideals_equal",
    "intersect",
    "is_groebner",
    "member",
    "normal_form",
    "permanent_generators",
    "radical_member",
    "run_cli",
    "saturate",
    "subpermanents",
    "verify",
]
