"""Exact invariants of high-dimensional knots and their projections.

The heavy lifting happens in the compiled extension ``knotproj._core``;
this package re-exports its public surface. Matrices cross the boundary
as lists of int rows (arbitrary precision preserved), polynomials as
canonical strings such as ``"1 - t + t^2"``, and lift assignments as
strings of ``'+'``/``'-'`` characters.
"""

from ._core import (
    DEFAULT_BASE_MU,
    ParseError,
    __version__,
    adjust_to_targets,
    alexander,
    canonical_imm,
    canonical_proj,
    classify_lifts,
    connected_sum,
    dimension,
    e8_form,
    form_invariants,
    framing_of,
    hyperbolic_form,
    is_valid_seifert,
    kirby_disk_targets,
    knot_signature,
    kummer_form,
    kummer_seifert,
    lift,
    liftable,
    mirror_seifert,
    mu,
    parse_seifert,
    realizable_3knot_signature,
    realize_signature,
    render_seifert,
    singular_components,
    spin_tower,
    verify_kummer,
)

__all__ = [
    "DEFAULT_BASE_MU",
    "ParseError",
    "__version__",
    "adjust_to_targets",
    "alexander",
    "canonical_imm",
    "canonical_proj",
    "classify_lifts",
    "connected_sum",
    "dimension",
    "e8_form",
    "form_invariants",
    "framing_of",
    "hyperbolic_form",
    "is_valid_seifert",
    "kirby_disk_targets",
    "knot_signature",
    "kummer_form",
    "kummer_seifert",
    "lift",
    "liftable",
    "mirror_seifert",
    "mu",
    "parse_seifert",
    "realizable_3knot_signature",
    "realize_signature",
    "render_seifert",
    "singular_components",
    "spin_tower",
    "verify_kummer",
]
