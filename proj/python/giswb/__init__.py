"""Workbench for generalized inverse semigroups.

Thin Python face over the C++ core: Cayley-table semigroups, band and
regularity classification, the gamma/lambda/rho congruences, presheaf and
Yamada constructions, Madhavan partial-function semigroups, and the
exhaustive verification suites.
"""

import json as _json

from ._gis import (
    GisError,
    Semigroup,
    band_to_presheaf,
    build_m_rho,
    classify,
    congruence_classes,
    enumerate_semigroups,
    find_embedding,
    find_isomorphism,
    green,
    idempotents,
    inverses_of,
    kappa_decompose,
    load_semigroup,
    natural_order,
    parse_sgp,
    quotient,
    roundtrip_band,
    run_suite_json,
    subdirect_embed,
    suite_names,
    write_sgp,
    yamada_form,
)

__all__ = [
    "GisError",
    "Semigroup",
    "band_to_presheaf",
    "build_m_rho",
    "classify",
    "congruence_classes",
    "enumerate_semigroups",
    "find_embedding",
    "find_isomorphism",
    "green",
    "idempotents",
    "inverses_of",
    "kappa_decompose",
    "load_semigroup",
    "natural_order",
    "parse_sgp",
    "quotient",
    "roundtrip_band",
    "run_suite",
    "run_suite_json",
    "subdirect_embed",
    "suite_names",
    "write_sgp",
    "yamada_form",
]


def run_suite(name, max_order=4):
    """Runs a named verification suite and returns its report as a dict."""
    return _json.loads(run_suite_json(name, max_order))
