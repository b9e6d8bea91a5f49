"""Hit problem calculations for GF(2) polynomial algebras.

The package answers questions about which polynomials in k variables are
reachable by Steenrod squares from lower degrees, and what is left over.
``cohit`` and ``is_hit`` are the main entry points; ``verify`` holds the
fixture checkers behind the command line tool.
"""

from .gf2 import CapacityError, column_cap
from .monomials import (
    alpha,
    beta,
    compare,
    degree,
    epsilon_matrix,
    format_monomial,
    format_tau,
    in_lower_tau_span,
    is_spike,
    lex_less,
    minimal_spike,
    monomial_of_matrix,
    monomials_in_degree,
    parse_monomial,
    parse_tau,
    poly_in_lower_tau_span,
    sigma,
    spikes_of_degree,
    tau,
)
from .solver import (
    HitReport,
    catalog_inadmissible,
    cohit,
    delta_matches,
    is_hit,
    kameko_check,
    qr_split,
    solve,
    strictly_inadmissible,
    survivor_data,
)
from .steenrod import (
    ZERO,
    hit_generator_images,
    kameko_down,
    kameko_phi,
    poly,
    poly_add,
    poly_mul,
    sq,
    sq_power,
)
from .verify import (
    FixtureError,
    parse_polynomial,
    parse_relation,
    parse_relation_file,
    verify_basis,
    verify_relation,
    verify_table,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "FixtureError",
    "HitReport",
    "ZERO",
    "alpha",
    "beta",
    "catalog_inadmissible",
    "cohit",
    "column_cap",
    "compare",
    "degree",
    "delta_matches",
    "epsilon_matrix",
    "format_monomial",
    "format_tau",
    "hit_generator_images",
    "in_lower_tau_span",
    "is_hit",
    "is_spike",
    "kameko_check",
    "kameko_down",
    "kameko_phi",
    "lex_less",
    "minimal_spike",
    "monomial_of_matrix",
    "monomials_in_degree",
    "parse_monomial",
    "parse_polynomial",
    "parse_relation",
    "parse_relation_file",
    "parse_tau",
    "poly",
    "poly_add",
    "poly_in_lower_tau_span",
    "poly_mul",
    "qr_split",
    "sigma",
    "solve",
    "spikes_of_degree",
    "sq",
    "sq_power",
    "strictly_inadmissible",
    "survivor_data",
    "tau",
    "verify_basis",
    "verify_relation",
    "verify_table",
]
