"""Exact orbifold Euler characteristics of graph complexes.

The pipeline: a vertex species assigns a count Q_n to each allowed
vertex valence; a truncated two-variable expansion of
exp(-(1/t) Q(sqrt(t) y)) followed by Gaussian-moment substitution
y^k -> (k-1)!! produces the all-graphs series in t; its logarithm is
the connected series whose coefficients are the Euler characteristics,
one rational number per loop order.  A brute-force enumeration oracle,
a Bernoulli-number closed form, and a log-gamma asymptotic check give
three independent verification routes.
"""

from .series import BivariatePoly, TSeries, rational_from
from .moments import build_exponent, expand_h, gaussian_moment, moment_table, substitute_moments
from .species import (
    BUILTIN_SPECIES,
    Species,
    builtin_species,
    required_max_n,
    species_from_file,
)
from .euler import EulerTable, all_graphs_series, connected_series, euler_characteristic
from .bernoulli import (
    BernoulliCheck,
    bernoulli_number,
    bernoulli_numbers,
    closed_form_table,
    verify_bernoulli,
)
from .oracle import (
    LabeledGraphSum,
    count_pairings,
    iter_pairings,
    iter_partitions_min3,
    labeled_graph_sum,
    oracle_all_graphs_coefficient,
    oracle_connected_coefficient,
    partition_weights,
    unsigned_graph_count,
)
from .analytic import (
    AsymptoticResidual,
    check_commutative_asymptotics,
    gamma_expression,
    stirling_partial_sum,
)

__version__ = "0.1.0"

__all__ = [
    "BivariatePoly",
    "TSeries",
    "rational_from",
    "gaussian_moment",
    "moment_table",
    "build_exponent",
    "expand_h",
    "substitute_moments",
    "Species",
    "BUILTIN_SPECIES",
    "builtin_species",
    "species_from_file",
    "required_max_n",
    "EulerTable",
    "all_graphs_series",
    "connected_series",
    "euler_characteristic",
    "bernoulli_number",
    "bernoulli_numbers",
    "closed_form_table",
    "verify_bernoulli",
    "BernoulliCheck",
    "iter_pairings",
    "count_pairings",
    "iter_partitions_min3",
    "partition_weights",
    "LabeledGraphSum",
    "labeled_graph_sum",
    "oracle_all_graphs_coefficient",
    "oracle_connected_coefficient",
    "unsigned_graph_count",
    "AsymptoticResidual",
    "gamma_expression",
    "stirling_partial_sum",
    "check_commutative_asymptotics",
    "__version__",
]
