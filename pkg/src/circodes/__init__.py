"""Self-dual additive GF(4) codes from circulant graphs.

Construction C(G) from graph adjacency matrices, exact and partial
weight enumeration with bitwise kernels, Type I/II classification,
searches over circulant supports, and verification of the embedded
reference tables.
"""

from .code import (
    GraphCode,
    TypeClass,
    build,
    encode,
    from_support,
    quantum_parameters,
    type_of_by_enumeration,
    type_of_by_support,
)
from .gf4 import GF4Vector, hamming_weight, scalar_mul_omega, trace_inner_product, vec_add
from .graphs import (
    BitGraph,
    CirculantSupport,
    GraphInvariants,
    adjacency,
    invariants,
    multiplier_image,
    support_from_generators,
)
from .search import (
    SearchResult,
    exhaustive_dmax,
    iter_symmetric_supports,
    randomized_campaign,
    verify_type_gap,
)
from .tables import PaperRecord, Verdict, by_table, load_tables, verify, verify_all
from .weights import (
    Certification,
    EnumerationPlan,
    WeightReport,
    WorkCapExceeded,
    full_weight_distribution,
    low_weight_search,
    min_weight_exact,
    partial_distribution_census,
    verify_witness,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
