"""Monic polynomials and their root multisets as metric spaces.

The coefficient map and the root map are mutually inverse homeomorphisms
once roots are compared as unordered multisets by the bottleneck distance.
"""

from .core import (
    ComplexTuple,
    MatchingResult,
    MonicPolynomial,
    RootMultiset,
    multiset_metric,
    multiset_metric_naive,
    permute,
    poly_metric,
    project,
    sup_metric,
    zero_multiset,
)
from .ordering import (
    DiscontinuityWitness,
    OrderKind,
    discontinuity_witness,
    lex_compare,
    mod_arg_compare,
    order_tuple,
)
from .paths import RootTrajectory, TrackingError, TuplePath, connect_in_D, track
from .perturbation import (
    BoundCertificate,
    BoundName,
    ClusterStructure,
    OstrowskiData,
    RSData,
    certify,
    cluster_structure,
    disk_counts,
    ostrowski,
    rahman_schmeisser,
)
from .rootfinder import ConvergenceError, SolveReport, SolverConfig, cauchy_bound, roots_of, solve
from .vieta import SymmetricValues, expand, symmetric_values

__version__ = "0.1.0"
