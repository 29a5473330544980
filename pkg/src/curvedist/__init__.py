"""curvedist: curve-complex distance for filling pairs of curves.

Decides whether two filling simple closed curves on a closed
orientable surface of genus >= 2 are at distance 2, 3, or >= 4 in the
curve complex, working from the ladder representation of the pair.
Also ships the minimal-intersection search pipeline: weight
constraints from an arc template's dual graph, exhaustive weight
enumeration, boundary-gluing search, and distance classification of
every resulting pair.
"""

from ._kernels import backend_name
from .circuits import Circuit, DualGraph, dual_graph, elementary_circuits
from .distance import (
    CandidatePair,
    DistanceResult,
    candidate_ladder,
    candidate_report,
    distance,
    evaluate_candidate,
)
from .errors import (
    CircuitLimitError,
    CurveDistError,
    DisjointPairError,
    GenusTooSmallError,
    InfeasibleError,
    InputError,
    InternalError,
    LadderError,
    MultiCurveError,
    TemplateError,
)
from .faces import (
    Face,
    FaceSet,
    face_vector,
    faces,
    genus,
    reduce_bigons,
)
from .gluing import GluingResult, enumerate_gluings, single_curve_gluings
from .ilp import (
    ArcClass,
    ConstraintSystem,
    build_constraints,
    enumerate_solutions,
    minimize,
)
from .ladder import (
    BetaTraversal,
    CharacteristicMatrix,
    Ladder,
    beta_components,
    characteristic_matrix,
    ladder_from_matrix,
    ladders_isomorphic,
    parse_ladder,
    transpose,
)
from .template import (
    ArcTemplate,
    CatalogRecord,
    ExpandedConfiguration,
    builtin_template,
    distance4_weights,
    expand,
    load_template_file,
    pipeline,
    template_constraints,
)

__version__ = "0.1.0"

__all__ = [
    "ArcClass",
    "ArcTemplate",
    "BetaTraversal",
    "CandidatePair",
    "CatalogRecord",
    "CharacteristicMatrix",
    "Circuit",
    "CircuitLimitError",
    "ConstraintSystem",
    "CurveDistError",
    "DisjointPairError",
    "DistanceResult",
    "DualGraph",
    "ExpandedConfiguration",
    "Face",
    "FaceSet",
    "GenusTooSmallError",
    "GluingResult",
    "InfeasibleError",
    "InputError",
    "InternalError",
    "Ladder",
    "LadderError",
    "MultiCurveError",
    "TemplateError",
    "backend_name",
    "beta_components",
    "build_constraints",
    "builtin_template",
    "candidate_ladder",
    "candidate_report",
    "characteristic_matrix",
    "distance",
    "distance4_weights",
    "dual_graph",
    "elementary_circuits",
    "enumerate_gluings",
    "enumerate_solutions",
    "evaluate_candidate",
    "expand",
    "face_vector",
    "faces",
    "genus",
    "ladder_from_matrix",
    "ladders_isomorphic",
    "load_template_file",
    "minimize",
    "parse_ladder",
    "pipeline",
    "reduce_bigons",
    "single_curve_gluings",
    "template_constraints",
    "transpose",
]
