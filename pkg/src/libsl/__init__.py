"""libsl: count, enumerate and verify finite linearly ordered involutive
bisemilattices via their representation as sums over chains of finite
Boolean algebras."""

from .algebras import (
    AtomMap,
    AxiomReport,
    BoolComponent,
    LinearDirectSystem,
    PlonkaAlgebra,
    TabulatedAlgebra,
    algebra_dot,
    algebra_json_obj,
    check_ibsl_axioms,
    enumerate_systems,
    is_linearly_ordered,
    positive_elements,
    transition_apply,
)
from .counting import (
    CountReport,
    count_report,
    fine_spectrum_table,
    libsl_count,
    libsl_count_fast,
    pair_count,
    shape_count,
)
from .oracle import (
    CapExceededError,
    KernelSignature,
    ValidationReport,
    are_isomorphic_bruteforce,
    cross_validate,
    iso_classes_of_shape,
    iso_classes_total,
    kernel_signature,
)
from .partitions import (
    BinSequence,
    SeqForest,
    SeqNode,
    branches,
    division_map,
    forest_dot,
    forest_lines,
    gen_forest,
    gen_seq,
    iter_branches,
    presentation,
)
from .shapes import (
    Shape,
    all_shapes,
    distinct_orderings,
    multinomial,
    positive_part,
    shapes_count,
    shapes_of,
)

__version__ = "0.1.0"

__all__ = [
    "AtomMap",
    "AxiomReport",
    "BinSequence",
    "BoolComponent",
    "CapExceededError",
    "CountReport",
    "KernelSignature",
    "LinearDirectSystem",
    "PlonkaAlgebra",
    "SeqForest",
    "SeqNode",
    "Shape",
    "TabulatedAlgebra",
    "ValidationReport",
    "algebra_dot",
    "algebra_json_obj",
    "all_shapes",
    "are_isomorphic_bruteforce",
    "branches",
    "check_ibsl_axioms",
    "count_report",
    "cross_validate",
    "distinct_orderings",
    "division_map",
    "enumerate_systems",
    "fine_spectrum_table",
    "forest_dot",
    "forest_lines",
    "gen_forest",
    "gen_seq",
    "is_linearly_ordered",
    "iso_classes_of_shape",
    "iso_classes_total",
    "iter_branches",
    "kernel_signature",
    "libsl_count",
    "libsl_count_fast",
    "multinomial",
    "pair_count",
    "positive_elements",
    "positive_part",
    "presentation",
    "shape_count",
    "shapes_count",
    "shapes_of",
    "transition_apply",
]
