"""Exact reduction theory and geodesic coding for binary quadratic forms."""

from .errors import (
    QFError,
    InvalidInput,
    SquareDiscriminant,
    NotIndefinite,
    NotPositiveDefinite,
    InvalidDiscriminant,
    SingularMatrix,
    NotPrime,
    EvenLevel,
    NotReduced,
    NotNReduced,
    NotNearlyReduced,
    CuspProximal,
    BasePointElliptic,
    IncompatibleRadicands,
    NotNormalisable,
    IterationCap,
    Unsupported,
    NormPlusOne,
)
from .exactnum import (
    QuadValue,
    int_sqrt_exact,
    quad_arith,
    quad_floor,
    quad_sign,
)
from .forms import (
    CycleStep,
    Form,
    Mat,
    S,
    T,
    act,
    discriminant,
    inner_product,
    primitive_part,
    translation_apply,
)
from .geometry import (
    Geodesic,
    QuadPoint,
    geodesic_of,
    hyp_distance,
    meets_F_interior,
    tip,
)
from .reduction import (
    ReductionResult,
    def_reduce,
    indef_reduce,
)
from .cycles import (
    Cycle,
    cycle,
)
from .pell import (
    automorph,
    automorph_sqrt,
    fundamental_unit,
    pell_fundamental,
    regular_path_decomposition,
)
from .leveln import (
    LevelContext,
    make_context,
    n_cycle,
    n_reduce,
)
from .serialize import (
    parse_cycle,
    serialize_cycle,
)

__all__ = [
    "QFError",
    "InvalidInput",
    "SquareDiscriminant",
    "NotIndefinite",
    "NotPositiveDefinite",
    "InvalidDiscriminant",
    "SingularMatrix",
    "NotPrime",
    "EvenLevel",
    "NotReduced",
    "NotNReduced",
    "NotNearlyReduced",
    "CuspProximal",
    "BasePointElliptic",
    "IncompatibleRadicands",
    "NotNormalisable",
    "IterationCap",
    "Unsupported",
    "NormPlusOne",
    "QuadValue",
    "int_sqrt_exact",
    "quad_arith",
    "quad_floor",
    "quad_sign",
    "CycleStep",
    "Form",
    "Mat",
    "S",
    "T",
    "act",
    "discriminant",
    "inner_product",
    "primitive_part",
    "translation_apply",
    "Geodesic",
    "QuadPoint",
    "geodesic_of",
    "hyp_distance",
    "meets_F_interior",
    "tip",
    "ReductionResult",
    "def_reduce",
    "indef_reduce",
    "Cycle",
    "cycle",
    "automorph",
    "automorph_sqrt",
    "fundamental_unit",
    "pell_fundamental",
    "regular_path_decomposition",
    "LevelContext",
    "make_context",
    "n_cycle",
    "n_reduce",
    "parse_cycle",
    "serialize_cycle",
]

__version__ = "0.1.0"
