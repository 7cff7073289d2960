"""Self-organizing lists, request-sequence taxonomy and closed-form MTF costs."""

from ._backend import BACKEND
from .core_list import (
    AccessStep,
    AccessTrace,
    Algorithm,
    CostModel,
    ListState,
    RequestSequence,
    access_positions,
    apply_algorithm,
    find_position,
    serve,
    total_cost,
)
from .errors import *  # noqa: F401,F403
from .predictors import (
    BlockRepetitionSpec,
    CostPrediction,
    Kind,
    Source,
    Status,
    VerificationReport,
    bounds_type3,
    bounds_type4,
    decompose_blocks,
    expand_blocks,
    predict_for_blocks,
    predict_type1_best,
    predict_type2_worst,
    predict_type4,
    predict_uniform_blocks,
    predict_varying_blocks,
    to_partial,
    verify,
)
from .taxonomy import (
    Group,
    Klass,
    SequenceClass,
    TypeTag,
    class_size,
    classify,
    enumerate_class,
    generate,
    parse_class,
)

__version__ = "0.1.0"
