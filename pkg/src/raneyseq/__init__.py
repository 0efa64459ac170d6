"""Threshold sequences, k-ary tree tuples and extended Motzkin paths,
with exact Raney/Fuss-Catalan counting and cross-verified bijections."""

from .ballot import BallotWord, from_ballot, is_k_ballot_isolated, to_ballot
from .errors import (
    BoundViolationError,
    BudgetExceededError,
    EmptyTupleError,
    HeightExceedsLimitError,
    InvalidParameterError,
    MalformedWordError,
    NotIncreasingError,
    RaneyseqError,
    UnreachableLabelError,
)
from .exactmath import (
    binomial,
    catalan,
    fuss_catalan,
    fuss_catalan_rec,
    motzkin,
    raney,
    raney_convolution,
)
from .paths import (
    ExtMotzkinPath,
    enumerate_paths,
    is_classic_motzkin,
    path_of,
    render_ascii,
    sequence_of_path,
)
from .threshold import (
    ThresholdParams,
    ThresholdSequence,
    count,
    count_proper,
    cut_index,
    enumerate_sequences,
    is_proper,
    shift,
    validate,
)
from .trees import (
    KaryTree,
    TreeTuple,
    build_from_internal_labels,
    enumerate_trees,
    enumerate_tuples,
    forest_of,
    internal_labels,
    sequence_of_tuple,
    to_dot,
    trivial,
    tuple_of,
)

__version__ = "0.1.0"
