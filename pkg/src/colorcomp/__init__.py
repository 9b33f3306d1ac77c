"""Exact counting of colored integer compositions and the Invert transform family."""
from .bellpoly import (
    SparseMultiPoly,
    bell_complete,
    bell_partial,
    composition_polynomial,
    evaluate,
    partial_derivative,
)
from .compositions import (
    BLACK,
    ColoredComposition,
    CountBundle,
    EnumerationCapExceeded,
    blacktie_count,
    blacktie_count_t5,
    blacktie_count_t6,
    breakpoints_total,
    count_bundle,
    count_multinomial,
    count_recurrence,
    enumerate_blacktie,
    enumerate_compositions,
    parts_total,
)
from .linrec import LinearRecurrence, generate, invert_linrec, rbonacci, rbonacci_inverse_identity_check
from .seqcore import Coloration, IntSequence, ShapeError, convolve, sigma, subtract
from .transforms import coloration_of, count_from_coloration, invert, invert_interpolated

__version__ = "0.1.0"
