"""Python bindings for the boxed-bertrand C++ core.

Exact box-circle enumeration, long-chord pair counts and the continuum
reference models. Large integer counts come back as Python ints and
high-precision ratios as decimal strings.
"""

from ._core import (
    CapExceeded,
    GridBox,
    InvalidArgument,
    InvalidChord,
    ResolutionMismatch,
    Threshold,
    ToleranceUnreachable,
    analytic_solution_value,
    angular_histogram,
    antipodal_integral,
    arc_count,
    bertrand_ratio,
    circle_size_formula,
    closed_form_target,
    constant_table,
    count_distinct_full_chords,
    count_long_pairs,
    density_f,
    disc_count,
    enumerate_circle,
    full_chord,
    intersects_unit_circle,
    is_exceptional,
    is_long_pair,
    max_sq_dist_origin,
    max_sq_gap,
    min_sq_dist_origin,
    r2,
    referee_integral,
    simulate_solution,
    tau,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
