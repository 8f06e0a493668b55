"""Numerical toolkit for the harmonic class W0_H(alpha).

Harmonic maps ``f = h + conj(g)`` are held as pairs of truncated power
series; class conditions are checked on disk grids.
"""

__version__ = "0.1.0"

from .series import (  # noqa: E402
    AnalyticSeries,
    differentiate,
    dilate,
    evaluate,
    hadamard,
    multiplier,
    series_equal,
    test_operator,
)
from .harmonic import (  # noqa: E402
    EpsilonSample,
    HarmonicMap,
    dilate_map,
    epsilon_slice,
    evaluate_harmonic,
    identity_map,
    jacobian,
    make_harmonic,
    rotate_map,
    section,
)
from .membership import (  # noqa: E402
    DiskGrid,
    MarginReport,
    epsilon_min_margin,
    halfplane_margin,
    sense_preserving_margin,
    starlike_margin,
    sufficient_condition_sum,
    w_margin,
    wh0_margin,
)
from .extremal import (  # noqa: E402
    FamilySpec,
    analytic_koebe,
    conjectured_bounds,
    geometric_series,
    harmonic_koebe,
    log_series,
    random_member,
    sharp_single,
    sharp_sum,
)
from .bounds import (  # noqa: E402
    BoundReport,
    GrowthEnvelope,
    coefficient_bound,
    convex_null_check,
    growth_envelope,
    verify_coefficient_bounds,
    verify_growth,
)
from .convolution import convex_combination, harmonic_convolve, tilde_convolve  # noqa: E402
from .radii import (  # noqa: E402
    RadiusResult,
    SectionCase,
    bisect_root,
    case_radius,
    golden_radius,
    cubic_section_min,
    quintic_radius,
    section_radius,
)
