"""The det^{S^2} map on six plane vectors: evaluation, symmetries,
quadrilateral realizability and a computational uniqueness check."""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    PAIRS,
    Configuration,
    Vec2,
    det_s2,
    det_s2_direct,
    det_s2_inner_product,
    det_s2_via_matrix,
    has_equal_triple,
)
from .realizability import (  # noqa: E402
    PointQuad,
    RealizabilityResult,
    classify,
    config_from_angles,
    config_from_points,
    reconstruct_quadrilateral,
)
from .symmetry import (  # noqa: E402
    LinearMap2,
    Permutation,
    act_linear_map,
    act_permutation,
    permutation_sign,
)
