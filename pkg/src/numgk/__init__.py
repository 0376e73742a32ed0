"""numgk: exact numerical Grothendieck group toolkit for surfaces.

Lattice models of bielliptic, K3, Enriques-cover, and abelian-cover
surfaces; integer matrices of autoequivalence actions; certified spectral
radii as real algebraic enclosures; Gromov-Yomdin entropy reports; and a
breadth-first search for positive-entropy generator words.
"""

from .algebraic import (
    RealAlgebraicEnclosure,
    algebraic_compare,
    algebraic_equals,
    isolate_largest_real_root,
    isolate_real_roots,
)
from .actions import (
    ActionMatrix,
    GeneratorToken,
    IncompatibleTokenError,
    Tag,
    compose,
    fiber_projection_check,
    fm_token,
    is_numerical_isometry,
    lift_block,
    lift_token,
    parse_word,
    relative_fm_potter,
    shift,
    shift_token,
    spherical_twist_O,
    tensor_h_k3_token,
    tensor_line_bundle,
    tensor_minus_H_K3,
    tensor_token,
    twist_token,
)
from .entropy import (
    EntropyReport,
    GYStatus,
    entropy_bielliptic,
    gy_gap_report,
    log_enclosure_decimal,
    yomdin_lower_bound,
)
from .explorer import SearchConfig, SearchHit, SearchResult, canonical_key, search
from .matrices import Matrix, block_diagonal, char_poly
from .minpoly import algebraic_power, algebraic_sqrt, factor_int_poly, minimize_enclosure
from .polynomials import (
    IntPolynomial,
    modulus_squared_poly,
    poly_gcd,
    square_free_part,
    sturm_root_count,
)
from .spectral import spectral_radius, spectral_radius_exceeds_one
from .surfaces import (
    NumClass,
    SurfaceKind,
    SurfaceModel,
    bielliptic,
    cover_block_model,
    euler_pairing,
    intersection,
    is_negative_definite,
    k3,
    mukai_pairing,
    parse_surface_spec,
    signature,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
