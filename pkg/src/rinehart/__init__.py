"""Exact symbolic geometry of Rinehart spaces over commutative ground rings.

Everything is computed in polynomial algebras (or their quotients by a
principal ideal) with exact coefficient arithmetic, so every verified
identity is a proof, not a numerical observation.
"""

from .errors import (ArityMismatch, CharTwoUnsupported, IdealMismatch,
                     MetricNotMusical, NotAUnit, NotEuclidean, NotTangent,
                     ParseError, RinehartError, RingMismatch, SpaceMismatch,
                     TwoNotAUnit, ValidationError)
from .hypersurface import (HypersurfaceSpace, InducedConnection,
                           SpaceFormReport, induced_connection, is_tangent,
                           make_sphere, project_normal, project_tangent,
                           quotient_equal, second_fundamental_form,
                           spanning_fields, verify_space_form)
from .parse import parse_poly, parse_scalar, parse_vector
from .poly import (Poly, PrincipalIdeal, QuotientElem, UnitStatus,
                   divide_exact, divmod_poly, format_poly, ideal_member,
                   normal_form, quotient_is_unit, try_invert, unit_status)
from .rings import (GroundScalar, PrimeField, QuadExt, Rationals,
                    RingDescriptor, ring_from_json)
from .space import (ConstantCurvatureReport, EuclideanConnection,
                    KoszulConnection, LeviCivitaReport, RinehartSpace,
                    check_constant_curvature, check_levi_civita, curvature,
                    derive, differential, flat_connection, gradient,
                    koszul_connection, lie_bracket)
from .tensors import (Metric, OneForm, VectorField, flat, inner,
                      in_maximal_ideal_submodule, pairing, sharp)

__version__ = "0.1.0"

__all__ = [
    "ArityMismatch", "CharTwoUnsupported", "ConstantCurvatureReport",
    "EuclideanConnection", "GroundScalar", "HypersurfaceSpace",
    "IdealMismatch", "InducedConnection", "KoszulConnection",
    "LeviCivitaReport", "Metric", "MetricNotMusical", "NotAUnit",
    "NotEuclidean", "NotTangent", "OneForm", "ParseError", "Poly",
    "PrimeField", "PrincipalIdeal", "QuadExt", "QuotientElem", "Rationals",
    "RinehartError", "RinehartSpace", "RingDescriptor", "RingMismatch",
    "SpaceFormReport", "SpaceMismatch", "TwoNotAUnit", "UnitStatus",
    "ValidationError", "VectorField", "check_constant_curvature",
    "check_levi_civita", "curvature", "derive", "differential",
    "divide_exact", "divmod_poly", "flat", "flat_connection", "format_poly",
    "gradient", "ideal_member", "in_maximal_ideal_submodule",
    "induced_connection", "inner", "is_tangent", "koszul_connection",
    "lie_bracket", "make_sphere", "normal_form", "pairing", "parse_poly",
    "parse_scalar", "parse_vector", "project_normal", "project_tangent",
    "quotient_equal", "quotient_is_unit", "ring_from_json",
    "second_fundamental_form", "sharp", "spanning_fields", "try_invert",
    "unit_status", "verify_space_form",
]
