from .curve import (
    CurveMismatchError,
    CurveParams,
    CurvePoint,
    PointDecodingError,
    curve_points,
    deserialize_point,
    on_curve,
    point_add,
    point_double,
    point_neg,
    scalar_mul,
    serialize_point,
)
from .registry import available_curves, registry_get

__all__ = [
    "CurveMismatchError",
    "CurveParams",
    "CurvePoint",
    "PointDecodingError",
    "available_curves",
    "curve_points",
    "deserialize_point",
    "on_curve",
    "point_add",
    "point_double",
    "point_neg",
    "registry_get",
    "scalar_mul",
    "serialize_point",
]
