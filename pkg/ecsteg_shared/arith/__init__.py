from .field import (
    FieldElement,
    ModulusMismatchError,
    NotInvertibleError,
    Prime,
    cube_root,
    is_odd,
    legendre,
    random_element,
    sqrt,
)
from .poly import Polynomial, RootFindingError, powmod_x_p, roots_in_fp

__all__ = [
    "FieldElement",
    "ModulusMismatchError",
    "NotInvertibleError",
    "Polynomial",
    "Prime",
    "RootFindingError",
    "cube_root",
    "is_odd",
    "legendre",
    "powmod_x_p",
    "random_element",
    "roots_in_fp",
    "sqrt",
]
