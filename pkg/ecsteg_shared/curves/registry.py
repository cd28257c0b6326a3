import functools
import logging

from .curve import CurveParams, curve_points

logger = logging.getLogger(__name__)

_TOY_LIMIT = 1 << 11

# name: (p, a, b, (gx, gy), q)
_CURVE_DEFINITIONS = {
    "p256": (
        0xFFFFFFFF00000001000000000000000000000000FFFFFFFFFFFFFFFFFFFFFFFF,
        -3,
        0x5AC635D8AA3A93E7B3EBBD55769886BC651D06B0CC53B0F63BCE3C3E27D2604B,
        (
            0x6B17D1F2E12C4247F8BCE6E563A440F277037D812DEB33A0F4A13945D898C296,
            0x4FE342E2FE1A7F9B8EE7EB4A7C0F9E162BCE33576B315ECECBB6406837BF51F5,
        ),
        0xFFFFFFFF00000000FFFFFFFFFFFFFFFFBCE6FAADA7179E84F3B9CAC2FC632551,
    ),
    "p384": (
        int(
            "fffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffe"
            "ffffffff0000000000000000ffffffff",
            16,
        ),
        -3,
        int(
            "b3312fa7e23ee7e4988e056be3f82d19181d9c6efe8141120314088f5013875a"
            "c656398d8a2ed19d2a85c8edd3ec2aef",
            16,
        ),
        (
            int(
                "aa87ca22be8b05378eb1c71ef320ad746e1d3b628ba79b9859f741e082542a38"
                "5502f25dbf55296c3a545e3872760ab7",
                16,
            ),
            int(
                "3617de4a96262c6f5d9e98bf9292dc29f8f41dbd289a147ce9da3113b5f0b8c0"
                "0a60b1ce1d7e819d7a431d7c90ea0e5f",
                16,
            ),
        ),
        int(
            "ffffffffffffffffffffffffffffffffffffffffffffffffc7634d81f4372ddf"
            "581a0db248b0a77aecec196accc52973",
            16,
        ),
    ),
    "secp256k1": (
        0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEFFFFFC2F,
        0,
        7,
        (
            0x79BE667EF9DCBBAC55A06295CE870B07029BFCDB2DCE28D959F2815B16F81798,
            0x483ADA7726A3C4655DA4FBFC0E1108A8FD17B448A68554199C47D08FFB10D4B8,
        ),
        0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEBAAEDCE6AF48A03BBFD25E8CD0364141,
    ),
    # Toy entries are the first hits of curves.toy_search for (p, a).
    # p = 2 mod 3 and 3 mod 4: Icart and SWU apply.
    "toy-1019": (1019, 1, 20, (0, 64), 1033),
    # p = 1 mod 3, so sqrt(-3) exists and SW applies.
    "toy-1039": (1039, 0, 6, (1, 79), 1033),
}

_ALIASES = {
    "p-256": "p256",
    "secp256r1": "p256",
    "p-384": "p384",
    "secp384r1": "p384",
}


def available_curves():
    return sorted(_CURVE_DEFINITIONS)


def canonical_name(name):
    key = name.lower()
    return _ALIASES.get(key, key)


@functools.lru_cache(maxsize=None)
def registry_get(name):
    key = canonical_name(name)
    if key not in _CURVE_DEFINITIONS:
        raise KeyError(
            "Unknown curve {!r}, choose from: {}".format(
                name, ", ".join(available_curves())
            )
        )
    p, a, b, generator, order = _CURVE_DEFINITIONS[key]
    curve = CurveParams(key, p, a, b, generator=generator, order=order)

    if p < _TOY_LIMIT:
        point_count = len(curve_points(curve))
        if point_count != order:
            raise ValueError(
                "Toy curve {} has {} points, expected prime order {}".format(
                    key, point_count, order
                )
            )
    logger.debug("Loaded curve %s (%d-bit field)", key, curve.p.bit_length)
    return curve
