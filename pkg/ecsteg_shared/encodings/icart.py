import functools
import logging

from ecsteg_shared.arith.field import cube_root
from ecsteg_shared.arith.poly import Polynomial, roots_in_fp
from ecsteg_shared.curves.curve import CurvePoint
from ecsteg_shared.rng import create_rng

from .base import Encoding, PreimageSlots

logger = logging.getLogger(__name__)


class IcartEncoding(Encoding):
    """Icart's map for curves over F_p with p = 2 mod 3."""

    name = "icart"

    def __init__(self, curve):
        super().__init__(curve)
        p = curve.p
        self._inv3 = 1 / p.element(3)
        self._inv27 = 1 / p.element(27)

    @classmethod
    def not_applicable_reason(cls, curve):
        if curve.p.value % 3 != 2:
            return "p mod 3 = {}, Icart needs p = 2 mod 3".format(curve.p.value % 3)
        return None

    def forward(self, u):
        curve = self._curve
        if u.residue == 0:
            return curve.infinity
        u2 = u * u
        u4 = u2 * u2
        v = (3 * curve.a - u4) / (6 * u)
        x = cube_root(v * v - curve.b - u4 * u2 * self._inv27) + u2 * self._inv3
        y = u * x + v
        return CurvePoint(curve, x, y, check=False)

    def quartic(self, point):
        """u^4 - 6xu^2 + 6yu - 3a, whose roots contain the preimages of point."""
        x, y = point.x, point.y
        return Polynomial(
            [-3 * self._curve.a, 6 * y, -6 * x, 0, 1], self._curve.p
        )

    def inverse(self, point, rng=None):
        if point.is_infinity:
            return PreimageSlots.empty()
        if rng is None:
            rng = create_rng()
        roots = roots_in_fp(self.quartic(point), rng)
        candidates = sorted(u for u in roots if u.residue != 0)
        verified = self._verified_slots(point, candidates).values()
        return PreimageSlots(verified)


@functools.lru_cache(maxsize=None)
def _encoding(curve):
    return IcartEncoding(curve)


def icart_forward(u, curve):
    return _encoding(curve).forward(u)


def icart_inverse(point, curve, rng=None):
    return _encoding(curve).inverse(point, rng)
