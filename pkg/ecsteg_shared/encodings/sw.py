import functools
import logging

from ecsteg_shared.arith.field import is_odd, is_square, sqrt

from .base import Encoding, PreimageSlots

logger = logging.getLogger(__name__)


class SWEncoding(Encoding):
    """Shallue-van de Woestijne map for y^2 = x^3 + b with sqrt(-3) in F_p."""

    name = "sw"

    def __init__(self, curve):
        super().__init__(curve)
        p = curve.p
        self._c1 = sqrt(p.element(-3))
        half = 1 / p.element(2)
        self._c2 = (self._c1 - 1) * half
        self._c3 = (-self._c1 - 1) * half
        self._one_plus_b = curve.b + 1

    @classmethod
    def not_applicable_reason(cls, curve):
        if curve.a.residue != 0:
            return "SW needs a curve of the form y^2 = x^3 + b"
        if curve.b.residue == 0:
            return "b must be non-zero"
        if sqrt(curve.p.element(-3)) is None:
            return "-3 is not a square mod p"
        if curve.b.residue == curve.p.value - 1:
            return "b = -1 makes every input degenerate"
        return None

    def _x1(self, w):
        return self._c2 - self._c1 * w / (self._one_plus_b + w)

    def _x2(self, w):
        return self._c3 + self._c1 * w / (self._one_plus_b + w)

    def _x3(self, w):
        d = self._one_plus_b + w
        return 1 - d * d / (3 * w)

    def _is_degenerate(self, w):
        return w.residue == 0 or (self._one_plus_b + w).residue == 0

    def forward(self, t):
        curve = self._curve
        w = t * t
        if self._is_degenerate(w):
            return curve.infinity
        odd = is_odd(t)
        for abscissa in (self._x1, self._x2, self._x3):
            point = curve.lift_x(abscissa(w), odd)
            if point is not None:
                return point
        logger.warning("No square among the three SW abscissas for t = %d", t.residue)
        return curve.infinity

    def _squares(self, point):
        """Candidates for t^2, one per solution of the three branch equations."""
        curve = self._curve
        x = point.x
        c1 = self._c1
        ob = self._one_plus_b
        z = 2 * x + 1
        candidates = [None] * 4

        if (c1 + z).residue != 0:
            candidates[0] = ob * (c1 - z) / (c1 + z)
        if (c1 - z).residue != 0:
            candidates[1] = ob * (c1 + z) / (c1 - z)

        # w^2 - B w + (1+b)^2 = 0 with B = 3(1 - x) - 2(1 + b)
        linear = 3 * (1 - x) - 2 * ob
        root = sqrt(linear * linear - 4 * ob * ob)
        if root is not None:
            half = 1 / curve.p.element(2)
            candidates[2] = (linear + root) * half
            candidates[3] = (linear - root) * half

        for index in (1, 2, 3):
            w = candidates[index]
            if w is None or self._is_degenerate(w):
                candidates[index] = None
                continue
            if is_square(curve.rhs(self._x1(w))):
                candidates[index] = None
            elif index >= 2 and is_square(curve.rhs(self._x2(w))):
                candidates[index] = None
        return candidates

    def inverse(self, point, rng=None):
        if point.is_infinity:
            return PreimageSlots.empty()
        odd = is_odd(point.y)
        candidates = []
        for w in self._squares(point):
            u = None if w is None or w.residue == 0 else sqrt(w)
            if u is not None and is_odd(u) != odd:
                u = -u
            candidates.append(u)
        return self._verified_slots(point, candidates)


@functools.lru_cache(maxsize=None)
def _encoding(curve):
    return SWEncoding(curve)


def sw_forward(t, curve):
    return _encoding(curve).forward(t)


def sw_inverse(point, curve, rng=None):
    return _encoding(curve).inverse(point, rng)
