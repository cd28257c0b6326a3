from enum import Enum

from .base import SLOT_COUNT, Encoding, EncodingNotApplicableError, PreimageSlots
from .icart import IcartEncoding, icart_forward, icart_inverse
from .sw import SWEncoding, sw_forward, sw_inverse
from .swu import SWUEncoding, swu_forward, swu_inverse


class EncodingKind(Enum):
    ICART = "icart"
    SW = "sw"
    SWU = "swu"

    @property
    def encoding_class(self):
        return _ENCODING_CLASSES[self]

    def applies_to(self, curve):
        return self.encoding_class.applies_to(curve)

    def not_applicable_reason(self, curve):
        return self.encoding_class.not_applicable_reason(curve)

    def create(self, curve):
        return self.encoding_class(curve)

    @classmethod
    def from_name(cls, name):
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(
                "Unknown encoding {!r}, choose from: {}".format(
                    name, ", ".join(kind.value for kind in cls)
                )
            )


_ENCODING_CLASSES = {
    EncodingKind.ICART: IcartEncoding,
    EncodingKind.SW: SWEncoding,
    EncodingKind.SWU: SWUEncoding,
}

__all__ = [
    "SLOT_COUNT",
    "Encoding",
    "EncodingKind",
    "EncodingNotApplicableError",
    "IcartEncoding",
    "PreimageSlots",
    "SWEncoding",
    "SWUEncoding",
    "icart_forward",
    "icart_inverse",
    "sw_forward",
    "sw_inverse",
    "swu_forward",
    "swu_inverse",
]
