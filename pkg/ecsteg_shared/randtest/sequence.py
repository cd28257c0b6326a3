import numpy as np
from bitarray import bitarray

from .report import InsufficientDataError

MINIMUM_LENGTH = 100


class BitSequence(object):
    def __init__(self, bits):
        if isinstance(bits, BitSequence):
            bits = bits.bits
        if isinstance(bits, (bytes, bytearray)):
            packed = bitarray(endian="big")
            packed.frombytes(bytes(bits))
            bits = packed
        elif not isinstance(bits, bitarray):
            bits = bitarray(bits, endian="big")
        self._bits = bits
        self._array = np.frombuffer(bits.unpack(), dtype=np.uint8).astype(np.int64)

    @property
    def bits(self):
        return self._bits

    @property
    def n(self):
        return len(self._bits)

    def __len__(self):
        return len(self._bits)

    def as_array(self):
        """The bits as a 0/1 integer array."""
        return self._array

    def split(self, streams):
        """Equal-length consecutive streams; trailing bits are dropped."""
        length = self.n // streams
        if length == 0:
            raise InsufficientDataError(
                "{} bits cannot be split into {} streams".format(self.n, streams)
            )
        return [
            BitSequence(self._bits[i * length : (i + 1) * length])
            for i in range(streams)
        ]

    def require(self, minimum, test_name):
        if self.n < minimum:
            raise InsufficientDataError(
                "{} needs at least {} bits, got {}".format(test_name, minimum, self.n)
            )
