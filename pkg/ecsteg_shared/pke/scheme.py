"""Hybrid encryption whose ciphertext C1 || C2 reads as uniform random bits."""
import logging

from bitarray import bitarray

from .bias import bias_expand, bias_reduce
from .cipher import kdf, keystream_xor

logger = logging.getLogger(__name__)

LENGTH_PREFIX_BYTES = 4
MAX_MESSAGE_BYTES = (1 << 32) - 1


class FramingError(ValueError):
    pass


def c1_bit_length(tensor, params):
    return tensor.s * params.width


class Ciphertext(object):
    def __init__(self, c1, c2, params, s):
        c1 = bitarray(c1, endian="big") if not isinstance(c1, bitarray) else c1
        if len(c1) != s * params.width:
            raise FramingError(
                "c1 holds {} bits, expected {} x {}".format(len(c1), s, params.width)
            )
        self._c1 = c1
        self._c2 = bytes(c2)
        self._params = params
        self._s = s

    @property
    def c1(self):
        return self._c1

    @property
    def c2(self):
        return self._c2

    @property
    def params(self):
        return self._params

    @property
    def s(self):
        return self._s

    def coordinate_bits(self):
        width = self._params.width
        return [self._c1[i * width : (i + 1) * width] for i in range(self._s)]

    def payload_bits(self):
        """c1 bits followed by c2 bits, without padding."""
        bits = self._c1.copy()
        bits.frombytes(self._c2)
        return bits

    @classmethod
    def from_payload_bits(cls, bits, params, s):
        c1_length = s * params.width
        if len(bits) < c1_length + 8 * LENGTH_PREFIX_BYTES:
            raise FramingError(
                "Payload of {} bits is shorter than c1 plus a length prefix".format(
                    len(bits)
                )
            )
        tail = bits[c1_length:]
        tail = tail[: len(tail) - len(tail) % 8]
        return cls(bits[:c1_length], tail.tobytes(), params, s)

    def to_bytes(self):
        """Wire format: c1 zero-padded to whole bytes, then c2."""
        return self._c1.tobytes() + self._c2

    @classmethod
    def from_bytes(cls, data, params, s):
        c1_length = s * params.width
        c1_bytes = (c1_length + 7) // 8
        if len(data) < c1_bytes + LENGTH_PREFIX_BYTES:
            raise FramingError(
                "Ciphertext of {} bytes is shorter than c1 plus a length prefix".format(
                    len(data)
                )
            )
        c1 = bitarray(endian="big")
        c1.frombytes(bytes(data[:c1_bytes]))
        return cls(c1[:c1_length], data[c1_bytes:], params, s)

    def __eq__(self, other):
        if not isinstance(other, Ciphertext):
            return NotImplemented
        return (self._c1, self._c2, self._params, self._s) == (
            other._c1,
            other._c2,
            other._params,
            other._s,
        )

    def __repr__(self):
        return "Ciphertext(c1={} bits, c2={} bytes)".format(len(self._c1), len(self._c2))


def encrypt(public, message, params, rng):
    message = bytes(message)
    if len(message) > MAX_MESSAGE_BYTES:
        raise ValueError(
            "Messages are limited to {} bytes, got {}".format(
                MAX_MESSAGE_BYTES, len(message)
            )
        )
    curve = public.curve
    tensor = public.tensor
    if params.k != curve.p.bit_length:
        raise ValueError(
            "{} has a {}-bit field, bias parameters use k = {}".format(
                curve.name, curve.p.bit_length, params.k
            )
        )

    ephemeral = 0
    while ephemeral == 0:
        ephemeral = rng.randrange(curve.q.value)
    point = ephemeral * curve.g
    key = kdf(ephemeral * public.pk)

    coords = tensor.sample_preimage(point, rng)
    c1 = bitarray(endian="big")
    for u in coords:
        c1.extend(bias_expand(u, params, rng))

    framed = len(message).to_bytes(LENGTH_PREFIX_BYTES, "big") + message
    return Ciphertext(c1, keystream_xor(key, framed), params, tensor.s)


def decrypt(key_pair, ciphertext):
    curve = key_pair.curve
    tensor = key_pair.tensor
    if ciphertext.s != tensor.s:
        raise FramingError(
            "Ciphertext has {} coordinates, the key expects {}".format(
                ciphertext.s, tensor.s
            )
        )
    coords = [
        bias_reduce(bits, ciphertext.params, curve.p)
        for bits in ciphertext.coordinate_bits()
    ]
    point = tensor.forward(coords)
    shared = key_pair.sk * point
    if shared.is_infinity:
        raise FramingError("c1 decodes to the point at infinity")

    payload = keystream_xor(kdf(shared), ciphertext.c2)
    if len(payload) < LENGTH_PREFIX_BYTES:
        raise FramingError("c2 is too short to hold a length prefix")
    length = int.from_bytes(payload[:LENGTH_PREFIX_BYTES], "big")
    body = payload[LENGTH_PREFIX_BYTES:]
    if length > len(body):
        raise FramingError(
            "Length prefix claims {} bytes but only {} are present".format(
                length, len(body)
            )
        )
    return body[:length]
