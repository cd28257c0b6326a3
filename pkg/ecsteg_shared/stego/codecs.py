"""Channel codecs turning payload bits into covertext tokens and back."""
import hashlib
import logging
import math

from bitarray import bitarray
from bitarray.util import ba2int, int2ba

from .channel import ChannelModelError, Stegotext

logger = logging.getLogger(__name__)

MAX_REJECTION_RETRIES = 64


class CodecError(RuntimeError):
    pass


class Codec(object):
    """Base codec; ``history`` is accepted for context-dependent channels."""

    name = None

    def bits_per_token(self, model):
        raise NotImplementedError

    def validate(self, model):
        raise NotImplementedError

    def encode(self, bits, model, rng=None, history=None):
        raise NotImplementedError

    def decode(self, tokens, model, history=None):
        raise NotImplementedError

    def __repr__(self):
        return "{}()".format(type(self).__name__)


class UniformCodec(Codec):
    """Direct indexing into a channel of 2^b equally likely tokens."""

    name = "uniform"

    def bits_per_token(self, model):
        return int(math.log2(len(model)))

    def validate(self, model):
        size = len(model)
        if size & (size - 1):
            raise ChannelModelError(
                "The uniform codec needs a power-of-two alphabet, {} has {} tokens".format(
                    model.name, size
                )
            )
        if not model.is_uniform():
            raise ChannelModelError(
                "The uniform codec needs equal token weights in {}".format(model.name)
            )

    def encode(self, bits, model, rng=None, history=None):
        self.validate(model)
        width = self.bits_per_token(model)
        bits = bitarray(bits, endian="big")
        bits.extend([0] * (-len(bits) % width))
        return Stegotext(
            model.tokens[ba2int(bits[i : i + width])]
            for i in range(0, len(bits), width)
        )

    def decode(self, tokens, model, history=None):
        self.validate(model)
        width = self.bits_per_token(model)
        bits = bitarray(endian="big")
        for token in tokens:
            bits.extend(int2ba(model.index(token), length=width, endian="big"))
        return bits


def bit_function(token):
    """Least significant bit of SHA-256 over the UTF-8 token."""
    return hashlib.sha256(token.encode("utf-8")).digest()[-1] & 1


class RejectionCodec(Codec):
    """One bit per token: resample the channel until the token's bit matches."""

    name = "rejection"

    def bits_per_token(self, model):
        return 1

    def one_mass(self, model):
        return math.fsum(
            p for token, p in zip(model.tokens, model.probabilities) if bit_function(token)
        )

    def epsilon(self, model):
        """Bias of the bit function under the channel distribution."""
        return abs(self.one_mass(model) - 0.5)

    def validate(self, model):
        one_mass = self.one_mass(model)
        if one_mass <= 0.0 or one_mass >= 1.0:
            raise ChannelModelError(
                "Every token of {} hashes to the same bit".format(model.name)
            )

    def encode(self, bits, model, rng=None, history=None):
        self.validate(model)
        if rng is None:
            raise CodecError("The rejection codec needs a random source")
        tokens = []
        for bit in bitarray(bits, endian="big"):
            for _ in range(MAX_REJECTION_RETRIES):
                token = model.sample(rng)
                if bit_function(token) == bit:
                    tokens.append(token)
                    break
            else:
                raise CodecError(
                    "No token with bit {} after {} draws".format(
                        bit, MAX_REJECTION_RETRIES
                    )
                )
        return Stegotext(tokens)

    def decode(self, tokens, model, history=None):
        bits = bitarray(endian="big")
        for token in tokens:
            model.index(token)
            bits.append(bit_function(token))
        return bits
