from .bias import BiasParams, bias_expand, bias_reduce
from .cipher import kdf, keystream_xor
from .keys import KeyPair, PublicKey, keygen
from .scheme import Ciphertext, FramingError, c1_bit_length, decrypt, encrypt

__all__ = [
    "BiasParams",
    "Ciphertext",
    "FramingError",
    "KeyPair",
    "PublicKey",
    "bias_expand",
    "bias_reduce",
    "c1_bit_length",
    "decrypt",
    "encrypt",
    "kdf",
    "keygen",
    "keystream_xor",
]
