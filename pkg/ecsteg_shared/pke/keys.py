import hashlib
import logging

from ecsteg_shared.curves.curve import serialize_point

logger = logging.getLogger(__name__)


class PublicKey(object):
    def __init__(self, pk, tensor):
        if pk.curve != tensor.curve:
            raise ValueError("Public key and encoding live on different curves")
        if pk.is_infinity:
            raise ValueError("The point at infinity is not a valid public key")
        self._pk = pk
        self._tensor = tensor

    @property
    def pk(self):
        return self._pk

    @property
    def tensor(self):
        return self._tensor

    @property
    def curve(self):
        return self._tensor.curve

    @property
    def fingerprint(self):
        """First 8 bytes of SHA-256 over the serialized key, as hex."""
        return hashlib.sha256(serialize_point(self._pk)).digest()[:8].hex()


class KeyPair(object):
    def __init__(self, sk, tensor):
        curve = tensor.curve
        if not 0 < sk < curve.q.value:
            raise ValueError("Secret key out of range for {}".format(curve.name))
        self._sk = sk
        self._public = PublicKey(sk * curve.g, tensor)

    @property
    def sk(self):
        return self._sk

    @property
    def pk(self):
        return self._public.pk

    @property
    def public(self):
        return self._public

    @property
    def tensor(self):
        return self._public.tensor

    @property
    def curve(self):
        return self._public.curve


def keygen(curve, tensor, rng):
    """A fresh key pair; sk = 0 is redrawn so pk is never infinity."""
    if tensor.curve != curve:
        raise ValueError("Encoding is defined over {}".format(tensor.curve.name))
    sk = 0
    while sk == 0:
        sk = rng.randrange(curve.q.value)
    key_pair = KeyPair(sk, tensor)
    logger.info(
        "Generated %s/%s key %s", curve.name, tensor.base.name, key_pair.public.fingerprint
    )
    return key_pair
