"""Key files: one header line naming curve and encoding, then one hex line."""
import logging

from ecsteg_shared.admissible import TensorEncoding
from ecsteg_shared.curves.curve import deserialize_point, serialize_point
from ecsteg_shared.curves.registry import registry_get
from ecsteg_shared.pke.bias import BiasParams
from ecsteg_shared.pke.keys import KeyPair, PublicKey

logger = logging.getLogger(__name__)

PUBLIC_KIND = "public-key"
SECRET_KIND = "secret-key"
_HEADER_PREFIX = "# ecsteg"


class KeyFileError(ValueError):
    pass


def _header(kind, tensor, redundancy):
    return "{} {} curve={} encoding={} s={} redundancy={}".format(
        _HEADER_PREFIX, kind, tensor.curve.name, tensor.base.name, tensor.s, redundancy
    )


def _parse(text, expected_kind):
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if len(lines) != 2 or not lines[0].startswith(_HEADER_PREFIX):
        raise KeyFileError("A key file holds a header line and one hex line")
    fields = lines[0][len(_HEADER_PREFIX) :].split()
    if not fields or fields[0] != expected_kind:
        raise KeyFileError(
            "Expected a {} file, got {}".format(expected_kind, fields[0] if fields else "nothing")
        )
    try:
        settings = dict(field.split("=", 1) for field in fields[1:])
        curve = registry_get(settings["curve"])
        tensor = TensorEncoding.create(curve, settings["encoding"], int(settings["s"]))
        redundancy = settings.get("redundancy", "k/8")
        body = bytes.fromhex(lines[1])
    except (KeyError, ValueError) as err:
        raise KeyFileError("Malformed key file header or body: {}".format(err))
    return tensor, redundancy, body


class KeyFile(object):
    """A loaded key with the parameters its header names."""

    def __init__(self, key, redundancy):
        self.key = key
        self.redundancy = redundancy

    @property
    def tensor(self):
        return self.key.tensor

    @property
    def bias_params(self):
        return BiasParams.for_curve(self.key.curve, self.redundancy)


def write_public_key(path, public, redundancy):
    with open(path, "w") as key_file:
        key_file.write(_header(PUBLIC_KIND, public.tensor, redundancy) + "\n")
        key_file.write(serialize_point(public.pk).hex() + "\n")
    logger.info("Wrote public key to %s", path)


def write_secret_key(path, key_pair, redundancy):
    width = key_pair.curve.q.bit_length
    with open(path, "w") as key_file:
        key_file.write(_header(SECRET_KIND, key_pair.tensor, redundancy) + "\n")
        key_file.write(
            "{:0{}x}\n".format(key_pair.sk, 2 * ((width + 7) // 8))
        )
    logger.info("Wrote secret key to %s", path)


def read_public_key(path):
    with open(path) as key_file:
        tensor, redundancy, body = _parse(key_file.read(), PUBLIC_KIND)
    try:
        public = PublicKey(deserialize_point(body, tensor.curve), tensor)
    except ValueError as err:
        raise KeyFileError("Invalid public key in {}: {}".format(path, err))
    return KeyFile(public, redundancy)


def read_secret_key(path):
    with open(path) as key_file:
        tensor, redundancy, body = _parse(key_file.read(), SECRET_KIND)
    try:
        key_pair = KeyPair(int.from_bytes(body, "big"), tensor)
    except ValueError as err:
        raise KeyFileError("Invalid secret key in {}: {}".format(path, err))
    return KeyFile(key_pair, redundancy)
