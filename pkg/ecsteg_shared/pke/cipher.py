import hashlib

from ecsteg_shared.curves.curve import serialize_point

KEY_BYTES = 32
_BLOCK_BYTES = hashlib.sha256().digest_size


def kdf(shared):
    """SHA-256 of the serialized shared point."""
    if shared.is_infinity:
        raise ValueError("Cannot derive a key from the point at infinity")
    return hashlib.sha256(serialize_point(shared)).digest()


def keystream(key, length):
    blocks = []
    for counter in range((length + _BLOCK_BYTES - 1) // _BLOCK_BYTES):
        blocks.append(hashlib.sha256(key + counter.to_bytes(8, "big")).digest())
    return b"".join(blocks)[:length]


def keystream_xor(key, data):
    """XOR data with SHA-256(key || counter); the same call decrypts."""
    if len(key) != KEY_BYTES:
        raise ValueError("Keystream keys are {} bytes, got {}".format(KEY_BYTES, len(key)))
    data = bytes(data)
    if not data:
        return b""
    stream = keystream(key, len(data))
    mixed = int.from_bytes(data, "big") ^ int.from_bytes(stream, "big")
    return mixed.to_bytes(len(data), "big")
