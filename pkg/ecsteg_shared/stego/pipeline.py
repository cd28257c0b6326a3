import logging

from ecsteg_shared.pke.scheme import Ciphertext, FramingError, decrypt, encrypt

logger = logging.getLogger(__name__)


def se(public, message, model, codec, params, rng):
    """Encrypt message to public and encode the ciphertext bits as channel tokens."""
    codec.validate(model)
    ciphertext = encrypt(public, message, params, rng)
    payload = ciphertext.payload_bits()
    stegotext = codec.encode(payload, model, rng)
    logger.debug(
        "Embedded %d payload bits into %d %s tokens",
        len(payload),
        len(stegotext),
        model.name,
    )
    return stegotext


def sd(key_pair, stegotext, model, codec, params):
    """Recover the message hidden in stegotext."""
    payload = codec.decode(stegotext, model)
    try:
        ciphertext = Ciphertext.from_payload_bits(payload, params, key_pair.tensor.s)
    except FramingError:
        logger.debug("Stegotext carries only %d payload bits", len(payload))
        raise
    return decrypt(key_pair, ciphertext)
