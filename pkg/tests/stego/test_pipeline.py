import random

import pytest

from ecsteg_shared.admissible import TensorEncoding
from ecsteg_shared.curves import registry_get
from ecsteg_shared.pke import BiasParams, FramingError, keygen
from ecsteg_shared.stego import (
    ChannelModel,
    RejectionCodec,
    Stegotext,
    UniformCodec,
    UnknownTokenError,
    sd,
    se,
)

SIXTEEN = ChannelModel(["t{:02d}".format(i) for i in range(16)], [1] * 16, "sixteen")
WORDS = ChannelModel(
    ["the", "cat", "sat", "on", "mat", "dog", "ran", "yes"],
    [5, 2, 2, 3, 1, 2, 1, 2],
    "words",
)
CODECS = [(UniformCodec(), SIXTEEN), (RejectionCodec(), WORDS)]


def _setup(curve_name, encoding, rng):
    curve = registry_get(curve_name)
    key_pair = keygen(curve, TensorEncoding.create(curve, encoding), rng)
    return key_pair, BiasParams.for_curve(curve)


@pytest.mark.parametrize("codec, model", CODECS)
@pytest.mark.parametrize(
    "curve_name, encoding", [("toy-1019", "icart"), ("toy-1019", "swu"), ("toy-1039", "sw")]
)
def test_round_trip_on_toy_curves(codec, model, curve_name, encoding, rng):
    key_pair, params = _setup(curve_name, encoding, rng)
    message = b"meet me by the old oak"
    stegotext = se(key_pair.public, message, model, codec, params, rng)
    assert all(token in model.tokens for token in stegotext)
    assert sd(key_pair, stegotext, model, codec, params) == message


@pytest.mark.parametrize("codec, model", CODECS)
@pytest.mark.parametrize(
    "curve_name, encoding", [("p384", "icart"), ("secp256k1", "sw"), ("p256", "swu")]
)
def test_round_trip_on_deployed_curves(codec, model, curve_name, encoding, rng):
    key_pair, params = _setup(curve_name, encoding, rng)
    message = b"deployed"
    stegotext = se(key_pair.public, message, model, codec, params, rng)
    assert sd(key_pair, stegotext, model, codec, params) == message


@pytest.mark.parametrize("codec, model", CODECS)
def test_truncated_stegotext_is_a_framing_error(codec, model, rng):
    key_pair, params = _setup("toy-1019", "icart", rng)
    stegotext = se(key_pair.public, b"a longer message body", model, codec, params, rng)
    with pytest.raises(FramingError):
        sd(key_pair, Stegotext(stegotext.tokens[:10]), model, codec, params)
    with pytest.raises(FramingError):
        sd(key_pair, Stegotext(stegotext.tokens[:-20]), model, codec, params)


def test_unknown_token_is_reported(rng):
    key_pair, params = _setup("toy-1019", "icart", rng)
    stegotext = se(key_pair.public, b"x", SIXTEEN, UniformCodec(), params, rng)
    tokens = list(stegotext.tokens)
    tokens[3] = "intruder"
    with pytest.raises(UnknownTokenError):
        sd(key_pair, Stegotext(tokens), SIXTEEN, UniformCodec(), params)


def test_token_substitution_never_crashes(rng):
    key_pair, params = _setup("toy-1019", "swu", rng)
    stegotext = se(key_pair.public, b"substitute", SIXTEEN, UniformCodec(), params, rng)
    for position in range(len(stegotext)):
        tokens = list(stegotext.tokens)
        tokens[position] = "t15" if tokens[position] != "t15" else "t00"
        try:
            sd(key_pair, Stegotext(tokens), SIXTEEN, UniformCodec(), params)
        except FramingError:
            pass


def test_repeated_embedding_gives_distinct_stegotexts(rng):
    key_pair, params = _setup("p256", "swu", rng)
    stegotexts = [
        se(key_pair.public, b"same message", WORDS, RejectionCodec(), params, rng)
        for _ in range(3)
    ]
    assert len({stegotext.tokens for stegotext in stegotexts}) == 3
    for stegotext in stegotexts:
        assert sd(key_pair, stegotext, WORDS, RejectionCodec(), params) == b"same message"


@pytest.mark.slow
@pytest.mark.parametrize("codec, model", CODECS)
@pytest.mark.parametrize(
    "curve_name, encoding", [("p384", "icart"), ("secp256k1", "sw"), ("p256", "swu")]
)
def test_round_trip_of_random_messages_on_deployed_curves(
    codec, model, curve_name, encoding
):
    generator = random.Random("{}-{}-{}".format(curve_name, encoding, codec.name))
    key_pair, params = _setup(curve_name, encoding, generator)
    for _ in range(100):
        length = generator.randrange(1025)
        message = bytes(generator.getrandbits(8) for _ in range(length))
        stegotext = se(key_pair.public, message, model, codec, params, generator)
        assert sd(key_pair, stegotext, model, codec, params) == message
