import logging
import sys

from bitarray import bitarray

from ecsteg_data import run_suite
from ecsteg_shared.admissible import TensorEncoding
from ecsteg_shared.cli import EXIT_STATISTICAL_FAILURE, EXIT_SUCCESS
from ecsteg_shared.cli.config import Config
from ecsteg_shared.cli.key_files import (
    read_public_key,
    read_secret_key,
    write_public_key,
    write_secret_key,
)
from ecsteg_shared.cli.monitor import Monitor
from ecsteg_shared.curves.registry import registry_get
from ecsteg_shared.pke import BiasParams, Ciphertext, decrypt, encrypt, keygen
from ecsteg_shared.plugins import EcstegPluginManager
from ecsteg_shared.randtest import BitSequence
from ecsteg_shared.selftest import run_selftest
from ecsteg_shared.stego import RejectionCodec, Stegotext, load_channel_file, sd, se

logger = logging.getLogger(__name__)

# The three deployed curve/encoding pairs, in the order --combined interleaves them.
DEPLOYED_INSTANCES = (("p384", "icart"), ("secp256k1", "sw"), ("p256", "swu"))


def _read_bytes(path):
    with open(path, "rb") as input_file:
        return input_file.read()


def _write_bytes(path, data):
    with open(path, "wb") as output_file:
        output_file.write(data)
    logger.info("Wrote %d bytes to %s", len(data), path)


def _monitor(args):
    return Monitor(color_always=getattr(args, "color_always", False))


def cmd_keygen(args):
    config = Config.from_args(args)
    curve = registry_get(config.curve)
    tensor = TensorEncoding.create(curve, config.encoding, config.tensor_exponent)
    key_pair = keygen(curve, tensor, config.create_rng())

    write_public_key(args.output_prefix + ".pub", key_pair.public, config.redundancy)
    write_secret_key(args.output_prefix + ".sec", key_pair, config.redundancy)
    _monitor(args).print_line(key_pair.public.fingerprint)
    return EXIT_SUCCESS


def cmd_encrypt(args):
    config = Config.from_args(args)
    key_file = read_public_key(config.public_key)
    logger.info("Encrypting to key %s", key_file.key.fingerprint)
    ciphertext = encrypt(
        key_file.key, _read_bytes(args.input), key_file.bias_params, config.create_rng()
    )
    _write_bytes(args.output, ciphertext.to_bytes())
    return EXIT_SUCCESS


def _warn_unauthenticated():
    logger.warning(
        "Ciphertexts are not authenticated: a wrong key or a tampered "
        "input yields garbage instead of an error"
    )


def cmd_decrypt(args):
    config = Config.from_args(args)
    key_file = read_secret_key(config.secret_key)
    ciphertext = Ciphertext.from_bytes(
        _read_bytes(args.input), key_file.bias_params, key_file.tensor.s
    )
    _warn_unauthenticated()
    _write_bytes(args.output, decrypt(key_file.key, ciphertext))
    return EXIT_SUCCESS


def _channel_and_codec(config):
    model = load_channel_file(config.channel)
    codec = EcstegPluginManager().get_codec(config.codec)
    codec.validate(model)
    logger.debug("Channel %s carries %.3f bits per token", model.name, model.entropy_bits())
    if isinstance(codec, RejectionCodec):
        epsilon = codec.epsilon(model)
        logger.debug("Bit function bias on %s: %.4f", model.name, epsilon)
        if epsilon > 0.05:
            logger.warning(
                "The bit function is biased by %.3f on %s; stegotext will be "
                "distinguishable from the channel",
                epsilon,
                model.name,
            )
    return model, codec


def cmd_embed(args):
    config = Config.from_args(args)
    key_file = read_public_key(config.public_key)
    model, codec = _channel_and_codec(config)
    logger.info("Embedding for key %s", key_file.key.fingerprint)
    stegotext = se(
        key_file.key,
        _read_bytes(args.input),
        model,
        codec,
        key_file.bias_params,
        config.create_rng(),
    )
    with open(args.output, "w", encoding="utf-8") as output_file:
        output_file.write(stegotext.to_text())
    logger.info("Wrote %d tokens to %s", len(stegotext), args.output)
    return EXIT_SUCCESS


def cmd_extract(args):
    config = Config.from_args(args)
    key_file = read_secret_key(config.secret_key)
    model, codec = _channel_and_codec(config)
    with open(args.input, encoding="utf-8") as input_file:
        stegotext = Stegotext.from_text(input_file.read())
    _warn_unauthenticated()
    message = sd(key_file.key, stegotext, model, codec, key_file.bias_params)
    _write_bytes(args.output, message)
    return EXIT_SUCCESS


def generate_ciphertext_bits(instances, bits, rng, message_bytes=64, progress=None):
    """Concatenate unpadded C1 || C2 payloads round-robin over instances."""
    publics = []
    for curve_name, encoding in instances:
        curve = registry_get(curve_name)
        tensor = TensorEncoding.create(curve, encoding)
        publics.append((keygen(curve, tensor, rng).public, BiasParams.for_curve(curve)))

    stream = bitarray(endian="big")
    count = 0
    while len(stream) < bits:
        public, params = publics[count % len(publics)]
        message = bytes(rng.getrandbits(8) for _ in range(message_bytes))
        stream.extend(encrypt(public, message, params, rng).payload_bits())
        count += 1
        if progress is not None:
            progress(min(1.0, len(stream) / bits))
    logger.info("Generated %d bits from %d ciphertexts", len(stream), count)
    return stream[:bits]


def cmd_randtest(args):
    config = Config.from_args(args)
    monitor = _monitor(args)
    if args.input is not None:
        bits = BitSequence(_read_bytes(args.input))
    else:
        instances = (
            DEPLOYED_INSTANCES if args.combined else ((config.curve, config.encoding),)
        )
        bits = BitSequence(
            generate_ciphertext_bits(
                instances,
                args.bits,
                config.create_rng(),
                message_bytes=args.message_bytes,
                progress=monitor.progress if sys.stderr.isatty() else None,
            )
        )

    results = run_suite(bits, streams=args.streams)
    for name, row in results.summary().iterrows():
        logger.info(
            "%s: %d/%d streams passed (threshold %.4f)",
            name,
            row.passing,
            row.streams,
            row.threshold,
        )
    monitor.print_report_lines(results.report_lines())
    return EXIT_SUCCESS if results.all_passed() else EXIT_STATISTICAL_FAILURE


def cmd_selftest(args):
    config = Config.from_args(args)
    monitor = _monitor(args)
    results = []
    for result in run_selftest(config.create_rng(), samples=args.samples):
        monitor.print_check(result)
        results.append(result)
    passed = sum(1 for result in results if result.passed)
    monitor.print_summary(passed, len(results))
    return EXIT_SUCCESS if passed == len(results) else EXIT_STATISTICAL_FAILURE

