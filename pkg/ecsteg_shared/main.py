#!/usr/bin/env python
import os
import sys
from argparse import ArgumentParser, ArgumentTypeError

import ecsteg_shared
from ecsteg_shared.cli import (
    DECRYPT_MODE,
    EMBED_MODE,
    ENCRYPT_MODE,
    EXIT_USAGE,
    EXTRACT_MODE,
    KEYGEN_MODE,
    RANDTEST_MODE,
    SELFTEST_MODE,
)
from ecsteg_shared.curves.registry import available_curves, canonical_name
from ecsteg_shared.encodings import EncodingKind
from ecsteg_shared.feature_toggling import FeatureToggling
from ecsteg_shared.pke.bias import REDUNDANCY_POLICIES


class EcstegArgumentParser(ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "{}: error: {}\n".format(self.prog, message))


def valid_file(fname):
    if not os.path.isfile(fname):
        raise ArgumentTypeError("File was not found: {}".format(fname))
    return fname


def valid_output_prefix(prefix):
    directory = os.path.dirname(prefix) or "."
    if not os.path.isdir(directory):
        raise ArgumentTypeError("Directory was not found: {}".format(directory))
    return prefix


def valid_curve(user_input):
    name = canonical_name(user_input)
    if name not in available_curves():
        raise ArgumentTypeError(
            "Unknown curve {}, choose from: {}".format(
                user_input, ", ".join(available_curves())
            )
        )
    return name


def valid_encoding(user_input):
    try:
        return EncodingKind.from_name(user_input).value
    except ValueError as err:
        raise ArgumentTypeError(str(err))


def _bounded_int(user_input, minimum, what):
    try:
        i = int(user_input)
    except ValueError:
        raise ArgumentTypeError("{} must be an int".format(what))
    if i < minimum:
        raise ArgumentTypeError("{} must be at least {}".format(what, minimum))
    return i


def valid_seed(user_input):
    return _bounded_int(user_input, 0, "Seed")


def valid_bits(user_input):
    return _bounded_int(user_input, 1000, "Bit count")


def valid_tensor_exponent(user_input):
    return _bounded_int(user_input, 2, "Tensor exponent")


def valid_positive_int(user_input):
    return _bounded_int(user_input, 1, "Value")


def _add_common_arguments(parser):
    parser.add_argument(
        "--verbose", action="store_true", help="Show verbose output.", default=False
    )
    parser.add_argument(
        "--color-always",
        action="store_true",
        help="Force coloring of report output, which is automatically"
        + " disabled if the output stream is not a terminal.",
        default=False,
    )
    parser.add_argument(
        "--seed",
        type=valid_seed,
        help="Seed every random draw. Requires --insecure-deterministic.",
    )
    FeatureToggling.add_feature_toggling_args(parser)


def _add_curve_arguments(parser, required=True):
    parser.add_argument(
        "--curve",
        type=valid_curve,
        required=required,
        help="Named curve, one of: {}".format(", ".join(available_curves())),
    )
    parser.add_argument(
        "--encoding",
        type=valid_encoding,
        required=required,
        help="Point encoding, one of: {}".format(
            ", ".join(kind.value for kind in EncodingKind)
        ),
    )


def _add_channel_arguments(parser):
    parser.add_argument(
        "--channel",
        required=True,
        help="Channel model file with one token<TAB>weight per line.",
    )
    parser.add_argument(
        "--codec",
        default="rejection",
        help="Name of an installed codec, for example uniform or rejection.",
    )


def get_ecsteg_parser(parser=None):
    if parser is None:
        parser = EcstegArgumentParser(
            description="ecsteg - public-key steganography over elliptic curves"
        )

    parser.add_argument(
        "--version",
        action="version",
        version="{}".format(ecsteg_shared.__version__),
    )

    subparsers = parser.add_subparsers(
        title="Available sub commands",
        description="Generate keys, encrypt or embed messages, and check the "
        "statistical quality of the output. See the help section for each sub "
        "command for its arguments.",
        help="Available sub commands",
        dest="mode",
    )
    subparsers.required = True

    keygen_description = "Generate a key pair and write <prefix>.pub and <prefix>.sec"
    keygen_parser = subparsers.add_parser(
        KEYGEN_MODE, help=keygen_description, description=keygen_description
    )
    _add_curve_arguments(keygen_parser)
    keygen_parser.add_argument(
        "--tensor-exponent",
        type=valid_tensor_exponent,
        default=2,
        help="Number of encoded coordinates per ciphertext point.",
    )
    keygen_parser.add_argument(
        "--redundancy",
        choices=REDUNDANCY_POLICIES,
        default="k/8",
        help="Extra bits per coordinate that hide the field modulus.",
    )
    keygen_parser.add_argument(
        "--output-prefix",
        type=valid_output_prefix,
        default="ecsteg",
        help="Path prefix of the two key files.",
    )

    encrypt_description = "Encrypt a file to a public key"
    encrypt_parser = subparsers.add_parser(
        ENCRYPT_MODE, help=encrypt_description, description=encrypt_description
    )
    encrypt_parser.add_argument("--public-key", type=valid_file, required=True)

    decrypt_description = "Decrypt a ciphertext file with a secret key"
    decrypt_parser = subparsers.add_parser(
        DECRYPT_MODE, help=decrypt_description, description=decrypt_description
    )
    decrypt_parser.add_argument("--secret-key", type=valid_file, required=True)

    embed_description = "Encrypt a file and encode the ciphertext as channel tokens"
    embed_parser = subparsers.add_parser(
        EMBED_MODE, help=embed_description, description=embed_description
    )
    embed_parser.add_argument("--public-key", type=valid_file, required=True)
    _add_channel_arguments(embed_parser)

    extract_description = "Recover the message hidden in a stegotext file"
    extract_parser = subparsers.add_parser(
        EXTRACT_MODE, help=extract_description, description=extract_description
    )
    extract_parser.add_argument("--secret-key", type=valid_file, required=True)
    _add_channel_arguments(extract_parser)

    for io_parser in [encrypt_parser, decrypt_parser, embed_parser, extract_parser]:
        io_parser.add_argument("input", type=valid_file, help="Input file")
        io_parser.add_argument("--output", required=True, help="Output file")

    randtest_description = (
        "Run the statistical test suite over a file or freshly generated ciphertext"
    )
    randtest_parser = subparsers.add_parser(
        RANDTEST_MODE, help=randtest_description, description=randtest_description
    )
    source = randtest_parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", type=valid_file, help="File of raw bytes to test")
    source.add_argument(
        "--generate",
        action="store_true",
        help="Test ciphertext generated with --curve and --encoding",
    )
    source.add_argument(
        "--combined",
        action="store_true",
        help="Test ciphertext generated by all three deployed curve/encoding pairs",
    )
    _add_curve_arguments(randtest_parser, required=False)
    randtest_parser.add_argument(
        "--bits", type=valid_bits, default=1000000, help="Bits to generate"
    )
    randtest_parser.add_argument(
        "--streams", type=valid_positive_int, default=100, help="Number of streams"
    )
    randtest_parser.add_argument(
        "--message-bytes",
        type=valid_positive_int,
        default=64,
        help="Length of each generated random message",
    )

    selftest_description = "Check the encodings and sampler against exhaustive oracles"
    selftest_parser = subparsers.add_parser(
        SELFTEST_MODE, help=selftest_description, description=selftest_description
    )
    selftest_parser.add_argument(
        "--samples",
        type=valid_positive_int,
        default=20000,
        help="Sampler draws per chi-square check",
    )

    for cli_parser in [
        keygen_parser,
        encrypt_parser,
        decrypt_parser,
        embed_parser,
        extract_parser,
        randtest_parser,
        selftest_parser,
    ]:
        _add_common_arguments(cli_parser)

    return parser


def ecsteg_parser(parser, argv):
    parser = get_ecsteg_parser(parser)
    args = parser.parse_args(argv)
    if args.mode == RANDTEST_MODE and args.generate:
        if args.curve is None or args.encoding is None:
            parser.error("--generate requires --curve and --encoding")
    if args.seed is not None and not args.insecure_deterministic:
        parser.error("--seed requires --insecure-deterministic")
    return args


def main():
    import ecsteg_logging  # Only use the ecsteg logger config when running the CLI
    from ecsteg_shared.cli.main import run_cli

    args = ecsteg_parser(None, sys.argv[1:])
    ecsteg_logging.set_verbose(args.verbose)
    FeatureToggling.update_from_args(args)
    sys.exit(run_cli(args))


if __name__ == "__main__":
    main()
