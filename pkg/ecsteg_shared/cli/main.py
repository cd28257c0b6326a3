import logging
import sys

from ecsteg_shared.admissible import SamplerExhaustedError
from ecsteg_shared.arith.poly import RootFindingError
from ecsteg_shared.cli import (
    DECRYPT_MODE,
    EMBED_MODE,
    ENCRYPT_MODE,
    EXIT_DATA_ERROR,
    EXTRACT_MODE,
    KEYGEN_MODE,
    RANDTEST_MODE,
    SELFTEST_MODE,
)
from ecsteg_shared.cli.commands import (
    cmd_decrypt,
    cmd_embed,
    cmd_encrypt,
    cmd_extract,
    cmd_keygen,
    cmd_randtest,
    cmd_selftest,
)
from ecsteg_shared.stego.codecs import CodecError

logger = logging.getLogger(__name__)

_COMMANDS = {
    KEYGEN_MODE: cmd_keygen,
    ENCRYPT_MODE: cmd_encrypt,
    DECRYPT_MODE: cmd_decrypt,
    EMBED_MODE: cmd_embed,
    EXTRACT_MODE: cmd_extract,
    RANDTEST_MODE: cmd_randtest,
    SELFTEST_MODE: cmd_selftest,
}

_DATA_ERRORS = (
    ValueError,
    KeyError,
    OSError,
    CodecError,
    RootFindingError,
    SamplerExhaustedError,
)


def run_cli(args):
    """Run the sub command named by args.mode and return its exit code."""
    command = _COMMANDS[args.mode]
    try:
        return command(args)
    except _DATA_ERRORS as err:
        if args.verbose:
            logger.exception("%s failed", args.mode)
        message = err.args[0] if isinstance(err, KeyError) and err.args else err
        print("ecsteg {}: error: {}".format(args.mode, message), file=sys.stderr)
        return EXIT_DATA_ERROR
