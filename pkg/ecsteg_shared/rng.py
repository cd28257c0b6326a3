import logging
import random

logger = logging.getLogger(__name__)


def create_rng(seed=None):
    """OS entropy by default; a seeded generator only for reproducible runs.

    Both expose getrandbits, randrange and choices, which is all the
    library draws on.
    """
    if seed is None:
        return random.SystemRandom()
    logger.debug("Using a deterministic generator seeded with %d", seed)
    return random.Random(seed)
