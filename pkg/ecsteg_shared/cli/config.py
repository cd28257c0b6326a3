import logging

from ecsteg_shared.curves.registry import registry_get
from ecsteg_shared.encodings import EncodingKind
from ecsteg_shared.feature_toggling import FeatureToggling, feature_enabled
from ecsteg_shared.rng import create_rng

logger = logging.getLogger(__name__)

DETERMINISTIC_FEATURE = "insecure-deterministic"


class ConfigurationError(ValueError):
    pass


@feature_enabled(DETERMINISTIC_FEATURE)
def _seeded_rng(seed):
    return create_rng(seed)


class Config(object):
    """Settings of one command, cross-checked after argument parsing."""

    def __init__(
        self,
        curve=None,
        encoding=None,
        tensor_exponent=2,
        redundancy="k/8",
        channel=None,
        codec=None,
        public_key=None,
        secret_key=None,
        seed=None,
    ):
        self.curve = curve
        self.encoding = encoding
        self.tensor_exponent = tensor_exponent
        self.redundancy = redundancy
        self.channel = channel
        self.codec = codec
        self.public_key = public_key
        self.secret_key = secret_key
        self.seed = seed
        self._validate()

    @classmethod
    def from_args(cls, args):
        args_dict = vars(args)
        fields = (
            "curve",
            "encoding",
            "tensor_exponent",
            "redundancy",
            "channel",
            "codec",
            "public_key",
            "secret_key",
            "seed",
        )
        return cls(**{key: args_dict[key] for key in fields if args_dict.get(key) is not None})

    def _validate(self):
        if self.curve is not None and self.encoding is not None:
            kind = EncodingKind.from_name(self.encoding)
            reason = kind.not_applicable_reason(registry_get(self.curve))
            if reason:
                raise ConfigurationError(
                    "Encoding {} cannot be used with curve {}: {}".format(
                        kind.value, self.curve, reason
                    )
                )
        if self.tensor_exponent < 2:
            raise ConfigurationError("The tensor exponent must be at least 2")
        if self.seed is not None and not FeatureToggling.is_enabled(DETERMINISTIC_FEATURE):
            raise ConfigurationError(
                "--seed is refused unless --insecure-deterministic is also given"
            )

    def create_rng(self):
        if self.seed is None:
            return create_rng()
        return _seeded_rng(self.seed)
