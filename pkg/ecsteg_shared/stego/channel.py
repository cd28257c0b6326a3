import logging
import math
import os

logger = logging.getLogger(__name__)

_WEIGHT_TOLERANCE = 1e-12


class ChannelModelError(ValueError):
    pass


class UnknownTokenError(ValueError):
    pass


class ChannelModel(object):
    """A fixed categorical covertext distribution over distinct tokens."""

    def __init__(self, tokens, weights, name="channel"):
        tokens = list(tokens)
        weights = [float(w) for w in weights]
        if len(tokens) != len(weights):
            raise ChannelModelError("Every token needs exactly one weight")
        if len(tokens) < 2:
            raise ChannelModelError(
                "A channel needs at least 2 tokens, got {}".format(len(tokens))
            )
        if len(set(tokens)) != len(tokens):
            duplicates = sorted({t for t in tokens if tokens.count(t) > 1})
            raise ChannelModelError("Duplicate tokens: {}".format(", ".join(duplicates)))
        for token, weight in zip(tokens, weights):
            if not math.isfinite(weight) or weight <= 0:
                raise ChannelModelError(
                    "Token {!r} has non-positive weight {}".format(token, weight)
                )
            if not token or any(c in token for c in "\t\r\n"):
                raise ChannelModelError(
                    "Token {!r} is empty or contains a tab or newline".format(token)
                )

        total = math.fsum(weights)
        self._tokens = tuple(tokens)
        self._probabilities = tuple(w / total for w in weights)
        self._index = {token: i for i, token in enumerate(tokens)}
        self._name = name

        cumulative = []
        running = 0.0
        for probability in self._probabilities:
            running += probability
            cumulative.append(running)
        self._cumulative = tuple(cumulative)

    @property
    def name(self):
        return self._name

    @property
    def tokens(self):
        return self._tokens

    @property
    def probabilities(self):
        return self._probabilities

    def __len__(self):
        return len(self._tokens)

    def index(self, token):
        try:
            return self._index[token]
        except KeyError:
            raise UnknownTokenError(
                "Token {!r} is not in channel {}".format(token, self._name)
            )

    def is_uniform(self):
        first = self._probabilities[0]
        return all(abs(p - first) <= _WEIGHT_TOLERANCE for p in self._probabilities)

    def entropy_bits(self):
        return -math.fsum(p * math.log2(p) for p in self._probabilities)

    def sample(self, rng):
        return rng.choices(self._tokens, cum_weights=self._cumulative)[0]

    def __repr__(self):
        return "ChannelModel({}, {} tokens)".format(self._name, len(self._tokens))


def channel_load(text, name="channel"):
    """Parse "token<TAB>weight" lines; '#' starts a comment line."""
    tokens, weights = [], []
    for line_number, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise ChannelModelError(
                "Line {}: expected token<TAB>weight, got {!r}".format(line_number, line)
            )
        token, weight = fields
        try:
            weight = float(weight)
        except ValueError:
            raise ChannelModelError(
                "Line {}: weight {!r} is not a number".format(line_number, fields[1])
            )
        tokens.append(token)
        weights.append(weight)
    model = ChannelModel(tokens, weights, name=name)
    logger.debug(
        "Loaded channel %s with %d tokens, %.3f bits of entropy",
        name,
        len(model),
        model.entropy_bits(),
    )
    return model


def load_channel_file(path):
    with open(path, encoding="utf-8") as channel_file:
        return channel_load(channel_file.read(), name=os.path.basename(path))


class Stegotext(object):
    def __init__(self, tokens):
        self._tokens = tuple(tokens)

    @property
    def tokens(self):
        return self._tokens

    def __len__(self):
        return len(self._tokens)

    def __iter__(self):
        return iter(self._tokens)

    def __eq__(self, other):
        if not isinstance(other, Stegotext):
            return NotImplemented
        return self._tokens == other._tokens

    def to_text(self):
        return "\n".join(self._tokens) + "\n" if self._tokens else ""

    @classmethod
    def from_text(cls, text):
        return cls(line for line in text.split("\n") if line != "")

    def __repr__(self):
        return "Stegotext({} tokens)".format(len(self._tokens))
