from .channel import (
    ChannelModel,
    ChannelModelError,
    Stegotext,
    UnknownTokenError,
    channel_load,
    load_channel_file,
)
from .codecs import Codec, CodecError, RejectionCodec, UniformCodec, bit_function
from .pipeline import sd, se

__all__ = [
    "ChannelModel",
    "ChannelModelError",
    "Codec",
    "CodecError",
    "RejectionCodec",
    "Stegotext",
    "UniformCodec",
    "UnknownTokenError",
    "bit_function",
    "channel_load",
    "load_channel_file",
    "sd",
    "se",
]
