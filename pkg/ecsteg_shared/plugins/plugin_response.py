from collections import namedtuple

from decorator import decorator

PluginMetadata = namedtuple("PluginMetadata", ["plugin_name", "function_name"])


class InvalidCodecPluginError(TypeError):
    pass


def _check_codecs(codecs, plugin_name):
    if not isinstance(codecs, dict):
        raise InvalidCodecPluginError(
            "Plugin {} must return a dict of codecs, got {}".format(
                plugin_name, type(codecs).__name__
            )
        )
    for name, codec in codecs.items():
        if not isinstance(name, str) or not name:
            raise InvalidCodecPluginError(
                "Plugin {} registers a codec under {!r}".format(plugin_name, name)
            )
        if not isinstance(codec, type) or not all(
            callable(getattr(codec, method, None)) for method in ("encode", "decode")
        ):
            raise InvalidCodecPluginError(
                "Plugin {} registers {!r} as codec {}, which cannot encode and "
                "decode".format(plugin_name, codec, name)
            )


@decorator
def plugin_response(func, plugin_name="", *args, **kwargs):
    """Wrap the codecs a hook returns together with where they came from."""
    codecs = func(*args, **kwargs)
    if codecs is None:
        return None
    _check_codecs(codecs, plugin_name)
    return PluginResponse(codecs, PluginMetadata(plugin_name, func.__name__))


class PluginResponse(object):
    def __init__(self, data, plugin_metadata):
        self.data = data
        self.plugin_metadata = plugin_metadata

    def __repr__(self):
        return "PluginResponse({} from {})".format(
            ", ".join(sorted(self.data)), self.plugin_metadata.plugin_name
        )
