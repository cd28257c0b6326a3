from ecsteg_shared.plugins.plugin_manager import hook_implementation
from ecsteg_shared.plugins.plugin_response import plugin_response
from ecsteg_shared.stego.codecs import RejectionCodec, UniformCodec


@hook_implementation
@plugin_response(plugin_name="ecsteg")
def installable_codecs():
    return {codec.name: codec for codec in (UniformCodec, RejectionCodec)}
