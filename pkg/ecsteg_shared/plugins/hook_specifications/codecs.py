from ecsteg_shared.plugins.plugin_manager import hook_specification


@hook_specification
def installable_codecs():
    """
    :return: dict with codec names as keys and codec classes as values
    :rtype: PluginResponse with data as dict[str,type]

    A codec class is instantiated without arguments and provides
    bits_per_token(model), validate(model), encode(bits, model, rng, history)
    and decode(tokens, model, history).
    """
