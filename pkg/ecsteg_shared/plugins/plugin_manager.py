import logging

import pluggy

_PLUGIN_NAMESPACE = "ecsteg"

hook_implementation = pluggy.HookimplMarker(_PLUGIN_NAMESPACE)
hook_specification = pluggy.HookspecMarker(_PLUGIN_NAMESPACE)

# Imports below hook_implementation and hook_specification to avoid circular imports
import ecsteg_shared.plugins.hook_specifications
import ecsteg_shared.hook_implementations

logger = logging.getLogger(__name__)


class UnknownCodecError(KeyError):
    pass


class EcstegPluginManager(pluggy.PluginManager):
    def __init__(self, plugins=None):
        super().__init__(_PLUGIN_NAMESPACE)
        self.add_hookspecs(ecsteg_shared.plugins.hook_specifications)
        if plugins is None:
            self.register(ecsteg_shared.hook_implementations)
            self.load_setuptools_entrypoints(_PLUGIN_NAMESPACE)
        else:
            for plugin in plugins:
                self.register(plugin)
        logger.debug(str(self))

    def __str__(self):
        self_str = "ecsteg plugin manager:\n"
        for plugin in self.get_plugins():
            self_str += "\t" + self.get_name(plugin) + "\n"
            for hook_caller in self.get_hookcallers(plugin):
                self_str += "\t\t" + str(hook_caller) + "\n"
        return self_str

    @staticmethod
    def _merge_dicts(list_of_dicts, include_plugin_data=False):
        list_of_dicts.reverse()
        merged_dict = {}
        for d in list_of_dicts:
            conflicting_keys = set(merged_dict.keys()) & set(d.data.keys())
            for ck in conflicting_keys:
                logger.info(
                    "Overwriting {} from {}({}) with data from {}({})".format(
                        ck,
                        merged_dict[ck][1].plugin_name,
                        merged_dict[ck][1].function_name,
                        d.plugin_metadata.plugin_name,
                        d.plugin_metadata.function_name,
                    )
                )
            merged_dict.update({k: (v, d.plugin_metadata) for k, v in d.data.items()})

        if include_plugin_data:
            return merged_dict
        return {k: v[0] for k, v in merged_dict.items()}

    def get_codecs(self):
        return EcstegPluginManager._merge_dicts(self.hook.installable_codecs())

    def get_codec(self, name):
        codecs = self.get_codecs()
        if name not in codecs:
            raise UnknownCodecError(
                "Unknown codec {!r}, installed codecs: {}".format(
                    name, ", ".join(sorted(codecs))
                )
            )
        return codecs[name]()
