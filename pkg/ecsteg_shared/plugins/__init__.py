from .plugin_manager import EcstegPluginManager
