import logging


class _Feature:
    def __init__(self, default_enabled, msg=None, arg_name=None):
        self.default_enabled = default_enabled
        self.is_enabled = default_enabled
        self.msg = msg
        self.arg_name = arg_name


class FeatureToggling:
    _conf = {
        "insecure-deterministic": _Feature(
            default_enabled=False,
            msg="Insecure deterministic mode is on! Keys, ciphertexts and "
            "stegotexts are derived from --seed and must never protect real data.",
            arg_name="insecure-deterministic",
        ),
    }

    @staticmethod
    def is_enabled(feature_name):
        return FeatureToggling._conf[feature_name].is_enabled

    @staticmethod
    def add_feature_toggling_args(parser):
        for feature_name in FeatureToggling._conf.keys():
            parser.add_argument(
                "--{}".format(FeatureToggling._get_arg_name(feature_name)),
                action="store_true",
                help="Toggle {} (Warning: testing only)".format(feature_name),
                default=False,
            )

    @staticmethod
    def update_from_args(args):
        args_dict = vars(args)
        for feature_name, feature in FeatureToggling._conf.items():

            arg_name = FeatureToggling._get_arg_name(feature_name)
            feature_name_escaped = arg_name.replace("-", "_")

            toggled = bool(args_dict.get(feature_name_escaped))
            feature.is_enabled = feature.default_enabled != toggled

            if feature.is_enabled and feature.msg is not None:
                logger = logging.getLogger()
                logger.warning(feature.msg)

    @staticmethod
    def reset():
        for feature in FeatureToggling._conf.values():
            feature.is_enabled = feature.default_enabled

    @staticmethod
    def _get_arg_name(feature_name):
        feature = FeatureToggling._conf[feature_name]
        if feature.arg_name is not None:
            return feature.arg_name
        arg_default_state = "disable" if feature.default_enabled else "enable"
        return "{}-{}".format(arg_default_state, feature_name)


def feature_enabled(feature_name):
    def decorator(func):
        def wrapper(*args, **kwargs):
            if FeatureToggling.is_enabled(feature_name):
                return func(*args, **kwargs)
            else:
                return None

        return wrapper

    return decorator
