import codecs
import copy
import os

import yaml
from voluptuous import All, Any, Coerce, Invalid, Optional, Range, Required, Schema

from .exceptions import SettingsError
from .logs import setup_loggers


_LOGGER_SCHEMA = Schema(
    {
        Optional("stdout"): {Required("level"): str},
        Optional("file"): {
            Required("level"): str,
            Required("file_name"): str,
            Optional("max_bytes", default=10485760): int,
            Optional("backups", default=3): int,
        },
        Optional("syslog"): {
            Required("level"): str,
            Optional("device"): str,
            Optional("host"): str,
            Optional("port"): int,
            Optional("transport"): Any("UDP", "TCP"),
        },
    }
)

SETTINGS_SCHEMA = Schema(
    {
        Optional("LOGGERS"): _LOGGER_SCHEMA,
        Optional("IMPLEMENTATIONS"): {
            str: {Required("class"): str, Optional("config"): Any(None, dict)}
        },
        Optional("REDIS"): Any(
            None,
            {
                Required("host"): str,
                Required("port"): int,
                Optional("password"): Any(None, str),
                Optional("queues"): dict,
                Optional("timeout"): All(int, Range(min=1)),
            },
        ),
        Optional("CALIBRATION"): {Required("file"): str},
        Optional("OUTPUT"): {Required("directory"): str},
        Optional("NUMERICS"): {
            Optional("tolerance"): All(Coerce(float), Range(min=1e-12, max=1e-6)),
            Optional("jobs"): All(int, Range(min=1)),
        },
    }
)

DEFAULT_SETTINGS = {
    "LOGGERS": {"stdout": {"level": "info"}},
    "IMPLEMENTATIONS": {
        "StorageServiceBase": {
            "class": "dynloc.services.storage.default.FilesystemStorageService",
            "config": None,
        }
    },
    "REDIS": None,
    "CALIBRATION": {"file": "calibration.yml"},
    "OUTPUT": {"directory": "output"},
    "NUMERICS": {"tolerance": 1e-10, "jobs": 1},
}


class Config(object):
    DEBUG = False

    @staticmethod
    def init_app(app):
        pass


class DevelopmentConfig(Config):
    DEBUG = True

    @staticmethod
    def init_app(app):

        Config.init_app(app)

        from .environments import setup_environments

        setup_loggers(app)
        setup_environments(app)


class TestingConfig(Config):
    TESTING = True
    DEBUG = True

    @staticmethod
    def init_app(app):
        Config.init_app(app)

        from .environments import setup_environments

        setup_environments(app)


class ProductionConfig(Config):
    DEBUG = False

    @staticmethod
    def init_app(app):

        Config.init_app(app)
        setup_loggers(app)

        from .environments import setup_environments

        setup_environments(app)


env_config = {
    "dev": DevelopmentConfig,
    "test": TestingConfig,
    "prod": ProductionConfig,
    "default": ProductionConfig,
}


def load_config(settings_file=None, environment="default"):
    """
        Merge the settings file over the built-in defaults

        :param str settings_file: path of a YAML settings file, or None
        :param str environment: one of `env_config` keys
        :rtype: dict
        :raises `dynloc.exceptions.SettingsError`
    """
    if environment not in env_config:
        raise SettingsError('Unknown environment "{}"'.format(environment))

    config = copy.deepcopy(DEFAULT_SETTINGS)
    if settings_file:
        for section, value in read_config_from_file(settings_file).items():
            # NUMERICS keys not set in the file keep their defaults
            if section == "NUMERICS" and isinstance(value, dict):
                value = dict(config[section], **value)
            config[section] = value

    try:
        config = SETTINGS_SCHEMA(config)
    except Invalid as ex:
        raise SettingsError("Invalid settings: {}".format(ex))

    output_dir = os.getenv("DYNLOC_OUTPUT_DIR")
    if output_dir:
        config["OUTPUT"] = {"directory": output_dir}

    return config


def read_config_from_file(settings_file):

    # Locate the config file to use
    if not os.path.isfile(settings_file):
        raise SettingsError('Missing configuration file "{}"'.format(settings_file))

    # Open and read the config file
    with codecs.open(settings_file, "r", "utf8") as file_handler:
        try:
            conf = yaml.safe_load(file_handler)
        except yaml.YAMLError as ex:
            raise SettingsError("Malformed settings file: {}".format(ex))
    if conf is None:
        conf = {}
    if not isinstance(conf, dict):
        raise SettingsError("Settings file must contain a mapping")
    return conf
