import copy

from voluptuous import Schema

from .base import StorageServiceException
from ..helpers import get_implementation_class, validate_implementation_response

assert StorageServiceException


class StorageService(object):

    instance = None
    _config = None
    _logger = None
    base_class_name = "StorageServiceBase"

    schemas = {"write": Schema(str, required=True), "list": Schema([str])}

    @classmethod
    def set_up(cls, app, directory=None):
        """
            Instantiate the configured implementation.

            :param app: the `dynloc.DynlocApp`
            :param str directory: overrides the configured root directory
        """
        implementations = app.config.get("IMPLEMENTATIONS") or {}
        if implementations.get(cls.base_class_name):
            impl = implementations[cls.base_class_name]["class"]
            impl = get_implementation_class(cls.base_class_name, impl)

            config = copy.deepcopy(implementations[cls.base_class_name].get("config"))
            config = config or {}
            config.setdefault("directory", app.config["OUTPUT"]["directory"])
            if directory:
                config["directory"] = directory

            cls.instance = impl(config, logger=app.logger)
            cls._config = config
            cls._logger = app.logger
            app.logger.debug("{} successfully initialized".format(cls.base_class_name))

    @classmethod
    def relocate(cls, directory):
        """
            Re-create the implementation rooted at `directory`

            :raises `dynloc.services.storage.base.StorageServiceException`
        """
        instance = cls._get_instance()
        config = dict(cls._config or {})
        config["directory"] = directory
        cls.instance = instance.__class__(config, logger=cls._logger)
        cls._config = config

    @classmethod
    def is_implemented(cls):

        return bool(cls.instance)

    @classmethod
    def read(cls, *args, **kwargs):
        """
            Read an existing object.

            :param str object_name: Unique object name to be read
            :rtype: str
            :return:  Content of the object
            :raises `dynloc.services.storage.base.StorageServiceException`
        """
        return cls._get_instance().read(*args, **kwargs)

    @classmethod
    @validate_implementation_response
    def write(cls, *args, **kwargs):
        """
            Write a new object.

            :param str object_name: Unique object name to be pushed
            :param str data: Text content
            :rtype: str
            :return: location of the written object
            :raises `dynloc.services.storage.base.StorageServiceException`
        """
        return cls._get_instance().write(*args, **kwargs)

    @classmethod
    def delete(cls, *args, **kwargs):
        """
            Triggered when an object must be removed.

            :param str object_name: Unique object name that must be removed
            :raises `dynloc.services.storage.base.StorageServiceException`
        """
        return cls._get_instance().delete(*args, **kwargs)

    @classmethod
    @validate_implementation_response
    def list(cls, *args, **kwargs):
        """
            List stored object names.

            :param str prefix: object name prefix
            :rtype: list
        """
        return cls._get_instance().list(*args, **kwargs)

    @classmethod
    def _get_instance(cls):

        if not cls.instance:
            raise StorageServiceException("No storage implementation configured")
        return cls.instance
