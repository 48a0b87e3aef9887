"""
    Loading of configured service implementations and checking of their answers
"""

from functools import wraps
from importlib import import_module
from inspect import getmro

from voluptuous import Invalid


class InvalidFormatError(Exception):
    """
        An implementation returned a value its schema rejects
    """


class SchemaNotFound(Exception):
    """
        A checked method has no schema registered on its service
    """


class WrongImplementationException(Exception):
    """
        The configured class does not derive from the service interface
    """


def validate_implementation_response(func):
    """
        Check the value returned by `func` against `schemas[func.__name__]`
        of the service class it is bound to. `None` is never checked.

        :raises `InvalidFormatError`: when the schema rejects the value
        :raises `SchemaNotFound`: when no schema is registered
    """

    @wraps(func)
    def wrapper(service, *args, **kwargs):
        schema = (getattr(service, "schemas", None) or {}).get(func.__name__)
        if schema is None:
            raise SchemaNotFound("No schema for {}.{}".format(service.__name__, func.__name__))

        response = func(service, *args, **kwargs)
        if response is None:
            return response
        try:
            schema(response)
        except Invalid as ex:
            raise InvalidFormatError(
                "{}.{} returned {!r}: {}".format(service.__name__, func.__name__, response, ex)
            )
        return response

    return wrapper


def get_implementation_class(base_name, impl_name):
    """
        Import `impl_name` (dotted path) and make sure one of its
        ancestors is called `base_name`

        :rtype: type
        :raises `WrongImplementationException`
    """
    module_name, class_name = impl_name.rsplit(".", 1)
    impl_class = getattr(import_module(module_name), class_name)

    ancestors = {klass.__name__ for klass in getmro(impl_class)[1:]}
    if base_name not in ancestors:
        raise WrongImplementationException(
            "{} is not a {} implementation".format(impl_name, base_name)
        )
    return impl_class
