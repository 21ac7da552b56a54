"""Json Interpreter

Checks a tool configuration against the tool schema of
``qzeta/scripts/json_defaults``: option names, types and ranges, filling the
schema defaults in on success.

Notes
-----
The configuration is either a json file (``-c/--config``), the command line
flags, or the flags laid over the file.
"""

import json

from jsonschema import Draft7Validator, validators

from qzeta import LOGGER
from qzeta.commons.exception import QZetaError, ErrorCodes


def _with_defaults(validator_class):
    validate_properties = validator_class.VALIDATORS["properties"]

    def set_defaults(validator, properties, instance, schema):
        for key, sub_schema in properties.items():
            if "default" in sub_schema and isinstance(instance, dict):
                instance.setdefault(key, sub_schema["default"])
        yield from validate_properties(validator, properties, instance, schema)

    return validators.extend(validator_class, {"properties": set_defaults})


DefaultingValidator = _with_defaults(Draft7Validator)


class JsonInterpreter:
    """
    A tool configuration, validated against a Draft 7 schema.

    Attributes
    ----------
    path : str
        origin of the configuration, used in messages
    """

    def __init__(self, conf, path="<command line>"):
        """
        :param conf: dict, or an open json file
        :param path: string, where conf comes from
        """
        if isinstance(conf, dict):
            self._conf = dict(conf)
        else:
            try:
                self._conf = json.load(conf)
            except json.JSONDecodeError as error:
                raise QZetaError(ErrorCodes.ERR_JSON_SCHEMA_ERROR, f"{path} is not valid json", stack_trace=error)
            if not isinstance(self._conf, dict):
                raise QZetaError(ErrorCodes.ERR_JSON_SCHEMA_ERROR, f"{path} must hold a json object")
        self.path = path

    def update(self, overrides):
        """
        lay explicit options (not None) over the current configuration
        """
        self._conf.update({key: value for key, value in overrides.items() if value is not None})

    def is_valid(self, json_schema):
        """
        Validate the configuration, filling defaults; every violation is logged
        with the option it concerns.

        :param json_schema: dict with json schema
        :return: boolean
        """
        instance = dict(self._conf)
        validator = DefaultingValidator(json_schema)
        errors = sorted(validator.iter_errors(instance), key=lambda error: list(error.path))
        for error in errors:
            where = "/".join(str(part) for part in error.path) or "configuration"
            LOGGER.error(f"invalid {where} in {self.path}: {error.message}")
        if errors:
            return False
        self._conf = instance
        return True

    def get_dict(self):
        return dict(self._conf)
