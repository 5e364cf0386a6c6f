# pylint: disable=invalid-name, missing-docstring

import os
from typing import Dict
from typing import Optional
from collections import namedtuple

import yaml

from .exceptions import InputError
from .exceptions import DomainError


_runconfig_fields = (
    "TOLERANCE",
    "PRECISION_BITS",  # starting precision of exact-sign escalation
    "OUTPUT",  # json or table
    "SEED",  # seed for randomized property runs
    "N_THREADS",
    "LOG_LEVEL",
    "COMMUTATOR_B",  # diagonal entry of the commutator identity
)
_runconfig_defaults = (
    1e-9,
    64,
    "json",
    0,
    1,
    "WARNING",
    2.0,
)
RunConfig = namedtuple("RunConfig", _runconfig_fields, defaults=_runconfig_defaults)

DEFAULT_CONFIG = RunConfig()
DEFAULT_TOL = DEFAULT_CONFIG.TOLERANCE
DEFAULT_PRECISION = DEFAULT_CONFIG.PRECISION_BITS

OUTPUT_FORMATS = ("json", "table")

_ENV_OVERRIDES = {
    "PSEUDOU_PRECISION": ("PRECISION_BITS", int),
    "PSEUDOU_TOL": ("TOLERANCE", float),
    "PSEUDOU_SEED": ("SEED", int),
    "PSEUDOU_LOG_LEVEL": ("LOG_LEVEL", str),
}


def validate_config(config: RunConfig) -> RunConfig:
    if not config.TOLERANCE > 0:
        raise DomainError(f"tolerance must be positive, got {config.TOLERANCE}")
    if config.PRECISION_BITS < 64:
        raise DomainError(f"precision must be at least 64 bits, got {config.PRECISION_BITS}")
    if config.OUTPUT not in OUTPUT_FORMATS:
        raise DomainError(f"output must be one of {OUTPUT_FORMATS}, got {config.OUTPUT}")
    if config.COMMUTATOR_B in (0, 1, -1):
        raise DomainError(f"commutator b must avoid 0 and ±1, got {config.COMMUTATOR_B}")
    if config.N_THREADS < 1:
        raise DomainError(f"n_threads must be positive, got {config.N_THREADS}")
    return config


def _read_yaml(path: str) -> Dict:
    with open(path, "r") as stream:
        try:
            data = yaml.safe_load(stream) or {}
        except yaml.YAMLError as err:
            mark = getattr(err, "problem_mark", None)
            raise InputError(f"invalid config {path}: {err}", mark.index if mark else None)
    if not isinstance(data, dict):
        raise InputError(f"config {path} must be a mapping")
    return {str(k).upper(): v for k, v in data.items()}


def _env_values(environ) -> Dict:
    values = {}
    for env_key, (field, cast) in _ENV_OVERRIDES.items():
        raw = environ.get(env_key)
        if raw is None or raw == "":
            continue
        try:
            values[field] = cast(raw)
        except ValueError as err:
            raise InputError(f"{env_key}={raw!r} is not a valid {cast.__name__}") from err
    return values


def load_config(path: Optional[str] = None, environ=None, **overrides) -> RunConfig:
    """
    Merge defaults, a YAML file, environment variables and explicit overrides,
    in increasing priority. `None` overrides are ignored.
    """
    environ = os.environ if environ is None else environ
    values = DEFAULT_CONFIG._asdict()
    if path is not None:
        values.update(_read_yaml(path))
    values.update(_env_values(environ))
    values.update({k.upper(): v for k, v in overrides.items() if v is not None})
    unknown = set(values) - set(_runconfig_fields)
    if unknown:
        raise InputError(f"unknown config keys: {sorted(unknown)}")
    return validate_config(RunConfig(**values))
