import os
from pathlib import Path

import yaml
from dotenv import dotenv_values

# Read from the working directory when no --config is given
CONFIG_FILE = 'epw.cfg'

OUTPUT_FORMATS = ('csv', 'svg', 'both')


class ConfigError(ValueError):
    """A config file could not be read or holds an unusable value."""


def _deduplicate_list(items):
    """Remove duplicates from a list while preserving order."""
    seen = set()
    result = []
    for item in items:
        if item not in seen:
            seen.add(item)
            result.append(item)
    return result


def _parse_float_list(value):
    if isinstance(value, (list, tuple)):
        items = value
    else:
        items = [part for part in str(value).split(',') if part.strip()]
    return _deduplicate_list([float(item) for item in items])


def _parse_format(value):
    value = str(value).strip().lower()
    if value not in OUTPUT_FORMATS:
        raise ValueError(f"format must be one of {', '.join(OUTPUT_FORMATS)}")
    return value


# key -> converter for every setting a config file may provide
_CONVERTERS = {
    'q0': float,
    'p0': float,
    'K': float,
    's': _parse_float_list,
    'tau_min': float,
    'tau_max': float,
    'tau_step': float,
    'samples': int,
    'seed': int,
    'chunks': int,
    'workers': int,
    'cases': int,
    'out': str,
    'format': _parse_format,
}


def _read_raw(path: Path) -> dict:
    """key=value files go through python-dotenv, .yaml/.yml through PyYAML."""
    if path.suffix.lower() in ('.yaml', '.yml'):
        with open(path, 'r') as f:
            content = yaml.safe_load(f)
        if content is None:
            return {}
        if not isinstance(content, dict):
            raise ConfigError(f"{path} must contain a mapping of settings")
        return content
    return dict(dotenv_values(path))


def _get_run_defaults(path=None) -> dict:
    """
    Returns typed settings from the config file, or {} if there is none.
    An explicit path must exist; the implicit CONFIG_FILE is optional.
    """
    if path is None:
        if not os.path.exists(CONFIG_FILE):
            return {}
        path = CONFIG_FILE
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"Config file not found: {path}")

    try:
        raw = _read_raw(path)
    except yaml.YAMLError as e:
        raise ConfigError(f"Error parsing {path} (invalid YAML): {e}") from e
    except OSError as e:
        raise ConfigError(f"Error reading {path}: {e}") from e

    settings = {}
    for key, value in raw.items():
        if key not in _CONVERTERS:
            print(f"Ignoring unknown setting '{key}' in {path}")
            continue
        if value is None or value == '':
            continue
        try:
            settings[key] = _CONVERTERS[key](value)
        except (TypeError, ValueError) as e:
            raise ConfigError(f"Bad value for '{key}' in {path}: {value!r} ({e})") from e
    return settings
