"""
JSON encoding shared by the CLI and reports.
"""
import json
from typing import Any
from typing import Dict
from typing import List

import numpy as np

from ..exceptions import InputError

MAX_SAFE_INT = 2 ** 53 - 1


def _convert(obj: Any, bigint_as_str: bool) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, np.integer)):
        value = int(obj)
        if bigint_as_str and abs(value) > MAX_SAFE_INT:
            return str(value)
        return value
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    if isinstance(obj, np.ndarray):
        return [_convert(x, bigint_as_str) for x in obj.tolist()]
    if hasattr(obj, "_asdict"):
        return {k: _convert(v, bigint_as_str) for k, v in obj._asdict().items()}
    if hasattr(obj, "to_json"):
        return _convert(obj.to_json(), bigint_as_str)
    if isinstance(obj, dict):
        return {str(k): _convert(v, bigint_as_str) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_convert(x, bigint_as_str) for x in items]
    return obj


def to_builtin(obj: Any) -> Any:
    """Plain dicts, lists and scalars as `dumps` would write them."""
    return _convert(obj, True)


class PseudoUJsonEncoder(json.JSONEncoder):
    """Encodes numpy values, complex numbers and namedtuples; big ints as strings."""

    def __init__(self, bigint_as_str=True, **kwargs):
        super().__init__(**kwargs)
        self.bigint_as_str = bigint_as_str

    def encode(self, o):
        return super().encode(_convert(o, self.bigint_as_str))

    def iterencode(self, o, _one_shot=False):
        return super().iterencode(_convert(o, self.bigint_as_str), _one_shot)

    def default(self, o):
        if isinstance(o, np.generic):
            return o.item()
        return json.JSONEncoder.default(self, o)


def dumps(obj: Any, indent=None) -> str:
    return json.dumps(
        obj,
        cls=PseudoUJsonEncoder,
        sort_keys=True,
        indent=indent,
        separators=(",", ": ") if indent else (",", ":"),
    )


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise InputError(f"malformed JSON: {err.msg}", err.pos) from err


def matrix_to_json(m: np.ndarray) -> Dict:
    m = np.asarray(m, dtype=complex)
    return {
        "dim": int(m.shape[0]),
        "entries": [[[float(z.real), float(z.imag)] for z in row] for row in m],
    }


def matrix_from_json(data) -> np.ndarray:
    """
    Accepts {"dim": d, "entries": [[[re, im], ...], ...]} or a bare nested list
    whose entries are numbers or [re, im] pairs.
    """
    entries = data.get("entries") if isinstance(data, dict) else data
    if not isinstance(entries, list) or not entries:
        raise InputError("matrix must have a non-empty 'entries' list")
    try:
        rows: List[List[complex]] = []
        for row in entries:
            rows.append(
                [complex(z[0], z[1]) if isinstance(z, list) else complex(z) for z in row]
            )
        m = np.array(rows, dtype=complex)
    except (TypeError, ValueError, IndexError) as err:
        raise InputError(f"invalid matrix entries: {err}") from err
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InputError(f"matrix must be square, got shape {m.shape}")
    if isinstance(data, dict) and "dim" in data and int(data["dim"]) != m.shape[0]:
        raise InputError(f"declared dim {data['dim']} does not match {m.shape[0]}")
    return m


def big_int_from_json(value) -> int:
    if isinstance(value, str):
        try:
            return int(value)
        except ValueError as err:
            raise InputError(f"not an integer: {value!r}") from err
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"not an integer: {value!r}")
    return value
