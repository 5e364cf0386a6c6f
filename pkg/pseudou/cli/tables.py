"""
Aligned plain-text rendering for --format table.
"""
from typing import Any
from typing import List
from typing import Optional

from ..utils.serializers import dumps
from ..utils.serializers import to_builtin


def _cell(value: Any) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, (dict, list)):
        return dumps(value)
    return str(value)


def _columns(rows: List[List[str]]) -> List[str]:
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    return ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]


def format_table(data: Any, title: Optional[str] = None) -> str:
    """
    A dict becomes key/value rows; a list of dicts becomes one row per item
    under a header of the first item's keys.
    """
    data = to_builtin(data)
    lines = [title] if title else []
    if isinstance(data, dict):
        lines += _columns([[str(k), _cell(v)] for k, v in sorted(data.items())])
    elif isinstance(data, list) and data and all(isinstance(x, dict) for x in data):
        keys = list(data[0])
        rows = [keys] + [[_cell(item.get(k, "")) for k in keys] for item in data]
        lines += _columns(rows)
    else:
        lines.append(_cell(data))
    return "\n".join(lines)
