"""Deterministic JSON / CSV / NDJSON encoding shared by the CLI and reports.

JSON documents keep the key order of the dicts they are built from, floats
are rounded to a fixed number of significant digits and every document ends
with a newline, so reruns are byte-identical.
"""

import csv
import io
import json
import math
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Any


def round_sig(x: float, digits: int = 12) -> float:
    """Round *x* to *digits* significant digits (negative zero becomes 0.0)."""
    if x == 0 or not math.isfinite(x):
        return 0.0 if x == 0 else x
    return float(f"{x:.{digits}g}") + 0.0


def display_value(x: float, digits: int = 12, zero_tolerance: float = 1e-12) -> float:
    """Value as shown to users: magnitudes below *zero_tolerance* print as 0."""
    if abs(x) < zero_tolerance:
        return 0.0
    return round_sig(x, digits)


def _normalize(obj: Any, digits: int) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return round_sig(obj, digits)
    if isinstance(obj, dict):
        return {str(k): _normalize(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_normalize(v, digits) for v in obj]
    raise TypeError(f"cannot encode {type(obj).__name__}")


def dumps_json(obj: Any, digits: int = 12, indent: int | None = None) -> str:
    """Encode *obj* as newline-terminated JSON with rounded floats and stable key order."""
    return json.dumps(_normalize(obj, digits), indent=indent) + "\n"


def dumps_csv(header: Sequence[str], rows: Iterable[Sequence[Any]], digits: int = 12) -> str:
    """Render a CSV table (LF line endings, floats rounded like the JSON output)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([round_sig(v, digits) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def write_ndjson(records: Iterable[dict[str, Any]], output_path: Path, digits: int = 12) -> Path:
    """Write one JSON record per line."""
    output_path.parent.mkdir(parents=True, exist_ok=True)
    with output_path.open("w") as f:
        for record in records:
            f.write(dumps_json(record, digits))
    return output_path
