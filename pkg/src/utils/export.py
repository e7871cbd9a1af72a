"""
CSV / JSON writers for experiment output
"""
import csv
import io
import json
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Iterable, Optional, Sequence, Union


def _generated_at() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _header_line(timestamp: bool) -> str:
    return f"# generated {_generated_at()}\n" if timestamp else ""


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]], timestamp: bool = False) -> str:
    """CSV text with '\\n' line ends; an optional leading '# generated ...' line"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return _header_line(timestamp) + buffer.getvalue()


def render_json(payload: Dict[str, Any], timestamp: bool = False) -> str:
    """Pretty JSON object; the timestamp goes into a leading "generated" key"""
    if timestamp:
        payload = {"generated": _generated_at(), **payload}
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def write_output(text: str, out: Optional[Union[str, Path]] = None, stream=None) -> Optional[Path]:
    """Write to ``out`` when given, otherwise to ``stream``"""
    if out is None:
        stream.write(text)
        return None
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as handle:
        handle.write(text)
    return path


def format_number(value: float) -> str:
    """Shortest round-trip repr, platform independent"""
    return repr(float(value))
