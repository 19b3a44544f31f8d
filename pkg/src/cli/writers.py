"""Deterministic CSV and report output.

Floats are written with Python's shortest round-trip representation and
files always use LF line endings, so identical inputs give identical bytes
and a parsed file re-emits unchanged.
"""

import io
import math
import numbers
from collections.abc import Iterable, Mapping, Sequence
from pathlib import Path
from typing import Any, Optional

import numpy as np
import pandas as pd

from src.core.exceptions import OutputError


def format_float(value: float) -> str:
    """Shortest decimal string that parses back to the same double."""
    return repr(float(value))


def format_value(value: Any) -> str:
    """Format one cell or report value."""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        return format_float(value)
    return str(value)


def format_significant(value: float, digits: int = 6) -> str:
    """Human-readable number with ``digits`` significant digits."""
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return "nan"
    return f"{value:.{digits}g}"


def to_text_frame(columns: Mapping[str, Sequence[Any]]) -> pd.DataFrame:
    """Build a DataFrame whose cells are already formatted strings."""
    return pd.DataFrame(
        {name: [format_value(v) for v in values] for name, values in columns.items()}
    )


def render_csv(frame: pd.DataFrame, comments: Iterable[str] = ()) -> str:
    """CSV text with optional leading ``#`` comment lines."""
    buffer = io.StringIO()
    for comment in comments:
        buffer.write(f"# {comment}\n")
    frame.to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()


def read_csv_table(path: str | Path) -> tuple[list[str], pd.DataFrame]:
    """
    Parse a file written by :func:`write_csv`.

    Returns:
        Tuple of (comment lines without the leading '# ', numeric DataFrame)
    """
    text = Path(path).read_text(encoding="utf-8")
    comments = [line[2:] for line in text.splitlines() if line.startswith("# ")]
    frame = pd.read_csv(io.StringIO(text), comment="#", float_precision="round_trip")
    return comments, frame


def write_text(path: str | Path, text: str) -> None:
    """
    Write text with LF line endings.

    Raises:
        OutputError: If the path cannot be written
    """
    path = Path(path)
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    except OSError as e:
        raise OutputError(f"Cannot write {path}: {e}", path=str(path)) from e


def write_csv(
    path: str | Path, columns: Mapping[str, Sequence[Any]], comments: Iterable[str] = ()
) -> None:
    """Format ``columns`` and write them as CSV."""
    write_text(path, render_csv(to_text_frame(columns), comments))


def render_report(sections: Mapping[str, Mapping[str, Any]]) -> str:
    """``[section]`` headers followed by ``key = value`` lines."""
    lines: list[str] = []
    for name, entries in sections.items():
        lines.append(f"[{name}]")
        lines.extend(f"{key} = {format_value(value)}" for key, value in entries.items())
        lines.append("")
    return "\n".join(lines)


def emit(text: str, out: Optional[str]) -> None:
    """Print to stdout, or write to ``out`` when given."""
    if out:
        write_text(out, text)
    else:
        print(text, end="" if text.endswith("\n") else "\n")
