"""Deterministic text rendering and atomic writes for the CLI outputs."""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

from .experiment import TimelineRecord

TIMELINE_HEADER = "step,p0,p1,entropy0,entropy1,max_entropy,ratio0,ratio1"


def format_number(value: float | None) -> str:
    """12-significant-digit rendering; absent values become empty fields."""
    if value is None:
        return ""
    return format(value, ".12g")


def timeline_row(record: TimelineRecord) -> str:
    return ",".join(
        (
            str(record.step),
            format_number(record.p0),
            format_number(record.p1),
            format_number(record.entropy0),
            format_number(record.entropy1),
            format_number(record.max_entropy),
            format_number(record.ratio0),
            format_number(record.ratio1),
        )
    )


def render_timeline_csv(timeline: list[TimelineRecord]) -> str:
    lines = [TIMELINE_HEADER]
    lines.extend(timeline_row(record) for record in timeline)
    return "\n".join(lines) + "\n"


def write_text_atomic(path: Path, text: str) -> None:
    """Write-then-rename so partial runs never leave truncated files."""
    path = Path(path)
    handle, tmp_name = tempfile.mkstemp(
        dir=path.parent, prefix=f".{path.name}.", suffix=".tmp"
    )
    try:
        with os.fdopen(handle, "w", encoding="utf-8", newline="\n") as tmp:
            tmp.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise
