"""File formats: emission-log corpus, annotated references, SRT export.

The emission-log interchange format is one JSON record per line:

    {"id": ..., "duration": ..., "k": ..., "step": ...,
     "events": [{"t": seconds, "w": surface}, ...],
     "g": [consumed-source seconds per event]}   # optional

Break kinds are inferred from surfaces. Timestamps are decimal seconds;
writing uses Python's shortest round-trip float representation, so
write(read(x)) is byte-identical for canonical records.
"""

from __future__ import annotations

import json
from typing import IO, Iterable, Iterator

from .core import (
    EmissionLog,
    NonMonotonicTimeError,
    StreamError,
    parse_token_stream,
)
from .display import DisplayMode, DisplaySchedule

__all__ = [
    "SchemaError",
    "NonPositiveDurationError",
    "read_log_corpus",
    "write_log_corpus",
    "log_to_record",
    "log_from_record",
    "read_annotated_refs",
    "write_annotated_refs",
    "export_srt",
    "format_srt_time",
]


class SchemaError(StreamError):
    """A corpus record does not match the interchange schema."""

    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        where = f"line {line}" if line is not None else "record"
        if field is not None:
            where += f", field {field!r}"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.field = field


class NonPositiveDurationError(SchemaError):
    pass


def _require(record: dict, field: str, types: tuple[type, ...], line: int | None):
    if field not in record:
        raise SchemaError("missing", line, field)
    value = record[field]
    if not isinstance(value, types) or isinstance(value, bool):
        raise SchemaError(f"expected {types[0].__name__}, got {value!r}", line, field)
    return value


def log_from_record(record: dict, line: int | None = None) -> EmissionLog:
    """Build an EmissionLog from one parsed interchange record."""
    seg_id = _require(record, "id", (str,), line)
    duration = _require(record, "duration", (int, float), line)
    if duration <= 0:
        raise NonPositiveDurationError("duration must be > 0", line, "duration")
    k = _require(record, "k", (int,), line)
    step = _require(record, "step", (int, float), line)
    raw_events = _require(record, "events", (list,), line)
    raw: list[tuple[str, float]] = []
    for j, ev in enumerate(raw_events):
        if not isinstance(ev, dict) or "t" not in ev or "w" not in ev:
            raise SchemaError(f"event {j} needs 't' and 'w'", line, "events")
        raw.append((ev["w"], ev["t"]))
    g = record.get("g")
    if g is not None:
        if not isinstance(g, list) or len(g) != len(raw):
            raise SchemaError("'g' must match events in length", line, "g")
        g = tuple(float(x) for x in g)
    try:
        events = parse_token_stream(raw)
        return EmissionLog(
            segment_id=seg_id,
            source_duration=float(duration),
            wait_k=k,
            step_size=float(step),
            events=events,
            consumed_source=g,
        )
    except NonMonotonicTimeError:
        raise
    except StreamError as exc:
        raise SchemaError(str(exc), line, None) from exc


def log_to_record(log: EmissionLog) -> dict:
    record: dict = {
        "id": log.segment_id,
        "duration": log.source_duration,
        "k": log.wait_k,
        "step": log.step_size,
        "events": [{"t": ev.emit_time, "w": ev.surface} for ev in log.events],
    }
    if log.consumed_source is not None:
        record["g"] = list(log.consumed_source)
    return record


def read_log_corpus(source: Iterable[str]) -> Iterator[EmissionLog]:
    """Parse a line-delimited log corpus, yielding logs in file order."""
    for lineno, line in enumerate(source, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}", lineno, None) from exc
        if not isinstance(record, dict):
            raise SchemaError("record is not an object", lineno, None)
        yield log_from_record(record, lineno)


def write_log_corpus(logs: Iterable[EmissionLog], out: IO[str]) -> None:
    for log in logs:
        out.write(json.dumps(log_to_record(log), ensure_ascii=False))
        out.write("\n")


def read_annotated_refs(source: Iterable[str]):
    """Parse references: one segment per line, tab-separated id, duration,
    space-separated tokens with inline break symbols."""
    from .waitk import AnnotatedReference

    for lineno, line in enumerate(source, start=1):
        line = line.rstrip("\n")
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise SchemaError(
                f"expected 3 tab-separated fields, got {len(parts)}", lineno, None
            )
        seg_id, dur_text, token_text = parts
        try:
            duration = float(dur_text)
        except ValueError as exc:
            raise SchemaError(f"bad duration {dur_text!r}", lineno, "duration") from exc
        if duration <= 0:
            raise NonPositiveDurationError("duration must be > 0", lineno, "duration")
        tokens = tuple(token_text.split())
        if not tokens:
            raise SchemaError("no tokens", lineno, "tokens")
        yield AnnotatedReference(seg_id, tokens, duration)


def write_annotated_refs(refs, out: IO[str]) -> None:
    for ref in refs:
        out.write(f"{ref.segment_id}\t{ref.duration}\t{' '.join(ref.tokens)}\n")


def format_srt_time(seconds: float) -> str:
    ms = round(seconds * 1000)
    h, ms = divmod(ms, 3_600_000)
    m, ms = divmod(ms, 60_000)
    s, ms = divmod(ms, 1000)
    return f"{h:02d}:{m:02d}:{s:02d},{ms:03d}"


def export_srt(schedule: DisplaySchedule) -> str:
    """Render a blocks-mode schedule as SubRip text.

    The schedule must have closed offsets (close the final state at segment
    end plus the wait-k delay first).
    """
    if schedule.mode is not DisplayMode.BLOCKS:
        raise ValueError(f"SRT export needs a blocks-mode schedule, got {schedule.mode}")
    cues: list[str] = []
    prev_end = float("-inf")
    for n, state in enumerate(schedule.states, start=1):
        if state.offset is None:
            raise ValueError("schedule has an open-ended state; close it first")
        assert state.onset >= prev_end, "overlapping cues"
        prev_end = state.offset
        rows = "\n".join(state.rows)
        cues.append(
            f"{n}\n{format_srt_time(state.onset)} --> {format_srt_time(state.offset)}\n{rows}\n"
        )
    return "\n".join(cues)
