"""Corpus evaluation and report rendering.

evaluate_log / evaluate_corpus wire the whole pipeline together: extract the
subtitle structure from each emission log, compute reading-speed samples and
latency for every display mode, and aggregate corpus statistics. Reports are
serialized both as JSON and as an aligned text table with one row per mode
(reading speed mean +/- std, conformity percentage, display delay).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from statistics import fmean
from typing import Iterable, Sequence

from .core import EmissionLog, TokenKind, extract_blocks, extract_lines
from .display import (
    MAX_ROW_CHARS,
    DisplayMode,
    group_word_blocks,
    schedule_block_mode,
    schedule_line_mode,
    schedule_word_mode,
)
from .latency import average_lagging, display_delay
from .reading_speed import (
    MAX_CPL,
    MIN_CPL,
    RS_THRESHOLD_CPS,
    ReadingSpeedSample,
    ReadingSpeedStats,
    length_conformity,
    rs_blocks,
    rs_lines,
    rs_stats,
    rs_word_blocks,
)

__all__ = [
    "MODE_ORDER",
    "SegmentMetrics",
    "CorpusReport",
    "evaluate_log",
    "evaluate_corpus",
    "report_to_dict",
    "render_table",
    "write_report",
]

# Fixed presentation order.
MODE_ORDER = (DisplayMode.WORD_FOR_WORD, DisplayMode.BLOCKS, DisplayMode.SCROLLING_LINES)


@dataclass(frozen=True)
class SegmentMetrics:
    segment_id: str
    average_lagging: float  # ms
    delay_by_mode: dict[DisplayMode, float]  # ms
    rs_samples: dict[DisplayMode, tuple[ReadingSpeedSample, ...]]
    n_blocks: int
    n_conforming_blocks: int


@dataclass(frozen=True)
class CorpusReport:
    n_segments: int
    average_lagging: float  # ms, mean over segments
    delay_by_mode: dict[DisplayMode, float]  # ms, mean over segments
    rs_by_mode: dict[DisplayMode, ReadingSpeedStats | None]
    length_conformity_pct: float | None
    rs_threshold: float
    cpl_bounds: tuple[int, int]
    segments: tuple[SegmentMetrics, ...] = field(default=())


def evaluate_log(
    log: EmissionLog,
    rs_threshold: float = RS_THRESHOLD_CPS,
    min_cpl: int = MIN_CPL,
    max_cpl: int = MAX_CPL,
    max_row_chars: int = MAX_ROW_CHARS,
) -> SegmentMetrics:
    """All per-segment metrics for one emission log."""
    delay_k = log.delay_k
    blocks = extract_blocks(log.events)
    lines = extract_lines(log.events)
    word_blocks = group_word_blocks(log.events, max_row_chars)
    eos_time = (
        log.events[-1].emit_time
        if log.events and log.events[-1].kind is TokenKind.END_OF_SEGMENT
        else None
    )

    al = average_lagging(log)
    delays = {
        DisplayMode.WORD_FOR_WORD: display_delay(
            schedule_word_mode(word_blocks, eos_time), log, al
        ),
        DisplayMode.BLOCKS: display_delay(schedule_block_mode(blocks), log, al),
        DisplayMode.SCROLLING_LINES: display_delay(schedule_line_mode(lines), log, al),
    }
    samples = {
        DisplayMode.WORD_FOR_WORD: rs_word_blocks(word_blocks, delay_k, log.segment_id),
        DisplayMode.BLOCKS: rs_blocks(blocks, delay_k, log.segment_id),
        DisplayMode.SCROLLING_LINES: rs_lines(lines, delay_k, log.segment_id),
    }
    conforming = sum(
        1
        for b in blocks
        if all(min_cpl <= line.char_length <= max_cpl for line in b.lines)
    )
    return SegmentMetrics(
        segment_id=log.segment_id,
        average_lagging=al,
        delay_by_mode=delays,
        rs_samples=samples,
        n_blocks=len(blocks),
        n_conforming_blocks=conforming,
    )


def evaluate_corpus(
    logs: Iterable[EmissionLog],
    rs_threshold: float = RS_THRESHOLD_CPS,
    min_cpl: int = MIN_CPL,
    max_cpl: int = MAX_CPL,
    max_row_chars: int = MAX_ROW_CHARS,
    keep_segments: bool = False,
) -> CorpusReport:
    """Aggregate metrics over a corpus of emission logs.

    Reading-speed statistics pool samples across segments; AL and delays are
    means of the per-segment values.
    """
    per_segment: list[SegmentMetrics] = []
    pooled: dict[DisplayMode, list[ReadingSpeedSample]] = {m: [] for m in MODE_ORDER}
    al_values: list[float] = []
    delay_values: dict[DisplayMode, list[float]] = {m: [] for m in MODE_ORDER}
    n_blocks = 0
    n_conforming = 0
    n_segments = 0
    for log in logs:
        metrics = evaluate_log(log, rs_threshold, min_cpl, max_cpl, max_row_chars)
        n_segments += 1
        al_values.append(metrics.average_lagging)
        for mode in MODE_ORDER:
            pooled[mode].extend(metrics.rs_samples[mode])
            delay_values[mode].append(metrics.delay_by_mode[mode])
        n_blocks += metrics.n_blocks
        n_conforming += metrics.n_conforming_blocks
        if keep_segments:
            per_segment.append(metrics)
    if n_segments == 0:
        return CorpusReport(
            0, 0.0, {}, {m: None for m in MODE_ORDER}, None, rs_threshold,
            (min_cpl, max_cpl),
        )
    return CorpusReport(
        n_segments=n_segments,
        average_lagging=fmean(al_values),
        delay_by_mode={m: fmean(delay_values[m]) for m in MODE_ORDER},
        rs_by_mode={m: rs_stats(pooled[m], rs_threshold) for m in MODE_ORDER},
        length_conformity_pct=(
            100.0 * n_conforming / n_blocks if n_blocks else None
        ),
        rs_threshold=rs_threshold,
        cpl_bounds=(min_cpl, max_cpl),
        segments=tuple(per_segment),
    )


def _mode_dict(report: CorpusReport, mode: DisplayMode) -> dict:
    stats = report.rs_by_mode.get(mode)
    entry: dict = {
        "delay_ms": report.delay_by_mode.get(mode),
    }
    if stats is None:
        entry.update(
            {"rs_mean": None, "rs_std": None, "pct_conforming": None, "n_samples": 0}
        )
    else:
        entry.update(
            {
                "rs_mean": stats.mean,
                "rs_std": stats.std_dev,
                "pct_conforming": stats.pct_conforming,
                "n_samples": stats.n_samples,
            }
        )
    return entry


def report_to_dict(report: CorpusReport, per_segment: bool = False) -> dict:
    """Machine-readable report document."""
    doc: dict = {
        "segments": report.n_segments,
        "al_ms": report.average_lagging if report.n_segments else None,
        "rs_threshold_cps": report.rs_threshold,
        "cpl_bounds": list(report.cpl_bounds),
        "length_conformity_pct": report.length_conformity_pct,
        "modes": {mode.value: _mode_dict(report, mode) for mode in MODE_ORDER},
    }
    if per_segment:
        doc["per_segment"] = [
            {
                "id": seg.segment_id,
                "al_ms": seg.average_lagging,
                "delay_ms": {m.value: seg.delay_by_mode[m] for m in MODE_ORDER},
            }
            for seg in report.segments
        ]
    return doc


def render_table(report: CorpusReport) -> str:
    """Aligned text table: one row per display mode."""
    header = f"{'mode':<6}  {'rs':>12}  {'<=' + format(report.rs_threshold, 'g') + 'cps':>8}  {'delay':>6}"
    rows = [header]
    if report.n_segments == 0:
        rows.append("(empty corpus)")
        return "\n".join(rows) + "\n"
    for mode in MODE_ORDER:
        stats = report.rs_by_mode.get(mode)
        delay = report.delay_by_mode.get(mode)
        if stats is None:
            rs_text, pct_text = "-", "-"
        else:
            rs_text = f"{stats.mean:.1f} ± {stats.std_dev:.1f}"
            pct_text = f"{stats.pct_conforming:.0f}%"
        delay_text = f"{delay:.0f}" if delay is not None else "-"
        rows.append(f"{mode.value:<6}  {rs_text:>12}  {pct_text:>8}  {delay_text:>6}")
    conf = report.length_conformity_pct
    rows.append(
        f"length conformity ({report.cpl_bounds[0]}-{report.cpl_bounds[1]} cpl): "
        + (f"{conf:.0f}%" if conf is not None else "-")
    )
    rows.append(f"AL: {report.average_lagging:.0f} ms over {report.n_segments} segments")
    return "\n".join(rows) + "\n"


def write_report(report: CorpusReport, per_segment: bool = False) -> str:
    """Serialize the report as deterministic JSON."""
    return json.dumps(report_to_dict(report, per_segment), ensure_ascii=False, indent=2) + "\n"
