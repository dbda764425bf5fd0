"""Core domain types for timed subtitle token streams.

A token stream is a sequence of (surface, emission time) pairs. Surfaces are
either words or the break symbols ``<eol>`` (end of line), ``<eob>`` (end of
subtitle block) and ``<eos>`` (end of audio segment). All times are seconds
from the start of the source audio.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

__all__ = [
    "TokenKind",
    "Terminator",
    "TokenEvent",
    "EmissionLog",
    "SubtitleLine",
    "SubtitleBlock",
    "StreamError",
    "NonMonotonicTimeError",
    "EmptySurfaceError",
    "parse_token_stream",
    "extract_blocks",
    "extract_lines",
    "delay_k_seconds",
]

EOL_SURFACE = "<eol>"
EOB_SURFACE = "<eob>"
EOS_SURFACE = "<eos>"


class StreamError(ValueError):
    """Malformed token stream."""


class NonMonotonicTimeError(StreamError):
    """A timestamp decreases along the stream."""


class EmptySurfaceError(StreamError):
    """A token has an empty surface form."""


class TokenKind(Enum):
    WORD = "word"
    END_OF_LINE = "eol"
    END_OF_BLOCK = "eob"
    END_OF_SEGMENT = "eos"


_BREAK_KINDS = {
    EOL_SURFACE: TokenKind.END_OF_LINE,
    EOB_SURFACE: TokenKind.END_OF_BLOCK,
    EOS_SURFACE: TokenKind.END_OF_SEGMENT,
}


class Terminator(Enum):
    """What closed a subtitle unit."""

    END_OF_LINE = "eol"
    END_OF_BLOCK = "eob"
    # Trailing words with no explicit break before segment end.
    IMPLICIT_END = "implicit"


def classify_surface(surface: str) -> TokenKind:
    """Map a surface form to its token kind (break symbols are exact matches)."""
    return _BREAK_KINDS.get(surface, TokenKind.WORD)


@dataclass(frozen=True)
class TokenEvent:
    """One emitted token with its emission timestamp."""

    surface: str
    kind: TokenKind
    emit_time: float

    def __post_init__(self) -> None:
        if not self.surface:
            raise EmptySurfaceError("token surface is empty")
        if self.kind is TokenKind.WORD and any(c.isspace() for c in self.surface):
            raise StreamError(f"word surface contains whitespace: {self.surface!r}")
        if self.emit_time < 0:
            raise StreamError(f"negative emission time: {self.emit_time}")

    @property
    def is_word(self) -> bool:
        return self.kind is TokenKind.WORD


def parse_token_stream(
    raw: Iterable[tuple[str, float]],
) -> tuple[TokenEvent, ...]:
    """Classify raw (surface, emit_time) pairs into token events.

    Order and timestamps are preserved. Raises NonMonotonicTimeError if a
    timestamp decreases, EmptySurfaceError on an empty surface.
    """
    events: list[TokenEvent] = []
    last_t = float("-inf")
    for surface, t in raw:
        if t < last_t:
            raise NonMonotonicTimeError(
                f"emission time decreases: {t} after {last_t}"
            )
        last_t = t
        events.append(TokenEvent(surface, classify_surface(surface), t))
    return tuple(events)


@dataclass(frozen=True)
class SubtitleLine:
    """A break-delimited subtitle line with per-word timestamps."""

    words: tuple[TokenEvent, ...]
    break_time: float
    terminator: Terminator

    @property
    def text(self) -> str:
        return " ".join(w.surface for w in self.words)

    @property
    def char_length(self) -> int:
        return len(self.text)


@dataclass(frozen=True)
class SubtitleBlock:
    """A subtitle block: the lines shown on screen together."""

    lines: tuple[SubtitleLine, ...]
    block_time: float
    terminator: Terminator

    @property
    def words(self) -> tuple[TokenEvent, ...]:
        return tuple(w for line in self.lines for w in line.words)

    @property
    def text(self) -> str:
        """Block text: non-empty line texts joined by a single space."""
        return " ".join(line.text for line in self.lines if line.words)

    @property
    def char_length(self) -> int:
        return len(self.text)


def delay_k_seconds(wait_k: int, step_size: float = 0.280) -> float:
    """Conservative stand-in for the unknown next emission time at segment end."""
    if wait_k < 1:
        raise ValueError(f"wait_k must be >= 1, got {wait_k}")
    if step_size <= 0:
        raise ValueError(f"step_size must be > 0, got {step_size}")
    return step_size * wait_k


@dataclass(frozen=True)
class EmissionLog:
    """One audio segment's emission sequence plus policy parameters.

    ``consumed_source`` optionally records, per event, how much source audio
    (seconds) had been consumed when the token was emitted; simulated logs
    carry it so latency can be computed exactly.
    """

    segment_id: str
    source_duration: float
    wait_k: int
    step_size: float = 0.280
    events: tuple[TokenEvent, ...] = ()
    consumed_source: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        if self.source_duration <= 0:
            raise StreamError(
                f"source_duration must be > 0, got {self.source_duration}"
            )
        if self.wait_k < 1:
            raise StreamError(f"wait_k must be >= 1, got {self.wait_k}")
        if self.step_size <= 0:
            raise StreamError(f"step_size must be > 0, got {self.step_size}")
        last_t = float("-inf")
        for i, ev in enumerate(self.events):
            if ev.emit_time < last_t:
                raise NonMonotonicTimeError(
                    f"segment {self.segment_id}: emission time decreases at event {i}"
                )
            last_t = ev.emit_time
            if ev.kind is TokenKind.END_OF_SEGMENT and i != len(self.events) - 1:
                raise StreamError(
                    f"segment {self.segment_id}: <eos> is not the last event"
                )
        if self.consumed_source is not None and len(self.consumed_source) != len(
            self.events
        ):
            raise StreamError(
                f"segment {self.segment_id}: consumed_source length mismatch"
            )

    @property
    def delay_k(self) -> float:
        return delay_k_seconds(self.wait_k, self.step_size)

    @property
    def words(self) -> tuple[TokenEvent, ...]:
        return tuple(ev for ev in self.events if ev.is_word)

    @property
    def end_time(self) -> float:
        return self.events[-1].emit_time if self.events else 0.0


def _finish_line(
    words: list[TokenEvent], break_event: TokenEvent | None, last_time: float
) -> SubtitleLine:
    if break_event is None:
        return SubtitleLine(tuple(words), last_time, Terminator.IMPLICIT_END)
    term = (
        Terminator.END_OF_LINE
        if break_event.kind is TokenKind.END_OF_LINE
        else Terminator.END_OF_BLOCK
    )
    return SubtitleLine(tuple(words), break_event.emit_time, term)


def extract_blocks(events: Sequence[TokenEvent]) -> tuple[SubtitleBlock, ...]:
    """Split a parsed event sequence into subtitle blocks.

    One block per ``<eob>``; ``<eol>`` splits lines inside a block. A trailing
    run without ``<eob>`` forms a final implicit block whose block_time is the
    last event's emission time. ``<eos>`` never contributes words.
    """
    blocks: list[SubtitleBlock] = []
    cur_words: list[TokenEvent] = []
    cur_lines: list[SubtitleLine] = []
    for ev in events:
        if ev.kind is TokenKind.WORD:
            cur_words.append(ev)
        elif ev.kind is TokenKind.END_OF_LINE:
            cur_lines.append(_finish_line(cur_words, ev, ev.emit_time))
            cur_words = []
        elif ev.kind is TokenKind.END_OF_BLOCK:
            cur_lines.append(_finish_line(cur_words, ev, ev.emit_time))
            cur_words = []
            blocks.append(
                SubtitleBlock(tuple(cur_lines), ev.emit_time, Terminator.END_OF_BLOCK)
            )
            cur_lines = []
        # <eos> only closes the segment
    if cur_words:
        cur_lines.append(_finish_line(cur_words, None, events[-1].emit_time))
    if cur_lines:
        blocks.append(
            SubtitleBlock(
                tuple(cur_lines), cur_lines[-1].break_time, Terminator.IMPLICIT_END
            )
        )
    return tuple(blocks)


def extract_lines(events: Sequence[TokenEvent]) -> tuple[SubtitleLine, ...]:
    """Split a parsed event sequence into lines, treating <eol> and <eob>
    as one unified delimiter. Trailing words form an implicit final line."""
    lines: list[SubtitleLine] = []
    cur_words: list[TokenEvent] = []
    for ev in events:
        if ev.kind is TokenKind.WORD:
            cur_words.append(ev)
        elif ev.kind in (TokenKind.END_OF_LINE, TokenKind.END_OF_BLOCK):
            lines.append(_finish_line(cur_words, ev, ev.emit_time))
            cur_words = []
    if cur_words:
        lines.append(_finish_line(cur_words, None, events[-1].emit_time))
    return tuple(lines)
