"""Screen schedules for the three live-subtitle display modes.

Each scheduler turns timed subtitle units into a time-ordered sequence of
screen states (what rows are visible, from when to when) plus the first time
each word becomes visible. The final state of a segment is open-ended
(``offset=None``) until closed for rendering or export.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .core import SubtitleBlock, SubtitleLine, TokenEvent

__all__ = [
    "DisplayMode",
    "ScreenState",
    "DisplaySchedule",
    "WordBlock",
    "MAX_ROW_CHARS",
    "group_word_blocks",
    "schedule_word_mode",
    "schedule_block_mode",
    "schedule_line_mode",
    "close_schedule",
]

# Maximum characters of a full subtitle row (TED-style two-line block).
MAX_ROW_CHARS = 84


class DisplayMode(Enum):
    WORD_FOR_WORD = "word"
    BLOCKS = "block"
    SCROLLING_LINES = "line"


@dataclass(frozen=True)
class ScreenState:
    """Rows visible on screen during [onset, offset)."""

    rows: tuple[str, ...]
    onset: float
    offset: float | None  # None: open-ended final state


@dataclass(frozen=True)
class DisplaySchedule:
    """Time-ordered screen states for one segment in one display mode.

    ``word_display_times[i]`` is the first time the i-th word (in emission
    order) is visible.
    """

    mode: DisplayMode
    states: tuple[ScreenState, ...]
    word_display_times: dict[int, float]


@dataclass(frozen=True)
class WordBlock:
    """A greedy group of words filling one word-for-word display row."""

    words: tuple[TokenEvent, ...]
    char_length: int

    @property
    def text(self) -> str:
        return " ".join(w.surface for w in self.words)


def group_word_blocks(
    events: Sequence[TokenEvent], max_chars: int = MAX_ROW_CHARS
) -> tuple[WordBlock, ...]:
    """Pack words greedily into rows of at most max_chars characters.

    Break tokens are skipped: word-for-word display ignores the subtitle
    structure. Character count is word lengths plus one space between
    adjacent words. A single word longer than max_chars gets its own block.
    """
    blocks: list[WordBlock] = []
    cur: list[TokenEvent] = []
    cur_len = 0
    for ev in events:
        if not ev.is_word:
            continue
        added = len(ev.surface) if not cur else cur_len + 1 + len(ev.surface)
        if cur and added > max_chars:
            blocks.append(WordBlock(tuple(cur), cur_len))
            cur = [ev]
            cur_len = len(ev.surface)
        else:
            cur.append(ev)
            cur_len = added
    if cur:
        blocks.append(WordBlock(tuple(cur), cur_len))
    return tuple(blocks)


def _append_state(
    states: list[ScreenState], rows: tuple[str, ...], onset: float, offset: float | None
) -> None:
    # Burst emissions produce zero-length states; collapse them so states
    # tile time without overlap.
    if offset is not None and offset <= onset:
        return
    states.append(ScreenState(rows, onset, offset))


def schedule_word_mode(
    blocks: Sequence[WordBlock], eos_time: float | None = None
) -> DisplaySchedule:
    """Word-for-word display: each word appears when emitted; the row is
    cleared when the next block's first word is emitted (or at segment end)."""
    states: list[ScreenState] = []
    display_times: dict[int, float] = {}
    word_index = 0
    for b, block in enumerate(blocks):
        if b + 1 < len(blocks):
            block_end: float | None = blocks[b + 1].words[0].emit_time
        else:
            block_end = eos_time
        row = ""
        for i, w in enumerate(block.words):
            display_times[word_index] = w.emit_time
            word_index += 1
            row = w.surface if not row else row + " " + w.surface
            if i + 1 < len(block.words):
                offset: float | None = block.words[i + 1].emit_time
            else:
                offset = block_end
            _append_state(states, (row,), w.emit_time, offset)
    return DisplaySchedule(DisplayMode.WORD_FOR_WORD, tuple(states), display_times)


def schedule_block_mode(blocks: Sequence[SubtitleBlock]) -> DisplaySchedule:
    """Block display: a block becomes visible when completed and stays until
    the next block is completed."""
    states: list[ScreenState] = []
    display_times: dict[int, float] = {}
    word_index = 0
    for b, block in enumerate(blocks):
        for _ in block.words:
            display_times[word_index] = block.block_time
            word_index += 1
        offset = blocks[b + 1].block_time if b + 1 < len(blocks) else None
        rows = tuple(line.text for line in block.lines)
        _append_state(states, rows, block.block_time, offset)
    return DisplaySchedule(DisplayMode.BLOCKS, tuple(states), display_times)


def schedule_line_mode(lines: Sequence[SubtitleLine]) -> DisplaySchedule:
    """Scrolling-lines display: a finished line enters the lower row, moves
    to the upper row when the next line arrives, and disappears after two
    later lines have appeared."""
    states: list[ScreenState] = []
    display_times: dict[int, float] = {}
    word_index = 0
    for l, line in enumerate(lines):
        for _ in line.words:
            display_times[word_index] = line.break_time
            word_index += 1
        if l == 0:
            rows: tuple[str, ...] = (line.text,)
        else:
            rows = (lines[l - 1].text, line.text)
        offset = lines[l + 1].break_time if l + 1 < len(lines) else None
        _append_state(states, rows, line.break_time, offset)
    return DisplaySchedule(DisplayMode.SCROLLING_LINES, tuple(states), display_times)


def close_schedule(schedule: DisplaySchedule, end_time: float) -> DisplaySchedule:
    """Close an open-ended final state at end_time (typically segment end
    plus the conservative wait-k delay)."""
    if not schedule.states or schedule.states[-1].offset is not None:
        return schedule
    last = schedule.states[-1]
    closed = ScreenState(last.rows, last.onset, max(end_time, last.onset))
    return DisplaySchedule(
        schedule.mode, schedule.states[:-1] + (closed,), schedule.word_display_times
    )
