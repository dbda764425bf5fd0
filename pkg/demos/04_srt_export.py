"""Export a blocks-mode schedule as a SubRip (.srt) file.

Run: python3 demos/04_srt_export.py
"""

from livesubs import (
    EmissionLog,
    close_schedule,
    export_srt,
    extract_blocks,
    parse_token_stream,
    schedule_block_mode,
)

raw = [
    ("One", 0.84), ("moment", 1.12), ("<eol>", 1.40),
    ("please", 1.68), ("<eob>", 1.96),
    ("thank", 2.24), ("you", 2.52), ("<eob>", 2.80), ("<eos>", 3.08),
]
log = EmissionLog("demo", source_duration=3.2, wait_k=3,
                  events=parse_token_stream(raw))

schedule = schedule_block_mode(extract_blocks(log.events))
# the last block has no successor; close it conservatively at end + DELAY_K
schedule = close_schedule(schedule, log.end_time + log.delay_k)
print(export_srt(schedule))
