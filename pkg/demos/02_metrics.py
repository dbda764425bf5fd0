"""Reading speed and latency for one segment, mode by mode.

Run: python3 demos/02_metrics.py
"""

from livesubs import (
    EmissionLog,
    average_lagging,
    display_delay,
    extract_blocks,
    extract_lines,
    group_word_blocks,
    parse_token_stream,
    rs_blocks,
    rs_lines,
    rs_stats,
    rs_word_blocks,
    schedule_block_mode,
    schedule_line_mode,
    schedule_word_mode,
)

raw = [
    ("Good", 0.84), ("evening", 1.12), ("everyone", 1.40), ("<eob>", 1.68),
    ("welcome", 1.96), ("to", 2.24), ("<eol>", 2.52),
    ("the", 2.80), ("show", 3.08), ("<eob>", 3.36),
]
log = EmissionLog("demo", source_duration=3.5, wait_k=3,
                  events=parse_token_stream(raw))
delay_k = log.delay_k

blocks = extract_blocks(log.events)
lines = extract_lines(log.events)
word_groups = group_word_blocks(log.events)

al = average_lagging(log)
print(f"Average Lagging: {al:.0f} ms  (wait-{log.wait_k}, DELAY_K = {delay_k:.2f}s)\n")

for name, samples, schedule in [
    ("word", rs_word_blocks(word_groups, delay_k), schedule_word_mode(word_groups)),
    ("block", rs_blocks(blocks, delay_k), schedule_block_mode(blocks)),
    ("line", rs_lines(lines, delay_k), schedule_line_mode(lines)),
]:
    stats = rs_stats(samples)
    delay = display_delay(schedule, log, al)
    print(f"{name:>5}: rs {stats.mean:5.1f} ± {stats.std_dev:4.1f} cps   "
          f"<=21 cps {stats.pct_conforming:3.0f}%   delay {delay:5.0f} ms")

print("\nThe word-for-word delay equals the lagging; block and line modes add")
print("the wait for the closing break, with lines becoming visible earlier.")
