#!/usr/bin/env python3
"""Regenerate fixtures/pairwise5_panel26.csv.

A synthetic pairwise-choice panel shaped like a classic repeated binary
choice experiment: 26 subjects, 5 gambles, every pair presented 20 times.
The first four subjects are hand-built anchors:

* s01 flips a fair coin on every pair (maximally rational),
* s02 follows a fixed ranking with a 16/4 split (strongly transitive),
* s03 carries a mild 13/7 cycle on the first three gambles,
* s04 carries a harder 14/6 cycle, nested strictly inside s03's
  irrationality interval so the comparison order is never trivial.

The remaining 22 subjects draw their winner counts from SplitMix64 with a
fixed seed, so the file is reproducible byte for byte.

Usage: python3 scripts/make_panel_fixture.py [out.csv]
"""

import itertools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from stochrat import SplitMix64

GAMBLES = ["g1", "g2", "g3", "g4", "g5"]
TRIALS = 20
SEED = 26052
CYCLE = {("g1", "g2"), ("g2", "g3"), ("g3", "g1")}


def anchor_counts(subject: str, a: str, b: str) -> tuple[int, int]:
    if subject == "s01":
        return 10, 10
    if subject == "s02":
        return (16, 4) if a < b else (4, 16)
    wins = {"s03": 13, "s04": 14}[subject]
    if (a, b) in CYCLE:
        return wins, TRIALS - wins
    if (b, a) in CYCLE:
        return TRIALS - wins, wins
    return (wins, TRIALS - wins) if a < b else (TRIALS - wins, wins)


def rows() -> list[tuple[str, str, str, int]]:
    gen = SplitMix64(SEED)
    out = []
    for index in range(1, 27):
        subject = f"s{index:02d}"
        for a, b in itertools.combinations(GAMBLES, 2):
            if index <= 4:
                wins_a, wins_b = anchor_counts(subject, a, b)
            else:
                wins_a = gen.below(TRIALS + 1)
                wins_b = TRIALS - wins_a
            out.append((subject, f"{a}|{b}", a, wins_a))
            out.append((subject, f"{a}|{b}", b, wins_b))
    return out


def main() -> None:
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else (
        Path(__file__).resolve().parent.parent / "fixtures" / "pairwise5_panel26.csv"
    )
    lines = ["subject,menu,alternative,count,prob"]
    for subject, menu, alternative, count in rows():
        lines.append(f"{subject},{menu},{alternative},{count},")
    target.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {target} ({len(lines) - 1} rows)")


if __name__ == "__main__":
    main()
