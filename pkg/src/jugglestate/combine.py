"""Siteswap with a poi move word layered on top, beat by beat."""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .poi import PoiState, entry_state, parse_word, poi_advance
from .siteswap import SiteswapPattern, as_pattern
from .toss import TossState, advance, pattern_states


@dataclass(frozen=True)
class TimelineRow:
    beat: int
    throw: int
    label: str
    toss_state: TossState
    poi_state: PoiState


@dataclass(frozen=True)
class CombinedPattern:
    toss: SiteswapPattern
    spin: str
    notation_period: int
    full_period: int
    poi_start: str  # "entry" or "ground"
    timeline: tuple[TimelineRow, ...]

    def closing_states(self) -> tuple[TossState, PoiState]:
        """The pair reached after the last timeline row."""
        last = self.timeline[-1]
        return advance(last.toss_state, last.throw), poi_advance(last.poi_state, last.label)


def combine(toss, spin: str, m: int | None = None) -> CombinedPattern:
    """Align beat ``i`` with ``toss[i mod n]`` and ``spin[i mod w]`` and run until both layers close.

    The toss layer starts from the state before the pattern's first throw.
    The poi layer starts after the word's entry moves when the word has a
    cycle that avoids ground, otherwise from ground with the left hand up.
    """
    toss = as_pattern(toss)
    word = parse_word(spin)
    toss_start = pattern_states(toss, m)[0]
    poi_start = entry_state(word)
    notation_period = lcm(toss.period, len(word))

    rows = []
    t_state, p_state = toss_start, poi_start
    beat = 0
    while True:
        for _ in range(notation_period):
            throw = toss.throws[beat % toss.period]
            label = word[beat % len(word)]
            rows.append(TimelineRow(beat, throw, label, t_state, p_state))
            t_state = advance(t_state, throw)
            p_state = poi_advance(p_state, label)
            beat += 1
        if t_state == toss_start and p_state == poi_start:
            break
    return CombinedPattern(
        toss, word, notation_period, len(rows),
        "ground" if poi_start.is_ground else "entry", tuple(rows),
    )
