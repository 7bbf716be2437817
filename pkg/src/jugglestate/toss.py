"""Toss-juggling states, the transition rule, and state graphs.

A state with capacity ``m`` is the set of future beats (0 = now) at which
airborne particles come down. At each beat the juggler either waits (no
particle lands now, throw 0) or rethrows the landing particle ``t`` beats
ahead, which must not collide with another particle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import (
    BadParameters,
    BadStateString,
    CapacityTooSmall,
    Collision,
    InvalidPattern,
    MustThrow,
    MustWait,
    NotATransition,
    OutOfRange,
)
from .graph import StateGraph
from .siteswap import MAX_THROW, SiteswapPattern, as_pattern, validate


@dataclass(frozen=True, order=True)
class TossState:
    occupied: tuple[int, ...]
    capacity: int

    def __post_init__(self):
        occ = tuple(sorted(self.occupied))
        object.__setattr__(self, "occupied", occ)
        if self.capacity < 1:
            raise BadParameters("capacity must be >= 1")
        if len(set(occ)) != len(occ):
            raise BadParameters(f"duplicate beats in {occ}")
        if occ and (occ[0] < 0 or occ[-1] >= self.capacity):
            raise BadParameters(f"{occ} not inside 0..{self.capacity - 1}")

    @property
    def k(self) -> int:
        return len(self.occupied)

    @property
    def id(self) -> str:
        return ",".join(map(str, self.occupied))

    def __contains__(self, beat):
        return beat in self.occupied

    def __str__(self):
        return "{" + self.id + "}"


def parse_state(text: str, capacity: int) -> TossState:
    """Parse the comma-separated form ``"0,2,3"`` (braces optional)."""
    body = text.strip().strip("{}").strip()
    if not body:
        return TossState((), capacity)
    try:
        beats = [int(part) for part in body.split(",")]
    except ValueError:
        raise BadStateString(f"cannot parse state {text!r}") from None
    if len(set(beats)) != len(beats) or any(not 0 <= b < capacity for b in beats):
        raise BadStateString(f"state {text!r} is not a subset of 0..{capacity - 1}")
    return TossState(tuple(beats), capacity)


def ground_state(k: int, m: int) -> TossState:
    return TossState(tuple(range(k)), m)


def advance(state: TossState, throw: int) -> TossState:
    m = state.capacity
    if throw < 0 or throw > m:
        raise OutOfRange(f"throw {throw} outside 0..{m}")
    shifted = tuple(b - 1 for b in state.occupied if b != 0)
    if 0 not in state:
        if throw != 0:
            raise MustWait(f"nothing lands now in {state}; only a 0 is possible")
        return TossState(shifted, m)
    if throw == 0:
        raise MustThrow(f"a particle lands now in {state}; 0 is impossible")
    if throw - 1 in shifted:
        raise Collision(f"throw {throw} from {state} collides")
    return TossState(shifted + (throw - 1,), m)


def admissible_throws(state: TossState) -> list[int]:
    if 0 not in state:
        return [0]
    rest = {b - 1 for b in state.occupied if b != 0}
    return [t for t in range(1, state.capacity + 1) if t - 1 not in rest]


def all_states(k: int, m: int) -> list[TossState]:
    return [TossState(c, m) for c in combinations(range(m), k)]


def build_state_graph(k: int, m: int) -> StateGraph:
    if not (0 <= k <= m and 1 <= m <= MAX_THROW):
        raise BadParameters(f"need 0 <= k <= m <= {MAX_THROW} and m >= 1, got k={k}, m={m}")
    nodes = tuple(sorted(all_states(k, m)))
    edges = {s: {t: advance(s, t) for t in admissible_throws(s)} for s in nodes}
    return StateGraph("toss", {"k": k, "m": m}, nodes, edges)


def _default_capacity(pattern: SiteswapPattern) -> int:
    return max(pattern.max_throw, 1)


def pattern_states(pattern, m: int | None = None) -> list[TossState]:
    """The state just before each beat of one period of ``pattern``."""
    pattern = as_pattern(pattern)
    if not validate(pattern).valid:
        raise InvalidPattern(f"{pattern} is not a valid siteswap")
    if m is None:
        m = _default_capacity(pattern)
    if m < pattern.max_throw or m < 1:
        raise CapacityTooSmall(f"capacity {m} below max throw {pattern.max_throw}")
    n = pattern.period
    # anything thrown before i - m has already landed by beat i
    base = m * n
    states = []
    for i in range(base, base + n):
        occ = set()
        for j in range(i - m, i):
            d = j + pattern.throws[j % n] - i
            if d >= 0:
                occ.add(d)
        states.append(TossState(tuple(occ), m))
    return states


def cycle_to_pattern(states) -> SiteswapPattern:
    states = list(states)
    throws = []
    for i, s in enumerate(states):
        nxt = states[(i + 1) % len(states)]
        labels = [t for t in admissible_throws(s) if advance(s, t) == nxt]
        if len(labels) != 1:
            raise NotATransition(i)
        throws.append(labels[0])
    return SiteswapPattern(tuple(throws))


def find_transition(src: TossState, dst: TossState) -> list[int]:
    """Shortest throw sequence from ``src`` to ``dst``, lexicographically least on ties.

    Breadth-first search expanding labels in ascending order: the first time a
    node is reached, it is reached by the least shortest path.
    """
    if (src.k, src.capacity) != (dst.k, dst.capacity):
        raise BadParameters("states must share particle count and capacity")
    parent = {src: None}
    queue = deque([src])
    while queue:
        s = queue.popleft()
        if s == dst:
            break
        for t in admissible_throws(s):
            nxt = advance(s, t)
            if nxt not in parent:
                parent[nxt] = (s, t)
                queue.append(nxt)
    path = []
    node = dst
    while parent[node] is not None:
        node, t = parent[node]
        path.append(t)
    return path[::-1]
