"""Poi spin state machine.

A state records which hand is currently up and on which side of the
shoulder line each hand is. Every beat the down hand rotates up and the up
hand rotates down. Only the ascending hand may cross to the other side of
the body: move ``R`` toggles its side, move ``B`` leaves both sides alone.
The crossing count is the number of hands off their natural side.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import BadProbability, BadStateString, InputError, NoCycle
from .graph import StateGraph
from .random_walk import TransitionKernel, parse_probability

LEFT, RIGHT = "L", "R"
HANDS = (LEFT, RIGHT)
NATURAL_SIDE = {LEFT: "l", RIGHT: "r"}
MOVE, STAY = "R", "B"
LABELS = (STAY, MOVE)


@dataclass(frozen=True)
class PoiState:
    up: str
    left_side: str
    right_side: str

    def __post_init__(self):
        if self.up not in HANDS or self.left_side not in "lr" or self.right_side not in "lr":
            raise BadStateString(f"bad poi state {self!r}")

    @property
    def crossing_count(self) -> int:
        return (self.left_side != NATURAL_SIDE[LEFT]) + (self.right_side != NATURAL_SIDE[RIGHT])

    @property
    def is_ground(self) -> bool:
        return self.crossing_count == 0

    @property
    def id(self) -> str:
        return f"up={self.up};L@{self.left_side};R@{self.right_side};c={self.crossing_count}"

    def __lt__(self, other):
        return self.id < other.id

    def __str__(self):
        return self.id


GROUND_LEFT_UP = PoiState(LEFT, "l", "r")
GROUND_RIGHT_UP = PoiState(RIGHT, "l", "r")
GROUND_STATES = (GROUND_LEFT_UP, GROUND_RIGHT_UP)


def parse_poi_state(text: str) -> PoiState:
    """Inverse of ``PoiState.id``; the ``c=`` field is optional but checked if given."""
    fields = {}
    for part in text.strip().split(";"):
        if not part:
            continue
        if "=" in part:
            key, _, val = part.partition("=")
        elif "@" in part:
            key, _, val = part.partition("@")
            key += "@"
        else:
            raise BadStateString(f"cannot parse poi state {text!r}")
        fields[key.strip()] = val.strip()
    try:
        state = PoiState(fields["up"].upper(), fields["L@"].lower(), fields["R@"].lower())
    except KeyError:
        raise BadStateString(f"poi state {text!r} needs up=, L@ and R@ fields") from None
    if "c" in fields and fields["c"] != str(state.crossing_count):
        raise BadStateString(f"crossing count in {text!r} disagrees with the sides")
    return state


def parse_word(text: str) -> str:
    """Normalize a move word; spaces and parentheses are ignored, so ``"(R)RRB(RRR)"`` is accepted."""
    word = "".join(ch for ch in text.upper() if ch not in " ()")
    if not word:
        raise InputError("a poi word needs at least one move")
    bad = [ch for ch in word if ch not in LABELS]
    if bad:
        raise InputError(f"poi words use only R and B, got {bad[0]!r}")
    return word


def poi_advance(state: PoiState, label: str) -> PoiState:
    rising = RIGHT if state.up == LEFT else LEFT
    left, right = state.left_side, state.right_side
    if label == MOVE:
        if rising == LEFT:
            left = "r" if left == "l" else "l"
        else:
            right = "r" if right == "l" else "l"
    elif label != STAY:
        raise InputError(f"unknown poi move {label!r}")
    return PoiState(rising, left, right)


def all_poi_states() -> list[PoiState]:
    return sorted(PoiState(up, l, r) for up, l, r in product(HANDS, "lr", "lr"))


def build_poi_graph() -> StateGraph:
    nodes = tuple(all_poi_states())
    edges = {s: {lab: poi_advance(s, lab) for lab in LABELS} for s in nodes}
    return StateGraph("poi", {}, nodes, edges)


def run_word(start: PoiState, word: str) -> tuple[PoiState, list[PoiState]]:
    """Fold the moves over ``start``; the trajectory holds every state after ``start``."""
    trajectory = []
    state = start
    for label in word:
        state = poi_advance(state, label)
        trajectory.append(state)
    return state, trajectory


def is_cycle(start: PoiState, word: str) -> bool:
    return run_word(start, word)[0] == start


def word_orbit(start: PoiState, word: str) -> list[PoiState]:
    """States visited while repeating ``word`` from ``start`` until it closes.

    Starts with ``start``; the length is a multiple of ``len(word)``. Each
    move permutes the eight states, so every start closes eventually.
    """
    states = [start]
    state = start
    for _ in range(len(all_poi_states())):
        for label in word:
            state = poi_advance(state, label)
            states.append(state)
        if state == start:
            return states[:-1]
    raise NoCycle(f"{word} does not close from {start}")


def _boundary_states(start, word):
    orbit = word_orbit(start, word)
    return orbit[:: len(word)]


def weave_starts(word: str) -> list[PoiState]:
    """States from which ``word`` runs as a steady pattern that cannot begin at ground.

    These are the word-boundary states of every orbit that never has a
    ground state at a word boundary.
    """
    starts = []
    for s in all_poi_states():
        if not any(b.is_ground for b in _boundary_states(s, word)):
            starts.append(s)
    return starts


def stays_grounded(word: str) -> bool:
    return all(s.is_ground for s in word_orbit(GROUND_LEFT_UP, word))


def _entry_search(word):
    """``(ground start, entry moves, state reached)`` or ``None`` for an empty entry."""
    if stays_grounded(word):
        return None
    targets = set(weave_starts(word))
    if not targets:
        return None
    frontier = [(g, g, "") for g in GROUND_STATES]
    seen = set(GROUND_STATES)
    while frontier:
        for origin, state, path in frontier:
            if state in targets:
                return origin, path, state
        nxt = []
        for origin, state, path in frontier:
            for label in LABELS:
                succ = poi_advance(state, label)
                if succ not in seen:
                    seen.add(succ)
                    nxt.append((origin, succ, path + label))
        frontier = nxt
    raise NoCycle(f"no cycle of {word} is reachable from ground")


def find_entry(target_word: str) -> str:
    """Shortest move word taking a ground state onto the target word's cycle.

    Returns ``""`` when the word can be juggled straight from ground: either
    it never leaves ground, or none of its cycles avoids ground at the word
    boundaries. Ties prefer B over R position by position; ground with the
    left hand up is tried first.
    """
    found = _entry_search(parse_word(target_word))
    return "" if found is None else found[1]


def entry_state(word: str) -> PoiState:
    """Where a steady performance of ``word`` starts: after its entry moves, else left-up ground."""
    found = _entry_search(parse_word(word))
    return GROUND_LEFT_UP if found is None else found[2]


def poi_kernel(p_move) -> TransitionKernel:
    p = parse_probability(p_move)
    if not 0 < p < 1:
        raise BadProbability(f"move probability must lie strictly between 0 and 1, got {p_move!r}")
    graph = build_poi_graph()
    probs = {s: {STAY: 1 - p, MOVE: p} for s in graph.nodes}
    return TransitionKernel(graph, probs)
