"""Vanilla siteswap notation: parsing, validation, particle counts."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import EmptyInput, InvalidCharacter, InvalidPattern

MAX_THROW = 35
_ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"


def throw_char(value: int) -> str:
    if not 0 <= value <= MAX_THROW:
        raise InvalidPattern(f"throw {value} outside 0..{MAX_THROW}")
    return _ALPHABET[value]


@dataclass(frozen=True)
class SiteswapPattern:
    throws: tuple[int, ...]

    def __post_init__(self):
        throws = tuple(self.throws)
        object.__setattr__(self, "throws", throws)
        if not throws:
            raise EmptyInput("a pattern needs period >= 1")
        for t in throws:
            if not isinstance(t, int) or isinstance(t, bool) or not 0 <= t <= MAX_THROW:
                raise InvalidPattern(f"throw {t!r} outside 0..{MAX_THROW}")

    @property
    def period(self) -> int:
        return len(self.throws)

    @property
    def max_throw(self) -> int:
        return max(self.throws)

    def __len__(self):
        return len(self.throws)

    def __getitem__(self, i):
        return self.throws[i]

    def __str__(self):
        return "".join(throw_char(t) for t in self.throws)


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    particle_count: int | None = None
    collisions: list[tuple[int, int]] = field(default_factory=list)


def parse_siteswap(text: str) -> SiteswapPattern:
    """Parse ``"450"`` or ``"b1"`` style notation; letters a-z stand for 10-35."""
    if not text:
        raise EmptyInput("empty siteswap")
    throws = []
    for pos, ch in enumerate(text):
        idx = _ALPHABET.find(ch.lower()) if ch.isascii() else -1
        if idx < 0:
            raise InvalidCharacter(pos, ch)
        throws.append(idx)
    return SiteswapPattern(tuple(throws))


def as_pattern(pattern) -> SiteswapPattern:
    if isinstance(pattern, SiteswapPattern):
        return pattern
    if isinstance(pattern, str):
        return parse_siteswap(pattern)
    return SiteswapPattern(tuple(pattern))


def validate(pattern) -> ValidityReport:
    """Landing-residue permutation test.

    The pattern is valid iff ``(i + throws[i]) mod n`` hits every residue
    exactly once. Invalid patterns are reported, not raised.
    """
    pattern = as_pattern(pattern)
    n = pattern.period
    by_residue: dict[int, list[int]] = {}
    for i, t in enumerate(pattern.throws):
        by_residue.setdefault((i + t) % n, []).append(i)
    collisions = []
    for beats in by_residue.values():
        for a in range(len(beats)):
            for b in range(a + 1, len(beats)):
                collisions.append((beats[a], beats[b]))
    if collisions:
        return ValidityReport(False, None, sorted(collisions))
    total = sum(pattern.throws)
    assert total % n == 0
    return ValidityReport(True, total // n, [])


def particle_count(pattern) -> int:
    report = validate(pattern)
    if not report.valid:
        raise InvalidPattern(f"{as_pattern(pattern)} is not a valid siteswap")
    return report.particle_count


def canonical_rotation(pattern) -> SiteswapPattern:
    pattern = as_pattern(pattern)
    t = pattern.throws
    return SiteswapPattern(min(t[i:] + t[:i] for i in range(len(t))))
