import pytest
from hypothesis import given, strategies as st

from jugglestate.errors import EmptyInput, InvalidCharacter, InvalidPattern
from jugglestate.siteswap import (
    SiteswapPattern,
    canonical_rotation,
    parse_siteswap,
    particle_count,
    validate,
)

from oracles import airborne_count, landing_collisions

throw_lists = st.lists(st.integers(0, 7), min_size=1, max_size=5)


def rotations(throws):
    return [throws[i:] + throws[:i] for i in range(len(throws))]


@pytest.mark.parametrize(
    "text, throws",
    [("450", (4, 5, 0)), ("0", (0,)), ("b1", (11, 1)), ("B1", (11, 1)), ("z", (35,))],
)
def test_parse(text, throws):
    p = parse_siteswap(text)
    assert p.throws == throws
    assert p.period == len(text)


def test_parse_errors():
    with pytest.raises(EmptyInput):
        parse_siteswap("")
    with pytest.raises(InvalidCharacter) as info:
        parse_siteswap("45-")
    assert info.value.position == 2 and info.value.char == "-"
    with pytest.raises(InvalidCharacter):
        parse_siteswap("4é")


def test_b1_is_valid_by_oracle():
    # letter convention cross-checked against the landing simulator
    assert not landing_collisions([11, 1])
    assert validate(parse_siteswap("b1")) == validate([11, 1])
    assert validate("b1").particle_count == 6 == airborne_count([11, 1])


def test_validate_examples():
    r = validate([4, 5, 0])
    assert r.valid and r.particle_count == 3 and r.collisions == []

    r = validate([5, 4, 3])
    assert not r.valid and r.particle_count is None
    assert (0, 1) in r.collisions
    # every throw lands on beat 5, so all pairs collide
    assert r.collisions == [(0, 1), (0, 2), (1, 2)]
    assert landing_collisions([5, 4, 3])

    assert validate([0]) == validate("0")
    assert validate([0]).particle_count == 0
    assert validate([3]).particle_count == 3 == airborne_count([3])


def test_particle_count():
    assert particle_count([4, 5, 0]) == 3
    assert particle_count([0]) == 0
    assert particle_count([5, 2, 2]) == 3
    with pytest.raises(InvalidPattern):
        particle_count([5, 4, 3])


def test_canonical_rotation():
    assert canonical_rotation([4, 5, 0]).throws == (0, 4, 5)
    assert canonical_rotation([3]).throws == (3,)
    assert canonical_rotation([5, 2, 2]).throws == (2, 2, 5)


def test_pattern_rejects_bad_values():
    with pytest.raises(EmptyInput):
        SiteswapPattern(())
    with pytest.raises(InvalidPattern):
        SiteswapPattern((36,))
    with pytest.raises(InvalidPattern):
        SiteswapPattern((-1,))


@given(throw_lists)
def test_rotation_invariance(throws):
    base = validate(throws)
    for r in rotations(throws):
        other = validate(r)
        assert other.valid == base.valid
        assert other.particle_count == base.particle_count
    canon = canonical_rotation(throws)
    assert validate(canon).valid == base.valid


@given(throw_lists)
def test_matches_landing_simulator(throws):
    report = validate(throws)
    assert report.valid == (not landing_collisions(throws))
    assert report.valid == (not report.collisions)
    if report.valid:
        assert report.particle_count * len(throws) == sum(throws)
        assert report.particle_count == airborne_count(throws)


@given(throw_lists)
def test_integrality(throws):
    if validate(throws).valid:
        assert sum(throws) % len(throws) == 0


@given(st.text(alphabet="0123456789abcdefghijklmnopqrstuvwxyz", min_size=1, max_size=8))
def test_render_round_trip(text):
    assert str(parse_siteswap(text)) == text
