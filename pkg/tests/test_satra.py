from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ganita import satra
from ganita.errors import DomainError, ParseError
from ganita.satra import (
    BrickCollection,
    CalendarConfig,
    CalendarState,
    KRSNA,
    SUKLA,
    default_registry,
    equal_partitions_of,
    equal_split,
    resolve_token,
    round_robin,
    simulate,
    split_collection,
    step_day,
    tithi_name,
)

ATTESTED = [1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 16, 18, 20, 24]


def test_time_units():
    assert satra.MUHURTAS_PER_DAY == 30
    assert satra.MUHURTAS_PER_HALF_DAY == 15
    assert satra.PRATI_MUHURTAS_PER_MUHURTA == 15
    assert satra.ritual_year_muhurtas() == 360 * 30 == 10800
    assert satra.ritual_year_bricks() == 720


def test_attested_partitions_of_720():
    pairs = equal_partitions_of(720, sb_filter=True)
    assert [k for k, _ in pairs] == ATTESTED
    assert all(k * size == 720 for k, size in pairs)
    for pair in [(4, 180), (6, 120), (10, 72), (24, 30)]:
        assert pair in pairs
    assert pairs[-1] == (24, 30)


def test_unfiltered_partitions_are_all_divisors():
    assert [k for k, _ in equal_partitions_of(720)] == [k for k in range(1, 721) if 720 % k == 0]
    assert equal_partitions_of(1) == [(1, 1)]


def test_round_robin_against_division():
    for k in range(1, 721):
        bodies = round_robin(720, k)
        q, r = divmod(720, k)
        assert sorted(bodies, reverse=True) == [q + 1] * r + [q] * (k - r)


def test_seven_bodies_leave_remainder():
    with pytest.raises(DomainError, match="no equal split exists: 6 brick"):
        equal_split(720, 7)


def test_split_collection():
    assert split_collection(BrickCollection(720, [720]), 5).bodies == (144,) * 5
    assert split_collection(BrickCollection(720, [360, 360]), 2).bodies == (360, 360)
    with pytest.raises(DomainError, match="no equal split exists"):
        split_collection(BrickCollection(10, [10]), 3)
    with pytest.raises(DomainError):
        BrickCollection(10, [3, 3])


@given(st.lists(st.integers(min_value=1, max_value=60), min_size=1, max_size=8), st.integers(1, 30))
def test_split_conserves_bricks(bodies, k):
    c = BrickCollection(sum(bodies), bodies)
    try:
        out = split_collection(c, k)
    except DomainError:
        assert c.total % k != 0
    else:
        assert out.total == c.total == sum(out.bodies) and out.equal


def test_tokens():
    reg = default_registry()
    assert resolve_token(reg, "yajuṣamatī-brick", "day-count") == "one day-or-night of 360"
    assert resolve_token(reg, "yajuṣamatī-brick", "season") == "one season"
    with pytest.raises(DomainError, match="ambiguous without context"):
        resolve_token(reg, "yajuṣamatī-brick")
    with pytest.raises(DomainError, match="unknown token"):
        resolve_token(reg, "altar-stone", "day-count")
    assert resolve_token(reg, "enclosing-stone", "day-count") != resolve_token(
        reg, "yajuṣamatī-brick", "day-count"
    )


def test_registry_is_persistent():
    reg = default_registry()
    more = reg.register("pebble", "count", "one")
    assert "pebble" in more and "pebble" not in reg


def test_tithi_names():
    assert tithi_name(1, SUKLA) == "prathama"
    assert tithi_name(4, KRSNA) == "caturthī"
    assert tithi_name(15, KRSNA) == "amāvasyā"
    assert tithi_name(15, SUKLA) == "pūrṇamāsī"
    assert tithi_name(7, SUKLA) == "7th"
    with pytest.raises(DomainError):
        tithi_name(16, SUKLA)


def test_sadaha_cycles():
    s = CalendarState(sadaha_day=6, day_of_month=6)
    assert step_day(s).sadaha_day == 1


def test_thirty_day_months_have_five_sadahas():
    report = simulate(CalendarConfig(30, Fraction(3652422, 10000)), 30 * 40)
    assert set(report.months) == {30} and report.drops == 0
    assert set(report.sadaha_lengths) == {6}


def test_default_calendar_drops_days():
    report = simulate(CalendarConfig(), 3000)
    assert set(report.months) == {29, 30}
    assert report.drops == report.months.count(29)
    # dropped days shorten the current ṣaḍaha to five
    assert set(report.sadaha_lengths) <= {5, 6}


def months_oracle(synodic, n_months):
    """Independent replay: full moon k is first seen on day ceil(k*S); a month
    closes on its 29th day if that moon has been seen by then, else on its 30th."""
    lengths, boundary = [], 0
    for k in range(1, n_months + 1):
        t = k * synodic
        seen = -(-t.numerator // t.denominator)
        length = 29 if seen <= boundary + 29 else 30
        lengths.append(length)
        boundary += length
    return lengths


def test_month_lengths_match_accumulator_oracle():
    cfg = CalendarConfig()
    report = simulate(cfg, 3000)
    assert report.months == months_oracle(cfg.synodic_month_days, len(report.months))


def test_solstice_year_lengths():
    report = simulate(CalendarConfig(), 365 * 12)
    assert set(report.year_lengths) <= {365, 366}
    assert report.year_lengths


def test_yuga_labels_cycle():
    s = CalendarState()
    s2 = CalendarState(yuga_year=5)
    assert s.year_label == "year_1" and s2.year_label == "year_5"


def test_parse_config():
    cfg = satra.parse_config("# test\nsynodic_month_days = 29.5\n\ntropical_year_days=365.25\n")
    assert cfg.synodic_month_days == Fraction(59, 2)
    with pytest.raises(ParseError):
        satra.parse_config("moon=3")
    with pytest.raises(ParseError):
        satra.parse_config("synodic_month_days 3")
    with pytest.raises(DomainError):
        CalendarConfig(0, 365)


def test_report_json():
    doc = simulate(CalendarConfig(), 400).to_json()
    assert set(doc) >= {"months", "mean_month", "year_lengths", "drops", "histogram"}
    assert sum(doc["histogram"].values()) == len(doc["months"])
    with pytest.raises(DomainError):
        simulate(CalendarConfig(), 0)
