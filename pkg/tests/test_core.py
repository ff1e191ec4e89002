from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from ganita.core import (
    ExactScalar,
    Length,
    compare,
    convert,
    decimal_str,
    parse_length,
    rational_sqrt,
    reduce,
    UNIT_FACTORS,
)
from ganita.errors import DomainError, InexactError

F = Fraction
nonzero = st.integers().filter(lambda n: n != 0)


def test_reduce_examples():
    assert reduce(2, 4) == F(1, 2)
    assert reduce(4, 8) == F(1, 2)
    r = reduce(-6, -4)
    assert (r.numerator, r.denominator) == (3, 2)


def test_reduce_zero_denominator():
    with pytest.raises(DomainError, match="undefined fraction"):
        reduce(1, 0)


def test_reduce_never_overflows():
    big = 10**60 + 7
    r = reduce(big * 6, big * 4)
    assert (r.numerator, r.denominator) == (3, 2)


@given(st.integers(), nonzero)
def test_reduce_cross_multiplies_back(p, q):
    r = reduce(p, q)
    assert r.denominator > 0
    assert p * r.denominator == q * r.numerator


@given(st.fractions(), st.fractions(), st.fractions())
def test_rational_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a


# -- units --------------------------------------------------------------


def test_purusha_is_81_inches():
    assert convert(Length(1, "puruṣa"), "inch") == Length(81, "inch")
    assert convert(Length(1, "puruṣa"), "foot").magnitude == F(27, 4)


def test_angula_is_34_tila():
    assert convert(Length(1, "aṅgula"), "tila").magnitude == 34
    assert convert(Length(0, "puruṣa"), "tila").magnitude == 0


def test_unit_aliases():
    assert parse_length("35 ft") == Length(35, "foot")
    assert Length(1, "angula").unit == "aṅgula"


@pytest.mark.parametrize("unit", ["abstract", "hasta", "aratni"])
def test_unconvertible_units(unit):
    with pytest.raises(DomainError, match="incommensurable unit"):
        convert(Length(1, unit), "inch")
    with pytest.raises(DomainError, match="incommensurable unit"):
        convert(Length(1, "inch"), unit)


@given(st.fractions(), st.sampled_from(sorted(UNIT_FACTORS)), st.sampled_from(sorted(UNIT_FACTORS)))
def test_conversion_round_trip(x, a, b):
    assert convert(convert(Length(x, a), b), a) == Length(x, a)


# -- exact scalars ------------------------------------------------------


def test_compare_examples():
    root2 = ExactScalar.surd(1, 2)
    assert F(577, 408) ** 2 - 2 == F(1, 166464)
    assert compare(root2, ExactScalar.rational(F(577, 408))) == -1
    assert compare(ExactScalar.rational(F(4, 3)), root2) == -1
    assert compare(ExactScalar.surd(1, 4), ExactScalar.rational(2)) == 0


def test_surd_normalizes_perfect_squares():
    s = ExactScalar.surd(1, F(9, 4))
    assert s.kind == "rational"
    assert s.to_rational() == F(3, 2)
    assert ExactScalar.surd(1, 8) == ExactScalar.surd(2, 2)
    assert hash(ExactScalar.surd(1, 8)) == hash(ExactScalar.surd(2, 2))


def test_surd_arithmetic():
    r2 = ExactScalar.sqrt(2)
    assert r2 * r2 == 2
    assert (r2 + r2).square() == 8
    assert ExactScalar.sqrt(8) - r2 == r2
    assert 1 / r2 == ExactScalar.surd(F(1, 2), 2)
    assert ExactScalar.sqrt(F(17, 15)).square() == F(17, 15)


def test_mixed_addition_is_inexact():
    with pytest.raises(InexactError, match="inexact"):
        ExactScalar.sqrt(2) + 1
    with pytest.raises(InexactError):
        ExactScalar.sqrt(2) + ExactScalar.sqrt(3)


def test_zero_absorbs_in_addition():
    assert ExactScalar.sqrt(3) + 0 == ExactScalar.sqrt(3)


surds = st.builds(
    ExactScalar.surd,
    st.fractions(min_value=-100, max_value=100),
    st.fractions(min_value=F(1, 100), max_value=1000),
)


@given(surds, surds)
def test_compare_agrees_with_squares_for_positive(a, b):
    a, b = abs(a), abs(b)
    qa, qb = a.square(), b.square()
    assert compare(a, b) == (qa > qb) - (qa < qb)


@given(surds, surds)
def test_compare_is_antisymmetric_and_consistent_with_float(a, b):
    assert compare(a, b) == -compare(b, a)
    diff = float(a) - float(b)
    if abs(diff) > 1e-6:
        assert compare(a, b) == (1 if diff > 0 else -1)


@given(st.lists(surds, min_size=3, max_size=3))
def test_compare_is_transitive(xs):
    for a, b, c in permutations(xs):
        if compare(a, b) <= 0 and compare(b, c) <= 0:
            assert compare(a, c) <= 0


def test_rational_sqrt():
    assert rational_sqrt(F(49, 64)) == F(7, 8)
    assert rational_sqrt(2) is None
    assert rational_sqrt(-4) is None


def test_decimal_str_truncates():
    assert decimal_str(F(577, 408)) == "1.414215"
    assert decimal_str(ExactScalar.sqrt(2), 7) == "1.4142135"
    assert decimal_str(F(-1, 3), 3) == "-0.333"


def test_json_round_trip():
    for v in (ExactScalar(F(-3, 7)), ExactScalar.surd(F(2, 5), 3)):
        assert ExactScalar.from_json(v.to_json()) == v
    assert ExactScalar(F(1, 2)).to_json() == {"num": 1, "den": 2}
