import pytest
from hypothesis import given

from strategies import boolean_functions, profiles
from torusdeg.boolean import (
    BooleanFunction,
    SymmetricProfile,
    and_function,
    coerce_point,
    delta,
    delta_at_least,
    index_bits,
    majority,
    parity,
    point_index,
)
from torusdeg.errors import DimensionMismatch, MalformedInput


def test_little_endian_indexing():
    assert point_index([1, 0, 0]) == 1
    assert point_index([0, 0, 1]) == 4
    assert index_bits(6, 3) == (0, 1, 1)
    assert coerce_point("001", 3) == 4
    with pytest.raises(DimensionMismatch):
        coerce_point([1, 0], 3)
    with pytest.raises(DimensionMismatch):
        coerce_point(8, 3)


def test_named_profiles():
    assert delta(3, 1).values == (0, 1, 0, 0)
    assert delta_at_least(3, 2).values == (0, 0, 1, 1)
    assert majority(4).values == (0, 0, 1, 1, 1)
    assert majority(7).values == (0, 0, 0, 0, 1, 1, 1, 1)
    assert parity(4).values == (0, 1, 0, 1, 0)
    assert and_function(3).values == (0, 0, 0, 1)


def test_function_evaluation():
    f = BooleanFunction.from_callable(3, lambda x: x[0] and not x[2])
    assert f([1, 1, 0]) == 1 and f("101") == 0
    assert not f.is_symmetric()
    with pytest.raises(ValueError):
        f.to_profile()


@given(profiles())
def test_profile_function_round_trip(b):
    f = b.to_function()
    assert f.is_symmetric()
    assert f.to_profile() == b
    assert SymmetricProfile.from_bits(b.bits) == b


@given(boolean_functions())
def test_hex_round_trip(f):
    assert BooleanFunction.from_hex(f.n, f.to_hex()) == f


def test_validation():
    with pytest.raises(DimensionMismatch):
        SymmetricProfile(3, (0, 1))
    with pytest.raises(DimensionMismatch):
        BooleanFunction(1, 16)
    with pytest.raises(MalformedInput):
        SymmetricProfile.from_bits("01x")
    with pytest.raises(MalformedInput):
        BooleanFunction.from_hex(2, "zz")
