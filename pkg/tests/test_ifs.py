from decimal import Decimal
from fractions import Fraction as F

import pytest

from gammafuzz.errors import (
    CarrierMismatch,
    DegreeError,
    EmptyFamily,
    InvalidParameters,
    MissingValue,
    ParameterOrderViolation,
    SumExceedsOne,
    UnknownElement,
)
from gammafuzz.ifs import (
    characteristic_pair,
    constant_ifs,
    degree,
    empty_ifs,
    ifs_box,
    ifs_build,
    ifs_complement,
    ifs_diamond,
    ifs_family_inf,
    ifs_family_sup,
    ifs_join,
    ifs_leq,
    ifs_meet,
    is_nonempty,
    level_cut,
    lower_cut,
    step_ifs,
    support,
    thresholds,
    upper_cut,
)

S3 = ["0", "-1", "-3"]


def test_degree_coercion():
    assert degree("0.1") == F(1, 10)
    assert degree("3/4") == F(3, 4)
    assert degree(Decimal("0.25")) == F(1, 4)
    assert degree(1) == 1
    for bad in (0.5, True, "abc", "2", "-1/2", None):
        with pytest.raises(DegreeError):
            degree(bad)


def test_snapshot_values_build():
    A = ifs_build(S3, {"0": 1, "-1": "1/10", "-3": "1/5"}, {"0": 0, "-1": "3/5", "-3": "7/10"})
    assert A["-1"] == (F(1, 10), F(3, 5))


def test_sum_must_not_exceed_one():
    with pytest.raises(SumExceedsOne):
        ifs_build(["a"], ["3/5"], ["1/2"])


def test_missing_and_unknown_values():
    with pytest.raises(MissingValue):
        ifs_build(["a", "b"], {"a": 0}, {"a": 0, "b": 0})
    with pytest.raises(UnknownElement):
        ifs_build(["a"], {"a": 0, "z": 0}, {"a": 0})


def test_empty_ifs_is_valid_but_empty():
    E = empty_ifs(S3)
    assert not is_nonempty(E)
    assert ifs_leq(E, constant_ifs(S3, "1/2", "1/2"))
    # non-empty needs μ ≢ 0 and ν ≢ 1 at once
    assert is_nonempty(ifs_build(["a", "b"], [0, "1/2"], [1, "1/2"]))
    assert not is_nonempty(ifs_build(["a", "b"], [0, 0], [1, "1/2"]))
    assert not is_nonempty(ifs_build(["a"], [0], ["1/2"]))


def test_box_and_diamond():
    A = ifs_build(["x"], ["1/2"], ["1/4"])
    assert ifs_box(A)["x"] == (F(1, 2), F(1, 2))
    B = ifs_build(["-1"], ["1/10"], ["3/5"])
    assert ifs_diamond(B)["-1"] == (F(2, 5), F(3, 5))
    # A ⊆ □A would need ν ≥ 1 − μ: 3/5 < 9/10 here, and □A ⊆ A holds
    assert ifs_leq(ifs_box(B), B) and not ifs_leq(B, ifs_box(B))
    assert ifs_leq(B, ifs_diamond(B))


def test_meet_join_complement():
    A = ifs_build(["p"], [1], [0])
    B = ifs_build(["p"], ["1/10"], ["3/5"])
    assert ifs_meet(A, B)["p"] == (F(1, 10), F(3, 5))
    assert ifs_join(A, B)["p"] == (1, 0)
    assert ifs_complement(B)["p"] == (F(3, 5), F(1, 10))
    assert ifs_family_inf([A, B]) == ifs_meet(A, B)
    assert ifs_family_sup([A, B, B]) == ifs_join(A, B)
    with pytest.raises(EmptyFamily):
        ifs_family_inf([])
    with pytest.raises(CarrierMismatch):
        ifs_meet(A, ifs_build(["q"], [1], [0]))


def test_cuts_and_support(example_A):
    assert upper_cut(example_A, 1) == {"0"}
    assert upper_cut(example_A, "1/5") == {"0", "-3", "-4"}
    assert lower_cut(example_A, "3/5") == {"0", "-1", "-2"}
    assert lower_cut(example_A, 0) == {"0"}
    assert level_cut(example_A, "1/10", "upper").members == set(example_A.carrier)
    with pytest.raises(InvalidParameters):
        level_cut(example_A, "1/2", "sideways")
    assert thresholds(example_A) == [0, F(1, 10), F(1, 5), F(3, 5), F(7, 10), 1]
    assert support(example_A) == set(example_A.carrier)
    assert support(ifs_build(["x", "y"], [0, "1/2"], ["1/2", "1/2"])) == {"y"}


def test_step_ifs():
    A = step_ifs(["0", "1", "2", "3"], {"0", "2"}, "9/10", "1/10", "1/20", "4/5")
    assert A["0"] == (F(9, 10), F(1, 20)) and A["1"] == (F(1, 10), F(4, 5))
    with pytest.raises(ParameterOrderViolation):
        step_ifs(["0"], {"0"}, "1/10", "9/10", 0, 0)
    with pytest.raises(SumExceedsOne):
        step_ifs(["0", "1"], {"0"}, "9/10", 0, "1/5", 1)
    P = characteristic_pair(["0", "1"], {"0"})
    assert P["0"] == (1, 0) and P["1"] == (0, 1)
