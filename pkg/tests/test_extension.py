from fractions import Fraction as F

import pytest

from gammafuzz.errors import NotAnIFI, NotCommutative
from gammafuzz.extension import (
    extend,
    extension_fixed_point_check,
    extension_is_ifi,
    extension_is_ifpi,
    extension_is_ifri,
    extension_is_ifspi,
    fixed_point_candidates,
    fixed_point_converse,
    is_constant,
    is_extremal,
)
from gammafuzz.gamma import crisp_extension
from gammafuzz.ideals import whole_space
from gammafuzz.ifs import characteristic_pair, constant_ifs, ifs_build, ifs_leq, step_ifs

from oracles import as_dict, naive_extend


def test_constant_stays_constant(z4):
    A = constant_ifs(z4, "1/3", "1/2")
    assert extend(z4, "3", A) == A


def test_even_pair_extends_to_whole_space(z4):
    assert extend(z4, "2", characteristic_pair(z4, {"0", "2"})) == whole_space(z4)


def test_extension_by_zero_is_constant(snapshot, example_A):
    E = extend(snapshot, "0", example_A)
    assert is_constant(E) and E["-3"] == (1, 0)


def test_example_values_away_from_zero(snapshot, example_A):
    E = extend(snapshot, "-1", example_A)
    assert E["0"] == (1, 0)
    assert E["-1"] == (F(1, 10), F(7, 10))
    assert E["-2"] == (F(1, 5), F(7, 10))


def test_matches_oracle(z4_even, snapshot, example_A, left_zero):
    A = ifs_build(z4_even, ["1/2", "1/4", 1, 0], ["1/2", "1/2", 0, "1/10"])
    for x in z4_even.carrier:
        assert as_dict(extend(z4_even, x, A)) == naive_extend(z4_even, x, A)
    for x in snapshot.carrier:
        assert as_dict(extend(snapshot, x, example_A)) == naive_extend(snapshot, x, example_A)


def test_crisp_commutation(z4):
    for P in ({"0"}, {"0", "2"}, {"1", "3"}):
        for x in z4.carrier:
            assert extend(z4, x, characteristic_pair(z4, P)) == characteristic_pair(
                z4, crisp_extension(z4, x, P)
            )


def test_preservation(z4):
    A = step_ifs(z4, {"0", "2"}, "9/10", "1/10", "1/20", "4/5")
    for x in z4.carrier:
        assert extension_is_ifi(z4, x, A)
        assert extension_is_ifri(z4, x, A)
        assert ifs_leq(A, extend(z4, x, A))
    P = characteristic_pair(z4, {"0", "2"})
    assert extension_is_ifpi(z4, "1", P) and extension_is_ifspi(z4, "1", P)


def test_commutativity_required(left_zero):
    A = constant_ifs(left_zero, "1/2", "1/2")
    with pytest.raises(NotCommutative):
        extension_is_ifi(left_zero, "a", A)
    assert extension_is_ifri(left_zero, "a", A)


def test_extremal(z4, example_A):
    P = characteristic_pair(z4, {"0", "2"})
    assert is_extremal(P, "1") and not is_extremal(P, "2")
    # μ is least at -1, ν is largest below -2: no element is extremal
    assert not any(is_extremal(example_A, x) for x in example_A.carrier)
    assert not is_constant(example_A) and is_constant(whole_space(z4))


def test_fixed_points(z4):
    P = characteristic_pair(z4, {"0", "2"})
    assert extension_fixed_point_check(z4, P, "1")
    Q = characteristic_pair(z4, {"0"})
    assert not extension_fixed_point_check(z4, Q, "2")
    assert extend(z4, "2", Q)["2"] == (1, 0)
    with pytest.raises(NotAnIFI):
        extension_fixed_point_check(z4, characteristic_pair(z4, {"1"}), "1")


def test_converse_helper(z4):
    P = characteristic_pair(z4, {"0", "2"})
    assert fixed_point_candidates(P) == ["1", "3"]
    assert fixed_point_converse(z4, P) is True
    # ⟨2, χ{0}⟩ ≠ χ{0}: premise not met
    assert fixed_point_converse(z4, characteristic_pair(z4, {"0"})) is None
    assert fixed_point_converse(z4, whole_space(z4)) is None
