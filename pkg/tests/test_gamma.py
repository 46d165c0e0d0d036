import pytest

from gammafuzz.errors import (
    AssociativityViolation,
    CarrierTooLarge,
    EmptySubset,
    InvalidParameters,
    InvalidZero,
    MissingTableEntry,
    NotAnIdeal,
    UnknownElement,
)
from gammafuzz.gamma import (
    PRIME_CRITERIA,
    build,
    crisp_extension,
    enumerate_ideals,
    ideal_closure,
    ideal_product,
    is_commutative,
    is_ideal,
    is_prime_ideal,
    is_regular,
    is_semiprime_ideal,
    make_modular,
    modular_gamma_closure,
    power_element,
    prime_failure,
    semiprime_failure,
)
from gammafuzz.harness import load_catalog

from oracles import naive_ideals, naive_prime, naive_semiprime


def mod_tables(n):
    return (
        lambda a, g, b: (int(a) * int(g) * int(b)) % n,
        lambda g, a, h: (int(g) * int(a) * int(h)) % n,
    )


class TestBuild:
    def test_z4_full_is_valid(self, z4):
        assert z4.size == 4 and z4.gamma_size == 4
        assert z4.zero == "0"

    def test_singleton(self, single):
        assert single.op_sgs("a", "g", "a") == "a"

    def test_mutated_entry_is_rejected(self):
        sgs, gsg = mod_tables(4)
        mutated = lambda a, g, b: 2 if (a, g, b) == ("1", "1", "1") else sgs(a, g, b)
        with pytest.raises(AssociativityViolation) as info:
            build(range(4), range(4), mutated, gsg)
        assert info.value.law == 1
        assert len(info.value.tuple_ids) == 5

    def test_gamma_op_must_be_associative(self):
        sgs, gsg = mod_tables(4)
        bad = lambda g, a, h: 3 if (g, a, h) == ("1", "1", "1") else gsg(g, a, h)
        with pytest.raises(AssociativityViolation):
            build(range(4), range(4), sgs, bad)

    def test_missing_entry(self):
        with pytest.raises(MissingTableEntry):
            build(["a", "b"], ["g"], {("a", "g", "a"): "a"}, lambda g, a, h: "g")

    def test_unknown_value(self):
        with pytest.raises(UnknownElement):
            build(["a"], ["g"], lambda a, g, b: "z", lambda g, a, h: "g")

    def test_zero_must_absorb(self):
        sgs, gsg = mod_tables(4)
        with pytest.raises(InvalidZero):
            build(range(4), range(4), sgs, gsg, zero=1)

    def test_operations(self, z4):
        assert z4.op_sgs(1, 3, 2) == "2"
        assert z4.op_gsg(3, 2, 3) == "2"


class TestModular:
    def test_unclosed_gamma_is_rejected(self):
        # 0 = 1·0·1 must lie in Γ
        with pytest.raises(InvalidParameters, match="closure is"):
            make_modular(4, [1, 3])

    def test_closure(self):
        assert modular_gamma_closure(4, [1, 3]) == [0, 1, 2, 3]
        assert modular_gamma_closure(4, [2]) == [0, 2]
        assert make_modular(4, [2], close=True).gamma == ("0", "2")

    def test_singleton(self):
        G = make_modular(1, [0])
        assert G.carrier == ("0",) and G.zero == "0"

    @pytest.mark.parametrize("bad", [0, -1])
    def test_bad_n(self, bad):
        with pytest.raises(InvalidParameters):
            make_modular(bad, [0])


class TestIdeals:
    def test_membership(self, z4, z4_even):
        assert is_ideal(z4_even, {"0", "2"})
        assert is_ideal(z4, z4.carrier)
        assert not is_ideal(z4, {"1"})  # 2·1·1 = 2

    def test_empty_subset(self, z4):
        with pytest.raises(EmptySubset):
            is_ideal(z4, set())

    def test_products(self, z4):
        assert ideal_product(z4, {"2"}, {"2"}) == {"0"}
        assert ideal_product(z4, {"1", "3"}, {"2"}) == {"0", "2"}
        assert ideal_product(z4, {"0"}, {"1", "3"}) == {"0"}

    def test_closure(self, z4):
        assert ideal_closure(z4, {"2"}) == {"0", "2"}
        assert ideal_closure(z4, {"1"}) == set(z4.carrier)
        assert ideal_closure(z4, z4.carrier) == set(z4.carrier)

    def test_enumerate(self, z4, z4_even, single):
        assert enumerate_ideals(z4) == [{"0"}, {"0", "2"}, {"0", "1", "2", "3"}]
        assert enumerate_ideals(z4_even) == [
            {"0"}, {"0", "2"}, {"0", "1", "2"}, {"0", "2", "3"}, {"0", "1", "2", "3"}
        ]
        assert enumerate_ideals(single) == [{"a"}]

    def test_one_sided(self, left_zero):
        assert enumerate_ideals(left_zero, "left") == [{"a", "b"}]
        assert enumerate_ideals(left_zero, "right") == [{"a"}, {"b"}, {"a", "b"}]

    @pytest.mark.parametrize("side", ["left", "right", "two-sided"])
    def test_enumeration_matches_subset_scan(self, side):
        for entry in load_catalog():
            if entry.G.size <= 6:
                assert set(enumerate_ideals(entry.G, side)) == set(naive_ideals(entry.G, side)), entry.name

    def test_cap(self):
        G = make_modular(13, [0], close=True)
        with pytest.raises(CarrierTooLarge):
            enumerate_ideals(G)


class TestPrime:
    @pytest.mark.parametrize("criterion", PRIME_CRITERIA)
    def test_even_ideal_is_prime(self, z4, criterion):
        assert is_prime_ideal(z4, {"0", "2"}, criterion)
        assert is_semiprime_ideal(z4, {"0", "2"}, criterion)

    @pytest.mark.parametrize("criterion", PRIME_CRITERIA)
    def test_full_carrier_is_degenerately_prime(self, z4, criterion):
        assert is_prime_ideal(z4, z4.carrier, criterion)

    def test_zero_ideal_is_not_prime(self, z4):
        assert prime_failure(z4, {"0"}) == ("2", "2")
        assert semiprime_failure(z4, {"0"}) == "2"
        assert prime_failure(z4, {"0"}, "subsets") == ({"0", "2"}, {"0", "2"})

    def test_requires_an_ideal(self, z4):
        with pytest.raises(NotAnIdeal):
            is_prime_ideal(z4, {"1"})

    def test_unknown_criterion(self, z4):
        with pytest.raises(InvalidParameters):
            is_prime_ideal(z4, {"0"}, "bogus")

    def test_matches_oracle_on_catalog(self):
        for entry in load_catalog():
            G = entry.G
            if G.size > 6:
                continue
            for I in enumerate_ideals(G):
                assert is_prime_ideal(G, I) == naive_prime(G, I), (entry.name, I)
                assert is_semiprime_ideal(G, I) == naive_semiprime(G, I), (entry.name, I)


class TestRegularity:
    def test_z5_regular(self, z5):
        r = is_regular(z5)
        assert r and r.failing is None
        for c, (x, g1, g2) in r.witnesses.items():
            assert z5.op_sgs(z5.op_sgs(c, g1, x), g2, c) == c

    def test_even_gamma_not_regular(self, z4_even):
        r = is_regular(z4_even)
        assert not r and r.failing == "1"

    def test_singleton(self, single):
        assert is_regular(single)


class TestExtensionAndPowers:
    def test_crisp_extension(self, z4):
        assert crisp_extension(z4, "2", {"0", "2"}) == set(z4.carrier)
        assert crisp_extension(z4, "1", {"0"}) == {"0"}
        assert crisp_extension(z4, "3", z4.carrier) == set(z4.carrier)

    def test_powers(self, z4):
        assert power_element(z4, "3", "1", 0) == "3"
        assert power_element(z4, "3", "1", 1) == "1"
        assert power_element(z4, "2", "2", 2) == "0"
        with pytest.raises(InvalidParameters):
            power_element(z4, "1", "1", -1)

    def test_commutativity(self, z4, single, left_zero):
        assert is_commutative(z4)
        assert is_commutative(single)
        assert not is_commutative(left_zero)
