import pytest
from hypothesis import given, strategies as st

from twistlat.core_order import (
    Carrier,
    Involution,
    check_involution,
    comparable_with_all,
    dual,
    hasse_covers,
    is_distributive,
    is_join_irreducible,
    is_meet_irreducible,
    validate_lattice,
)
from twistlat.errors import NotALattice, NotAPoset, UnknownLabel
from twistlat.search import antitone_involutions, enumerate_lattices

from helpers import (
    CHAIN4,
    CHAIN4_COVERS,
    N5,
    N5_COVERS,
    naive_glb,
    naive_lub,
    reachability,
)

SMALL_LATTICES = [lat for n in range(1, 6) for lat in enumerate_lattices(n)]


class TestValidateLattice:
    def test_chain4_meet_min_join_max(self, chain4):
        for x in range(4):
            for y in range(4):
                assert chain4.meet[x][y] == min(x, y)
                assert chain4.join[x][y] == max(x, y)
        assert chain4.bottom == chain4.index("0")
        assert chain4.top == chain4.index("1")

    def test_one_point_lattice(self):
        lat = validate_lattice(Carrier(("0",)), [], covers=True)
        assert lat.bottom == lat.top == 0
        assert lat.size == 1

    def test_n5_bounds(self, n5):
        a, b, c = n5.index("a"), n5.index("b"), n5.index("c")
        assert n5.join[a][c] == n5.index("1")
        assert n5.meet[b][c] == n5.index("0")

    def test_missing_top_is_not_a_lattice(self):
        with pytest.raises(NotALattice) as err:
            validate_lattice(Carrier(("0", "p", "q")), [("0", "p"), ("0", "q")], covers=True)
        assert err.value.witness == ("p", "q")

    def test_full_relation_mode_accepts_explicit_order(self, chain4):
        rel = reachability(CHAIN4, CHAIN4_COVERS)
        rebuilt = validate_lattice(Carrier(CHAIN4), sorted(rel), covers=False)
        assert rebuilt == chain4

    def test_full_relation_mode_requires_reflexivity(self):
        with pytest.raises(NotAPoset) as err:
            validate_lattice(Carrier(("x", "y")), [("x", "y")], covers=False)
        assert err.value.witness == ("x",)

    def test_antisymmetry_violation(self):
        with pytest.raises(NotAPoset) as err:
            validate_lattice(Carrier(("x", "y")), [("x", "y"), ("y", "x")], covers=True)
        assert err.value.witness == ("x", "y")

    def test_transitivity_violation(self):
        pairs = [("x", "x"), ("y", "y"), ("z", "z"), ("x", "y"), ("y", "z")]
        with pytest.raises(NotAPoset) as err:
            validate_lattice(Carrier(("x", "y", "z")), pairs, covers=False)
        assert err.value.witness == ("x", "y", "z")

    def test_unknown_label(self):
        with pytest.raises(UnknownLabel):
            validate_lattice(Carrier(("x",)), [("x", "w")], covers=True)

    def test_tables_match_naive_bounds(self, n5):
        rel = reachability(N5, N5_COVERS)
        for x in N5:
            for y in N5:
                xi, yi = n5.index(x), n5.index(y)
                assert n5.label(n5.meet[xi][yi]) == naive_glb(N5, rel, x, y)
                assert n5.label(n5.join[xi][yi]) == naive_lub(N5, rel, x, y)


class TestDistributivity:
    def test_chain_is_distributive(self, chain4):
        assert is_distributive(chain4).passed

    def test_n5_witness(self, n5):
        rep = is_distributive(n5)
        assert not rep.passed
        assert rep.witness == ("b", "a", "c")
        # re-check the witness by hand: b∧(a∨c) = b∧1 = b but (b∧a)∨(b∧c) = a
        b, a, c = (n5.index(k) for k in ("b", "a", "c"))
        assert n5.meet[b][n5.join[a][c]] != n5.join[n5.meet[b][a]][n5.meet[b][c]]

    def test_l6_is_distributive(self, l6):
        assert is_distributive(l6).passed


class TestIrreducibilityAndComparability:
    def test_chain_element(self, chain4):
        a = chain4.index("a")
        assert is_join_irreducible(chain4, a)
        assert is_meet_irreducible(chain4, a)
        assert comparable_with_all(chain4, a)

    def test_l6_c_is_join_reducible(self, l6):
        assert not is_join_irreducible(l6, l6.index("c"))

    def test_bottom_is_join_irreducible(self, l6, n5):
        assert is_join_irreducible(l6, l6.bottom)
        assert is_join_irreducible(n5, n5.bottom)

    def test_incomparable_elements(self, l6, n5):
        assert not comparable_with_all(l6, l6.index("a"))
        assert not comparable_with_all(n5, n5.index("a"))


class TestInvolution:
    def test_l6_table_passes(self, l6, l6_inv):
        assert check_involution(l6, l6_inv).passed

    def test_identity_on_two_chain_fails(self, two_chain):
        rep = check_involution(two_chain, (0, 1))
        assert not rep.passed
        assert rep.witness == ("0", "1")

    def test_identity_on_one_point_passes(self):
        lat = validate_lattice(Carrier(("0",)), [], covers=True)
        assert check_involution(lat, (0,)).passed

    def test_pass_implies_anti_automorphism(self):
        # a valid involution swaps meets and joins
        for lat in SMALL_LATTICES:
            for inv in antitone_involutions(lat):
                for x in range(lat.size):
                    for y in range(lat.size):
                        assert inv(lat.meet[x][y]) == lat.join[inv(x)][inv(y)]
                        assert inv(lat.join[x][y]) == lat.meet[inv(x)][inv(y)]

    def test_malformed_table_rejected(self, chain4):
        with pytest.raises(ValueError):
            check_involution(chain4, (0, 1))
        with pytest.raises(ValueError):
            check_involution(chain4, (0, 1, 2, 9))


class TestHasseCovers:
    def test_chain4(self, chain4):
        got = [(chain4.label(x), chain4.label(y)) for x, y in hasse_covers(chain4)]
        assert got == CHAIN4_COVERS

    def test_n5(self, n5):
        got = {(n5.label(x), n5.label(y)) for x, y in hasse_covers(n5)}
        assert got == set(N5_COVERS)

    def test_l6(self, l6):
        got = {(l6.label(x), l6.label(y)) for x, y in hasse_covers(l6)}
        assert got == {
            ("0", "a"), ("0", "b"), ("a", "c"), ("b", "c"), ("a", "d"), ("c", "1"), ("d", "1"),
        }


@given(st.sampled_from(SMALL_LATTICES))
def test_meet_join_commute_and_absorb(lat):
    for x in range(lat.size):
        for y in range(lat.size):
            assert lat.meet[x][y] == lat.meet[y][x]
            assert lat.join[x][y] == lat.join[y][x]
            assert lat.meet[x][lat.join[x][y]] == x
            assert lat.join[x][lat.meet[x][y]] == x


@given(st.sampled_from(SMALL_LATTICES))
def test_order_recoverable_from_meet(lat):
    for x in range(lat.size):
        for y in range(lat.size):
            assert lat.leq[x][y] == (lat.meet[x][y] == x)


@given(st.sampled_from(SMALL_LATTICES))
def test_cover_closure_reproduces_order(lat):
    covers = [(lat.label(x), lat.label(y)) for x, y in hasse_covers(lat)]
    rebuilt = validate_lattice(lat.carrier, covers, covers=True)
    assert rebuilt.leq == lat.leq


@given(st.sampled_from(SMALL_LATTICES))
def test_distributivity_is_self_dual(lat):
    assert is_distributive(lat).passed == is_distributive(dual(lat)).passed


def test_dual_swaps_bounds(chain4):
    d = dual(chain4)
    assert d.bottom == chain4.top and d.top == chain4.bottom
    assert d.meet == chain4.join and d.join == chain4.meet


def test_carrier_rejects_bad_labels():
    with pytest.raises(ValueError):
        Carrier(())
    with pytest.raises(ValueError):
        Carrier(("a", "a"))
    with pytest.raises(ValueError):
        Carrier(("a", ""))
