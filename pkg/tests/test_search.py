from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from twistlat.core_order import validate_lattice
from twistlat.errors import SizeOutOfRange, UnknownTarget
from twistlat.residuated import check_residuated, is_integral
from twistlat.search import (
    EnumerationTask,
    antitone_involutions,
    canonical_form,
    enumerate_lattices,
    enumerate_residuations,
    run_task,
)

SMALL_LATTICES = [lat for n in range(1, 6) for lat in enumerate_lattices(n)]


def oracle_lattice_class_count(n):
    """Independent count of n-element lattices up to isomorphism.

    Scans every upper-triangular reflexive relation (no forced bottom or top
    positions, unlike the library's enumerator), keeps the transitive ones in
    which every pair has a glb and lub, and deduplicates by the minimum
    relation encoding over permutations fixing the located bottom and top.
    """
    if n == 1:
        return 1
    free = [(i, j) for i in range(n) for j in range(i + 1, n)]
    classes = set()
    for bits in product((0, 1), repeat=len(free)):
        rel = [[i == j for j in range(n)] for i in range(n)]
        for (i, j), b in zip(free, bits):
            rel[i][j] = bool(b)
        ok = True
        for i in range(n):
            for j in range(n):
                if not rel[i][j]:
                    continue
                for k in range(n):
                    if rel[j][k] and not rel[i][k]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            continue
        for x in range(n):
            for y in range(x + 1, n):
                lower = [z for z in range(n) if rel[z][x] and rel[z][y]]
                if not any(all(rel[w][g] for w in lower) for g in lower):
                    ok = False
                    break
                upper = [z for z in range(n) if rel[x][z] and rel[y][z]]
                if not any(all(rel[g][w] for w in upper) for g in upper):
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        bottom = next(i for i in range(n) if all(rel[i][j] for j in range(n)))
        top = next(i for i in range(n) if all(rel[j][i] for j in range(n)))
        middles = [i for i in range(n) if i not in (bottom, top)]
        best = None
        for perm in permutations(middles):
            old = (bottom, *perm, top)
            enc = tuple(
                1 if rel[old[i]][old[j]] else 0 for i in range(n) for j in range(n)
            )
            if best is None or enc < best:
                best = enc
        classes.add(best)
    return len(classes)


class TestEnumerateLattices:
    def test_counts_match_independent_oracle(self):
        for n in range(1, 6):
            assert sum(1 for _ in enumerate_lattices(n)) == oracle_lattice_class_count(n)

    def test_known_class_counts(self):
        assert [sum(1 for _ in enumerate_lattices(n)) for n in range(1, 8)] == [
            1, 1, 1, 2, 5, 15, 53,
        ]

    def test_stream_is_deterministic(self):
        first = [canonical_form(lat) for lat in enumerate_lattices(5)]
        second = [canonical_form(lat) for lat in enumerate_lattices(5)]
        assert first == second == sorted(first)

    def test_every_lattice_revalidates(self):
        for lat in enumerate_lattices(5):
            rebuilt = validate_lattice(
                lat.carrier,
                [
                    (lat.label(i), lat.label(j))
                    for i in range(lat.size)
                    for j in range(lat.size)
                    if lat.leq[i][j]
                ],
                covers=False,
            )
            assert rebuilt == lat

    def test_n5_appears_at_size_five(self, n5):
        assert canonical_form(n5) in {canonical_form(lat) for lat in enumerate_lattices(5)}

    def test_size_out_of_range(self):
        with pytest.raises(SizeOutOfRange):
            list(enumerate_lattices(0))
        with pytest.raises(SizeOutOfRange):
            list(enumerate_lattices(8))


@settings(max_examples=60)
@given(st.data())
def test_relabelling_canonicalizes_back(data):
    lat = data.draw(st.sampled_from(SMALL_LATTICES))
    perm = data.draw(st.permutations(range(lat.size)))
    names = lat.carrier.names
    pairs = [
        (names[perm[i]], names[perm[j]])
        for i in range(lat.size)
        for j in range(lat.size)
        if lat.leq[i][j]
    ]
    relabeled = validate_lattice(lat.carrier, pairs, covers=False)
    assert canonical_form(relabeled) == canonical_form(lat)


class TestEnumerateResiduations:
    def test_two_chain_has_exactly_one(self, two_chain):
        rs = list(enumerate_residuations(two_chain))
        assert len(rs) == 1
        assert rs[0].mul == ((0, 0), (0, 1))

    def test_chain4_includes_the_min_monoid(self, chain4, chain4_r):
        rs = list(enumerate_residuations(chain4))
        assert len(rs) == 6
        assert any(r.mul == chain4_r.mul for r in rs)

    def test_l6_includes_the_case_split_monoid(self, l6, l6_r):
        rs = list(enumerate_residuations(l6))
        assert len(rs) == 2
        assert any(r.mul == l6_r.mul for r in rs)

    def test_n5_admits_none(self, n5):
        # join-preservation forces b·a = b on the pentagon, impossible below a∧b
        assert list(enumerate_residuations(n5)) == []

    def test_every_emitted_structure_revalidates(self):
        for lat in SMALL_LATTICES:
            for r in enumerate_residuations(lat):
                assert check_residuated(r).passed
                assert is_integral(r)

    def test_stream_is_deterministic(self, chain4):
        one = [r.mul for r in enumerate_residuations(chain4)]
        two = [r.mul for r in enumerate_residuations(chain4)]
        assert one == two


class TestAntitoneInvolutions:
    def test_chain_has_only_the_reversal(self, chain4):
        assert [inv.table for inv in antitone_involutions(chain4)] == [(3, 2, 1, 0)]

    def test_diamond_has_two(self, diamond):
        assert [inv.table for inv in antitone_involutions(diamond)] == [
            (3, 1, 2, 0), (3, 2, 1, 0),
        ]

    def test_l6_has_exactly_the_documented_one(self, l6, l6_inv):
        assert [inv.table for inv in antitone_involutions(l6)] == [l6_inv.table]


class TestRunTask:
    def test_task_validation(self):
        with pytest.raises(UnknownTarget):
            EnumerationTask(max_size=3, target="nope")
        with pytest.raises(SizeOutOfRange):
            EnumerationTask(max_size=9, target="th3")
        with pytest.raises(ValueError):
            EnumerationTask(max_size=3, target="th3", mode="bogus")
        with pytest.raises(ValueError):
            EnumerationTask(max_size=3, target="th3", without=("no_such_flag",))

    @pytest.mark.parametrize(
        "target,size",
        [
            ("th1", 5), ("th2", 5), ("th3", 5), ("th4", 4), ("th5", 4),
            ("th6", 4), ("lem1", 4), ("cor2", 4), ("implem", 4),
            ("dnclosure", 4), ("triviality", 3),
        ],
    )
    def test_all_targets_verify_on_small_sizes(self, target, size):
        report = run_task(EnumerationTask(max_size=size, target=target))
        assert report.outcome == "verified"
        assert report.violations == ()
        assert report.cases_checked > 0

    def test_falsify_without_atom_finds_a_counterexample(self):
        # frozen regression: dropping the atom hypothesis breaks the exact
        # condition on a four-element lattice with the top element focal
        task = EnumerationTask(
            max_size=4, target="cor2", mode="falsify_without", without=("atom",)
        )
        report = run_task(task)
        assert report.outcome == "counterexample"
        assert report.counterexample.startswith("size=4 lattice#0 mul#0 focal=3")

    def test_falsify_th4_without_comparability_exhausts(self):
        # frozen regression: at desk scale the biconditional survives without
        # the comparability hypothesis (the pentagon admits no residuations)
        task = EnumerationTask(
            max_size=5, target="th4", mode="falsify_without",
            without=("comparable_with_all",),
        )
        report = run_task(task)
        assert report.outcome == "exhausted"

    def test_falsify_dnclosure_without_comparability_exhausts(self):
        task = EnumerationTask(
            max_size=4, target="dnclosure", mode="falsify_without",
            without=("comparable_with_all",),
        )
        report = run_task(task)
        assert report.outcome == "exhausted"

    def test_summary_mentions_outcome(self):
        report = run_task(EnumerationTask(max_size=3, target="th3"))
        text = report.summary()
        assert "outcome: verified" in text
        assert "target: th3" in text
