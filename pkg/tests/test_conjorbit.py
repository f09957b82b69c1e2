import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from renner import (
    act_by_generator,
    are_conjugate,
    build_coset_space,
    build_lattice,
    canonicalize_coset,
    enumerate_catalog,
    enumerate_orbits,
    naive_orbits,
    parse_fixture,
    shortlex_word,
    subgroup_elements,
    verify_transversal,
    we_generators,
    word_to_element,
)
from renner.conjorbit import IdempotentCheck, VerificationReport
from renner.errors import FixtureError, UsageError

from conftest import small_group

E6_COUNTS = {"zero": 1, "e_0": 3, "e_1": 16, "e_2": 113, "e_3": 690, "e_4": 171,
             "e_5": 85, "e_6": 628, "e_7": 150, "e_8": 25}
TABLE10_SIZES = [1, 36, 240, 1620, 270, 5184, 1440, 4320, 3240, 480, 540, 1440, 45,
                 5184, 5760, 4320, 720, 1440, 4320, 1440, 6480, 2160, 540, 540, 80]


@pytest.fixture(scope="module")
def e6_catalog(e6, e6_lattice):
    return enumerate_catalog(e6[1], e6_lattice)


@pytest.fixture(scope="module")
def e6_partitions(e6, e6_lattice):
    gt = e6[1]
    out = {}
    for e in e6_lattice.nonzero:
        space = build_coset_space(gt, e)
        out[e.label] = (space, enumerate_orbits(gt, space))
    return out


def test_coset_space_sizes(e6, e6_lattice):
    gt = e6[1]
    assert len(build_coset_space(gt, e6_lattice["e_0"])) == 27
    assert len(build_coset_space(gt, e6_lattice["e_3"])) == 51840 // 2
    space = build_coset_space(gt, e6_lattice["e_8"])
    assert len(space) == 51840
    assert space.reps.tolist() == list(range(51840))
    with pytest.raises(UsageError):
        build_coset_space(gt, e6_lattice["zero"])


def test_orbit_sum(e6, e6_partitions):
    gt = e6[1]
    for label, (space, part) in e6_partitions.items():
        n_sub = len(subgroup_elements(gt, space.idempotent.lambda_sub))
        assert part.orbit_sizes.sum() == len(space) == gt.order // n_sub


def test_orbit_counts(e6_partitions):
    assert {k: p.num_orbits for k, (_, p) in e6_partitions.items()} == {
        k: v for k, v in E6_COUNTS.items() if k != "zero"
    }
    assert sorted(e6_partitions["e_8"][1].orbit_sizes.tolist()) == sorted(TABLE10_SIZES)


def test_orbit_ids_by_first_position(e6_partitions):
    for space, part in e6_partitions.values():
        firsts = [int(np.flatnonzero(part.orbit_of == o)[0]) for o in range(part.num_orbits)]
        assert firsts == sorted(firsts)


def test_orbit_min_rep(e6, e6_partitions):
    gt = e6[1]
    space, part = e6_partitions["e_2"]
    for o in range(part.num_orbits):
        members = space.reps[part.orbit_of == o]
        rep = part.orbit_min_rep[o]
        assert space.index[rep] >= 0 and part.orbit_of[space.index[rep]] == o
        best = min(members.tolist(), key=lambda w: (gt.length[w], shortlex_word(gt, w)))
        assert rep == best


def test_action_identity_fixed(e6, e6_lattice):
    gt = e6[1]
    for e in e6_lattice.nonzero:
        space = build_coset_space(gt, e)
        for s in we_generators(e):
            assert act_by_generator(gt, space, s, 0) == 0


def test_action_rejects_foreign_generator(e6, e6_lattice):
    gt = e6[1]
    space = build_coset_space(gt, e6_lattice["e_0"])
    with pytest.raises(UsageError):
        act_by_generator(gt, space, 1, 0)
    with pytest.raises(UsageError):
        enumerate_orbits(gt, space, [1])


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 51839), st.integers(1, 6))
def test_top_action_is_conjugation(e6, e6_lattice, u, s):
    gt = e6[1]
    space = build_coset_space(gt, e6_lattice["e_8"])
    s_el = word_to_element(gt, [s])
    assert act_by_generator(gt, space, s, u) == gt.multiply(gt.multiply(s_el, u), s_el)


def _all_lattices(names=("A1", "A2", "A3", "B2", "B3", "C3", "G2")):
    for name in names:
        rs, gt = small_group(name)
        for i in range(1, rs.rank + 1):
            yield gt, build_lattice(rs, i)


def test_action_involution_and_well_defined_exhaustive():
    for gt, lat in _all_lattices():
        for e in lat.nonzero:
            space = build_coset_space(gt, e)
            sub = np.array(sorted(subgroup_elements(gt, e.lambda_sub)))
            for s in we_generators(e):
                for pos in range(len(space)):
                    q = act_by_generator(gt, space, s, pos)
                    assert act_by_generator(gt, space, s, q) == pos
                    u = space.reps[pos]
                    for v in gt.multiply(np.full(len(sub), u), sub):
                        moved = canonicalize_coset(gt, gt.conjugate_by_gen(int(v), s), e.lambda_sub)
                        assert moved == space.reps[q]


def test_well_defined_sampled_e6(e6, e6_lattice):
    gt = e6[1]
    rng = np.random.default_rng(2024)
    total = 0
    for label in ["e_0", "e_1", "e_2", "e_3", "e_4"]:
        e = e6_lattice[label]
        sub = np.array(sorted(subgroup_elements(gt, e.lambda_sub)))
        gens = np.array(we_generators(e))
        n = 3000
        u = rng.integers(0, gt.order, n)
        x = rng.choice(sub, n)
        s = rng.choice(gens, n)
        v = gt.multiply(u, x)
        for gen in gens:
            m = s == gen
            lhs = canonicalize_coset(gt, gt.conjugate_by_gen(v[m], gen), e.lambda_sub)
            rhs = canonicalize_coset(gt, gt.conjugate_by_gen(u[m], gen), e.lambda_sub)
            assert np.array_equal(lhs, rhs)
        total += n
    assert total >= 10**4


def test_action_involution_sampled_e6(e6, e6_lattice):
    gt = e6[1]
    rng = np.random.default_rng(5)
    for label in ["e_1", "e_3", "e_8"]:
        e = e6_lattice[label]
        space = build_coset_space(gt, e)
        for pos in rng.integers(0, len(space), 300):
            for s in we_generators(e):
                q = act_by_generator(gt, space, s, int(pos))
                assert act_by_generator(gt, space, s, q) == pos


def test_fast_orbits_match_naive_small():
    for gt, lat in _all_lattices():
        for e in lat.nonzero:
            fast = sorted(enumerate_orbits(gt, build_coset_space(gt, e)).orbit_sizes.tolist())
            assert fast == naive_orbits(gt, e)


def test_catalog_counts(e6_catalog):
    assert e6_catalog.counts() == E6_COUNTS
    assert e6_catalog.total_classes == 1882


def test_catalog_records_valid(e6, e6_catalog, e6_partitions):
    gt = e6[1]
    for block in e6_catalog.per_idempotent:
        if block.idempotent.is_zero:
            assert block.classes[0].rep_word == () and block.classes[0].orbit_size == 1
            continue
        space, part = e6_partitions[block.label]
        keys = [(r.min_length, r.rep_word) for r in block.classes]
        assert keys == sorted(keys)
        assert sum(r.orbit_size for r in block.classes) == len(space)
        for r in block.classes:
            w = word_to_element(gt, r.rep_word)
            assert len(r.rep_word) == r.min_length == gt.length[w]
            pos = space.index[w]
            assert pos >= 0
            assert part.orbit_sizes[part.orbit_of[pos]] == r.orbit_size


def rook_classes(n):
    """Pairs of partitions (cycle type, link type) with total size n."""
    from functools import lru_cache

    @lru_cache(None)
    def p(k, m):
        if k == 0:
            return 1
        return sum(p(k - j, j) for j in range(1, min(k, m) + 1))

    return sum(p(k, k) * p(n - k, n - k) for k in range(n + 1))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_type_a_counts_match_rook_monoid(n):
    rs, gt = small_group(f"A{n - 1}")
    assert enumerate_catalog(gt, build_lattice(rs, 1)).total_classes == rook_classes(n)


def test_a1_catalog():
    rs, gt = small_group("A1")
    cat = enumerate_catalog(gt, build_lattice(rs, 1))
    assert cat.counts() == {"zero": 1, "e[0]": 2, "e[1]": 2}
    assert cat.total_classes == 5


def test_catalog_only_and_jobs(e6, e6_lattice, e6_catalog):
    gt = e6[1]
    only = enumerate_catalog(gt, e6_lattice, only="e_3")
    assert only.per_idempotent == (e6_catalog["e_3"],)
    assert enumerate_catalog(gt, e6_lattice, jobs=4) == e6_catalog


def test_catalog_type_mismatch(e6):
    with pytest.raises(UsageError):
        enumerate_catalog(e6[1], build_lattice("A2", 1))


def test_are_conjugate_examples(e6, e6_lattice):
    gt = e6[1]
    assert are_conjugate(gt, e6_lattice, "e_1", [1], [1])
    assert not are_conjugate(gt, e6_lattice, "e_1", [1], [3])
    with pytest.raises(UsageError):
        are_conjugate(gt, e6_lattice, "e_12", [], [])
    with pytest.raises(UsageError):
        are_conjugate(gt, e6_lattice, "zero", [], [])


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 51839), st.sampled_from(["e_1", "e_2", "e_3", "e_6"]), st.data())
def test_are_conjugate_closure(e6, e6_lattice, w, label, data):
    gt = e6[1]
    s = data.draw(st.sampled_from(we_generators(e6_lattice[label])))
    word = shortlex_word(gt, w)
    assert are_conjugate(gt, e6_lattice, label, word, [s] + word + [s])


# --- fixtures --------------------------------------------------------------


def test_parse_fixture():
    text = "# zero\n0\n\n# e_0\n[ ]\n[1]\n[ 1, 2,3 ]\nConjugacy Classes Associated with e_1\n[ 3 ]\n"
    assert parse_fixture(text) == {"zero": [()], "e_0": [(), (1,), (1, 2, 3)], "e_1": [(3,)]}


@pytest.mark.parametrize(
    "text, lineno",
    [("[ 1 ]\n", 1), ("# e_0\n[ 1 ]\n1, 2\n", 3), ("# e_0\n0\n", 2), ("# e_1\n[ 1,, 2 ]\n", 2)],
)
def test_parse_fixture_errors(text, lineno):
    with pytest.raises(FixtureError, match=f"line {lineno}"):
        parse_fixture(text)


def test_verify_table2(e6, e6_lattice, data_dir):
    report = verify_transversal(e6[1], e6_lattice, (data_dir / "table02_e_0.txt").read_text())
    assert report.passed
    assert [c.label for c in report.checks] == ["zero", "e_0"]


def test_verify_table3(e6, e6_lattice, data_dir):
    report = verify_transversal(e6[1], e6_lattice, (data_dir / "table03_e_1.txt").read_text())
    assert report.passed
    (check,) = report.checks
    assert check.listed == check.computed == 16


def test_verify_duplicate_fails(e6, e6_lattice):
    text = "# e_0\n[ ]\n[ 1 ]\n[ 1 ]\n"
    report = verify_transversal(e6[1], e6_lattice, text)
    (check,) = report.checks
    assert not report.passed
    assert not check.pairwise_distinct and check.conjugate_pairs == [((1,), (1,))]
    assert "conjugate pair" in report.lines()[0]


def test_verify_incomplete_fails(e6, e6_lattice):
    report = verify_transversal(e6[1], e6_lattice, "# e_1\n[ ]\n[ 3 ]\n")
    (check,) = report.checks
    assert check.pairwise_distinct and not check.count_matches and not check.covers_all
    assert check.missing_orbits == 14


@pytest.mark.parametrize("label", ["e_1", "e_2", "e_3", "e_6"])
def test_reversed_transversal_still_passes(e6, e6_lattice, e6_catalog, label):
    # reversing a word inverts the element, and inversion permutes classes
    words = [r.rep_word[::-1] for r in e6_catalog[label].classes]
    report = verify_transversal(e6[1], e6_lattice, {label: words})
    assert report.passed
    assert report.checks[0].reversed_reading_passes is None


def test_report_line_flags_reversed_reading():
    check = IdempotentCheck("e_1", 2, 16, True, False, False, reversed_reading_passes=True)
    line = VerificationReport([check]).lines()[0]
    assert line.startswith("FAIL e_1") and "right to left" in line


def test_verify_empty_is_failure(e6, e6_lattice):
    assert not verify_transversal(e6[1], e6_lattice, "").passed


def test_table10_rows_against_computed_classes(e6, e6_partitions, data_dir):
    """Every listed word has its class's minimal length, and the listed class
    sizes form the right multiset, but the size column is not row-aligned."""
    import csv

    gt = e6[1]
    space, part = e6_partitions["e_8"]
    with open(data_dir / "table10_lengths.csv") as fh:
        rows = list(csv.DictReader(fh))
    sizes = []
    for row in rows:
        w = word_to_element(gt, [int(t) for t in row["word"].split()])
        o = part.orbit_of[space.index[w]]
        assert gt.length[w] == gt.length[part.orbit_min_rep[o]] == int(row["length"])
        sizes.append(int(part.orbit_sizes[o]))
    assert sorted(sizes) == sorted(int(r["orbit_size"]) for r in rows)
    # e.g. [4, 6], a product of two orthogonal reflections, has 270 conjugates
    assert sizes[3] == 270 and rows[3]["orbit_size"] == "1620"
