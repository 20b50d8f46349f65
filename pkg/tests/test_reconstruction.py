import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qshadow import errors, fixtures as fx, quivers as qv, reconstruction as rc
from qshadow import shadows as sh


def dedup_keys(quivers):
    return {rc._dedup_key(q) for q in quivers}


def triangle_with_loops(loops):
    return fx._quiver(3, [(1, 2), (2, 3), (3, 1)], loops=loops)


# --- dimension exclusion -----------------------------------------------------

def test_dimension_excludes_triangle_with_two_loops():
    rep = rc.dimension_exclusion(triangle_with_loops([1, 2]))
    assert rep.excluded
    assert rep.rule == "dimension-forced-equality"
    assert rep.witness == (3,)


def test_dimension_allows_triangle_with_three_loops():
    assert not rc.dimension_exclusion(triangle_with_loops([1, 2, 3])).excluded


def test_dimension_excludes_partial_double_cycle():
    q = fx._quiver(4, [(4, 3), (3, 1), (1, 4), (4, 2), (2, 1)], loops=[4])
    rep = rc.dimension_exclusion(q)
    assert rep.excluded
    assert rep.rule == "dimension-forced-equality"
    assert rep.witness == (1,)


@settings(max_examples=50, deadline=None)
@given(st.permutations(list(range(4))))
def test_dimension_exclusion_relabel_invariant(perm):
    q = fx._quiver(4, [(4, 3), (3, 1), (1, 4), (4, 2), (2, 1)], loops=[4])
    rep = rc.dimension_exclusion(q)
    rep2 = rc.dimension_exclusion(qv.relabel(q, perm))
    assert rep.excluded == rep2.excluded
    assert rep.rule == rep2.rule


# --- 2-cycle and loop placement ----------------------------------------------

def test_two_cycle_placements_four_cycle():
    base = sh.quiver_of_shadow(fx.SHADOWS_4[2])
    placements = rc.two_cycle_placements(base)
    assert placements == [(), ((1, 3),), ((2, 4),), ((1, 3), (2, 4))]


def test_two_cycle_placements_respect_existing_arrows():
    # no 2-cycle may connect vertices already joined by an arrow
    base = sh.quiver_of_shadow(fx.SHADOWS_5[21])
    assert rc.two_cycle_placements(base) == [()]


def test_two_cycle_placements_reject_bad_input():
    with pytest.raises(ValueError):
        rc.two_cycle_placements(fx.G4_1)  # has loops
    with pytest.raises(errors.UnsupportedSize):
        rc.two_cycle_placements(qv.validate_quiver([[0] * 6 for _ in range(6)]))


def test_loop_placements_four_cycle_with_diagonal():
    base = sh.quiver_of_shadow(fx.SHADOWS_4[2])
    qo = rc.assemble(base, ((1, 3),), ()).assembled
    # loops are admitted only at the two vertices off the diagonal 2-cycle
    assert rc.loop_placements(qo) == [(), (2,), (4,), (2, 4)]


def test_loop_placements_chain():
    chain = fx.G3_CHAIN
    assert rc.loop_placements(chain) == [(), (1,), (3,), (1, 3)]


def test_loop_placements_markov():
    assert rc.loop_placements(fx.G3_MARKOV) == [()]


def test_assemble_rejects_overlap():
    base = sh.quiver_of_shadow(fx.SHADOWS_4[2])
    with pytest.raises(ValueError):
        rc.assemble(base, ((1, 3), (3, 2)), ())


# --- structural filters ------------------------------------------------------

def test_filter_isolated_arrow():
    q = fx._quiver(3, [(1, 2)], cycles=[(2, 3)])
    rep = rc.structural_filters(q)
    assert rep.excluded and rep.rule == "isolated-arrow"


def test_filter_double_only_side():
    # a (1,2)-vertex whose two out-arrows form a double arrow
    q = fx._quiver(4, [(1, 2, 2), (2, 3), (3, 1), (3, 4), (4, 3)])
    rep = rc.structural_filters(q)
    assert rep.excluded and rep.rule == "double-only-side"


def test_filter_forbidden_diamond():
    # every candidate over this shadow dies, one of them to the diamond
    results = rc.reconstruct(fx.SHADOWS_4[5])
    rules = [rep.rule for _, rep in results]
    assert "forbidden-diamond" in rules
    assert all(rep.excluded for _, rep in results)


def test_filters_pass_all_goldens():
    for q in fx.GOLDEN_3 + fx.GOLDEN_4 + fx.GOLDEN_5:
        rep = rc.structural_filters(q)
        assert not rep.excluded, (q, rep)


# --- reconstruct -------------------------------------------------------------

def test_reconstruct_rejects_non_essential():
    bad = sh.make_shadow([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])
    with pytest.raises(errors.NotEssential):
        rc.reconstruct(bad)


def test_reconstruct_rejects_large():
    with pytest.raises(errors.UnsupportedSize):
        rc.reconstruct(sh.make_shadow([[0] * 6 for _ in range(6)]))


def test_reconstruct_markov_bare():
    results = rc.reconstruct(sh.MARKOV_SHADOW)
    survivors = [c for c, rep in results if not rep.excluded]
    assert len(survivors) == 1
    assert survivors[0].two_cycles == () and survivors[0].loops == ()


def test_reconstruct_triangle_needs_all_loops():
    results = rc.reconstruct(fx.SHADOWS_3[2])
    survivors = [c for c, rep in results if not rep.excluded]
    assert [c.loops for c in survivors] == [(1, 2, 3)]


def test_reconstruct_survivors_match_reference_by_shadow():
    for k in (4, 13, 16, 25, 26):
        results = rc.reconstruct(fx.SHADOWS_5[k])
        got = dedup_keys(c.assembled for c, rep in results if not rep.excluded)
        want = dedup_keys(fx.GOLDEN_5_BY_SHADOW[k])
        assert got == want, k


def test_reconstruct_reduced_matches_shadow():
    a = fx.SHADOWS_5[13]
    expected = sh.quiver_of_shadow(a)
    for c, _ in rc.reconstruct(a):
        assert qv.reduced_quiver(c.assembled).mult == expected.mult


def test_reconstruct_reports_are_deterministic():
    a = fx.SHADOWS_4[3]
    first = rc.reconstruct(a)
    second = rc.reconstruct(a)
    assert [(c.sort_key(), rep.rule) for c, rep in first] == [
        (c.sort_key(), rep.rule) for c, rep in second
    ]


# --- classify ----------------------------------------------------------------

def test_classify_out_of_range():
    with pytest.raises(errors.UnsupportedSize):
        rc.classify(2)
    with pytest.raises(errors.UnsupportedSize):
        rc.classify(6)


def test_classify_n3_families():
    result = rc.classify(3)
    families = {rc._family_key(q) for q in result.quivers}
    expected = {rc._family_key(fam[0]) for fam in fx.GOLDEN_3_FAMILIES}
    assert families == expected


def test_classify_n4_exact():
    result = rc.classify(4)
    assert dedup_keys(result.quivers) == dedup_keys(fx.GOLDEN_4)


def test_classify_gqt_superset():
    for n in (3, 4):
        tsp4 = dedup_keys(rc.classify(n, mode="tsp4").quivers)
        gqt = dedup_keys(rc.classify(n, mode="gqt").quivers)
        assert tsp4 <= gqt


def test_classify_survivors_trace_back_to_shadows():
    result = rc.classify(4)
    for rows, survivors in result.survivors_by_shadow:
        expected = sh.quiver_of_shadow(sh.make_shadow([list(r) for r in rows]))
        for q in survivors:
            assert qv.is_isomorphic(qv.reduced_quiver(q), expected)


def test_verify_against_reference_small():
    for n in (3, 4):
        assert rc.verify_against_reference(n).passed


def test_result_payload_schema(tmp_path):
    result = rc.classify(3)
    payload = rc.result_payload(result)
    assert set(payload) == {
        "n", "mode", "shadow_count", "survivor_quivers", "exclusions"
    }
    for entry in payload["exclusions"]:
        assert set(entry) == {"shadow", "candidate", "rule", "citation", "witness"}
    path = tmp_path / "out.json"
    rc.write_result(path, result)
    rc.write_result(tmp_path / "again.json", result)
    assert path.read_text() == (tmp_path / "again.json").read_text()
