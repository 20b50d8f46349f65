import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qshadow import errors, fixtures as fx, quivers as qv


def quiver_strategy(max_n=4, tame=True):
    def build(draw):
        n = draw(st.integers(min_value=1, max_value=max_n))
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                hi = 1 if (tame and i == j) else 2
                row.append(draw(st.integers(min_value=0, max_value=hi)))
            rows.append(row)
        return qv.validate_quiver(rows, tame_mode=tame)

    return st.composite(lambda draw: build(draw))()


def perm_strategy(n):
    # 0-based: perm[k] is the new label of old vertex k
    return st.permutations(list(range(n)))


def test_validate_rejects_non_square():
    with pytest.raises(errors.NonSquare):
        qv.validate_quiver([[0, 1], [0, 0], [0, 0]])


def test_validate_rejects_negative():
    with pytest.raises(errors.NegativeEntry):
        qv.validate_quiver([[0, -1], [0, 0]])


def test_validate_tame_bounds():
    with pytest.raises(errors.TameBoundViolated):
        qv.validate_quiver([[0, 3, 0], [0, 0, 0], [0, 0, 0]])
    with pytest.raises(errors.TameBoundViolated):
        qv.validate_quiver([[2, 0], [0, 0]])
    # both are fine outside tame mode
    qv.validate_quiver([[2, 3], [0, 0]], tame_mode=False)


def test_degrees_markov():
    for i in (1, 2, 3):
        assert qv.degrees(fx.G3_MARKOV, i) == (2, 2)


def test_degrees_empty_and_range():
    empty = qv.validate_quiver([[0]])
    assert qv.degrees(empty, 1) == (0, 0)
    with pytest.raises(errors.VertexOutOfRange):
        qv.degrees(empty, 2)


def test_degrees_q17_center():
    # the center vertex: two arrows plus a loop on each side
    assert qv.degrees(fx.Q17_FIXTURE, 5) == (3, 3)


def test_reduced_quiver_four_cycle():
    red = qv.reduced_quiver(fx.G4_1)
    assert red.mult == qv.from_arrows(4, [(1, 4), (4, 3), (3, 2), (2, 1)]).mult


def test_reduced_quiver_two_cycle_cancels():
    q = qv.from_arrows(2, [(1, 2, 1), (2, 1, 1)])
    assert all(x == 0 for row in qv.reduced_quiver(q).mult for x in row)


def test_reduced_quiver_partial_cancel():
    q = qv.validate_quiver([[0, 2], [1, 0]])
    assert qv.reduced_quiver(q).mult == ((0, 1), (0, 0))


def test_loop_free_idempotent():
    lf = qv.loop_free(fx.G4_1)
    assert lf.mult[0][0] == 0 and lf.mult[2][2] == 0
    assert qv.loop_free(lf).mult == lf.mult


def test_opposite_involution():
    assert qv.opposite(qv.opposite(fx.G4_6)).mult == fx.G4_6.mult


def test_canonical_form_idempotent():
    canon, _ = qv.canonical_form(fx.G3_MARKOV)
    again, _ = qv.canonical_form(canon)
    assert again.mult == canon.mult


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_canonical_form_orbit_constant(data):
    q = data.draw(quiver_strategy())
    perm = data.draw(perm_strategy(q.n))
    relabeled = qv.relabel(q, perm)
    assert qv.canonical_form(q)[0].mult == qv.canonical_form(relabeled)[0].mult


def test_canonical_form_permutation_witness():
    q = fx.G4_3
    canon, perm = qv.canonical_form(q)
    assert qv.relabel(q, perm).mult == canon.mult


def test_canonical_form_too_large():
    big = qv.validate_quiver([[0] * 9 for _ in range(9)])
    with pytest.raises(errors.TooLarge):
        qv.canonical_form(big)


def test_isomorphism_and_opposite():
    q = fx.G4_1
    shuffled = qv.relabel(q, (2, 0, 3, 1))
    assert qv.is_isomorphic(q, shuffled)
    assert qv.is_isomorphic_or_opposite(q, qv.opposite(shuffled))
    assert not qv.is_isomorphic(fx.G4_3, fx.G4_4)


def test_distinct_loop_counts_not_isomorphic():
    assert qv.canonical_form(fx.G4_3)[0].mult != qv.canonical_form(fx.G4_4)[0].mult


def test_is_connected():
    assert qv.is_connected(fx.G3_MARKOV)
    two_islands = qv.from_arrows(4, [(1, 2), (2, 1), (3, 4), (4, 3)])
    assert not qv.is_connected(two_islands)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_json_round_trip(data):
    q = data.draw(quiver_strategy())
    assert qv.from_json(qv.to_json(q)).mult == q.mult


def test_from_json_errors():
    with pytest.raises(errors.ParseError):
        qv.from_json("not json")
    with pytest.raises(errors.ParseError):
        qv.from_json('{"n": 2}')
    with pytest.raises(errors.ParseError):
        qv.from_json('{"n": 2, "arrows": [[1, 3, 1]]}')


def test_to_dot_deterministic():
    assert qv.to_dot(fx.G3_MARKOV) == qv.to_dot(fx.G3_MARKOV)
    assert qv.to_dot(fx.G3_MARKOV).startswith("digraph")


def test_find_pattern_triangle():
    spec = qv.PatternSpec(template=qv.from_arrows(3, [(1, 2), (2, 3), (3, 1)]))
    matches = qv.find_pattern(fx.G3_TRIANGLE, spec)
    images = {m for m in matches}
    assert (1, 2, 3) in images


def test_find_pattern_closed_vertex():
    # a closed template vertex may not receive outside arrows
    spec = qv.PatternSpec(
        template=qv.from_arrows(1, [(1, 1)]), closed=frozenset({1})
    )
    assert qv.find_pattern(fx.G3_TRIANGLE, spec) == []
    lone = qv.from_arrows(1, [(1, 1)])
    assert qv.find_pattern(lone, spec) == [(1,)]


def test_degrees_loop_counts_both_sides():
    loop = qv.from_arrows(1, [(1, 1)])
    assert qv.degrees(loop, 1) == (1, 1)


def test_regularity_tags():
    assert qv.is_two_regular(fx.G3_MARKOV)
    assert qv.is_biregular(fx.G3_CHAIN)
    assert not qv.is_two_regular(fx.G3_CHAIN)
