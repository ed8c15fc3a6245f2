from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from voteselect.data import Dataset
from voteselect.errors import NoEnemyError
from voteselect.localset import (BallotVariant, Election, as_fraction, build_election, election_from_text,
                                 local_set, local_set_table, nearest_enemy)

LINE = Dataset([[0.0], [1.0], [3.0]], ["A", "A", "B"])


def test_nearest_enemy_examples():
    assert nearest_enemy(0, LINE) == (2, 3.0)
    ds = Dataset([[0.0], [2.0], [-2.0]], ["A", "B", "B"])
    assert nearest_enemy(0, ds) == (1, 2.0)
    with pytest.raises(NoEnemyError, match="no enemy"):
        nearest_enemy(0, Dataset([[0.0], [1.0]], ["A", "A"]))


def test_local_set_examples():
    assert local_set(0, LINE) == {0, 1}
    assert local_set(2, LINE) == {2}
    dup = Dataset([[1.0, 1.0], [1.0, 1.0], [5.0, 5.0]], ["A", "B", "B"])
    assert local_set(0, dup) == frozenset()
    assert local_set(1, dup) == frozenset()


def test_build_election_examples():
    e = build_election(LINE, BallotVariant.INCLUDED, 1)
    assert e.ballots == ((0, 1), (0, 1), (2,))
    e = build_election(LINE, "excluded", 1)
    assert e.ballots == ((1,), (0,), ())
    with pytest.raises(NoEnemyError):
        build_election(Dataset([[0.0]], ["A"]))


def test_as_fraction():
    assert as_fraction("3/2") == Fraction(3, 2)
    assert as_fraction("0.75") == Fraction(3, 4)
    assert as_fraction(0.1) == Fraction(1, 10)
    assert as_fraction(2) == 2
    with pytest.raises(ValueError):
        as_fraction("abc")


def test_election_defaults_and_text_round_trip():
    e = Election(((0, 1), (1, 0), (2,), ()), Fraction(3, 4))
    assert e.ballots[1] == (0, 1)
    assert e.t_int == 3 and e.price == Fraction(4, 3)
    assert election_from_text(e.to_text()) == e
    with pytest.raises(ValueError):
        Election(((5,),), 1)
    with pytest.raises(ValueError):
        Election(((0,),), 0)


def test_election_text_with_comments():
    e = election_from_text("# fixture\nq: 3\ncandidates: 3\n0: 0 1 2\n")
    assert e.q == 3 and e.num_candidates == 3 and e.ballots == ((0, 1, 2),)


labelled_points = st.lists(
    st.tuples(st.integers(-6, 6), st.integers(-6, 6), st.sampled_from("ABC")), min_size=2, max_size=50
).filter(lambda rows: len({r[2] for r in rows}) >= 2)


@given(labelled_points)
@settings(max_examples=80, deadline=None)
def test_local_sets_match_double_loop(rows):
    pts = [(x, y) for x, y, _ in rows]
    labels = [lab for _, _, lab in rows]
    ds = Dataset(pts, labels)
    table = local_set_table(ds)
    expected = oracles.local_sets(pts, labels)
    assert [s for s in table.local_sets] == [s for _, s in expected]
    assert [e for e, _ in table.nearest_enemy] == [e for e, _ in expected]
    for i, members in enumerate(table.local_sets):
        assert all(labels[j] == labels[i] for j in members)
        enemy, dist = table.nearest_enemy[i]
        assert labels[enemy] != labels[i]
        assert (i in members) == (dist > 0)
    inc = build_election(ds, "included", 1, table=table)
    exc = build_election(ds, "excluded", 1, table=table)
    for i in range(ds.n):
        assert set(inc.ballots[i]) - set(exc.ballots[i]) <= {i}
        assert i not in exc.ballots[i]
