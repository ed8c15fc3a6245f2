from fractions import Fraction as F

from hypothesis import strategies as st

from voteselect.data import Dataset
from voteselect.localset import Election


@st.composite
def elections(draw, max_n=7, qs=(F(1, 4), F(1, 2), F(1), F(3, 2), F(2))):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_n))
    ballots = draw(st.lists(st.frozensets(st.integers(0, m - 1), max_size=m), min_size=n, max_size=n))
    return Election(tuple(ballots), draw(st.sampled_from(qs)), num_candidates=m)


@st.composite
def datasets(draw, min_n=2, max_n=40, classes="ABC", span=8):
    rows = draw(st.lists(st.tuples(st.integers(-span, span), st.integers(-span, span), st.sampled_from(classes)),
                         min_size=min_n, max_size=max_n).filter(lambda r: len({x[2] for x in r}) >= 2))
    return Dataset([(x, y) for x, y, _ in rows], [lab for _, _, lab in rows])
