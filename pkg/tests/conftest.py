from fractions import Fraction

from hypothesis import strategies as st

from njordan.freealg import Mode, Polynomial, Word, _from_items

modes = st.sampled_from(list(Mode))

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=3)

letter_lists = st.lists(st.integers(min_value=1, max_value=3), max_size=3)


@st.composite
def polynomials(draw, mode=None):
    if mode is None:
        mode = draw(modes)
    items = draw(st.lists(st.tuples(letter_lists, small_fractions), max_size=4))
    return _from_items(
        [(Word.make(tuple(ls), mode), Fraction(c)) for ls, c in items], mode)
