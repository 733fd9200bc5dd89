import pytest
from hypothesis import given, strategies as st

import golden
from chipfire import (
    MAX_EXPONENT,
    ChipOverflowError,
    ConfigStream,
    Row,
    RowCapExceededError,
    entry,
    initial_row,
    intermediate_configuration,
    next_row,
    row_bound,
)


class TestRow:
    def test_accessors(self):
        r = Row(index=5, y_min=1, values=(2, 5, 5, 2))
        assert r.width == 4
        assert r.y_max == 4
        assert not r.is_empty
        assert r.value_at(2) == 5
        assert r.value_at(0) == 0
        assert r.value_at(9) == 0
        assert list(r.points()) == [(4, 1, 2), (3, 2, 5), (2, 3, 5), (1, 4, 2)]
        assert r.chip_sum() == 14

    def test_empty_row(self):
        r = Row(index=3, y_min=0, values=())
        assert r.is_empty
        assert r.width == 0
        with pytest.raises(ValueError):
            r.y_max

    def test_accepts_lists(self):
        assert Row(index=1, y_min=0, values=[4, 4]).values == (4, 4)

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(index=-1, y_min=0, values=(1,)),
            dict(index=2, y_min=-1, values=(1,)),
            dict(index=2, y_min=1, values=(1, 2, 1)),  # span leaves the quadrant
            dict(index=3, y_min=0, values=(1, 0, 1)),  # zero entry
            dict(index=3, y_min=0, values=(1, 2, 3)),  # not palindromic
            dict(index=3, y_min=1, values=()),  # empty rows anchor at 0
        ],
    )
    def test_rejects_invalid(self, kwargs):
        with pytest.raises(ValueError):
            Row(**kwargs)


class TestInitialRow:
    @pytest.mark.parametrize("n,expected", [(0, 1), (4, 16), (9, 512)])
    def test_examples(self, n, expected):
        assert initial_row(n) == Row(index=0, y_min=0, values=(expected,))

    def test_negative_exponent(self):
        with pytest.raises(ValueError):
            initial_row(-1)

    def test_overflow(self):
        assert initial_row(MAX_EXPONENT).values == (1 << MAX_EXPONENT,)
        with pytest.raises(ChipOverflowError):
            initial_row(MAX_EXPONENT + 1)


class TestNextRow:
    def test_root_splits(self):
        assert next_row(initial_row(4)) == Row(index=1, y_min=0, values=(8, 8))

    def test_shifts_leading_zero(self):
        r = Row(index=4, y_min=0, values=(1, 4, 6, 4, 1))
        assert next_row(r) == Row(index=5, y_min=1, values=(2, 5, 5, 2))

    def test_terminal_pair_dies(self):
        r = Row(index=9, y_min=4, values=(1, 1))
        assert next_row(r) == Row(index=10, y_min=0, values=())

    def test_minimal_descent_step(self):
        r = Row(index=7, y_min=2, values=(1, 3, 3, 1))
        assert next_row(r).values == (1, 2, 1)

    def test_empty_propagates(self):
        assert next_row(Row(index=2, y_min=0, values=())) == Row(index=3, y_min=0, values=())

    def test_noncontiguous_child_rejected(self):
        # Pathological palindrome never reachable from an initial pile.
        with pytest.raises(ValueError):
            next_row(Row(index=3, y_min=0, values=(8, 1, 1, 8)))


@st.composite
def monotone_rows(draw):
    """Palindromic rows obeying the within-row growth rules."""
    half_len = draw(st.integers(min_value=1, max_value=7))
    left = [draw(st.integers(min_value=1, max_value=9))]
    for _ in range(half_len - 1):
        left.append(left[-1] + draw(st.integers(min_value=2, max_value=9)))
    if draw(st.booleans()):
        values = left + left[::-1]
    else:
        values = left + [left[-1] + draw(st.integers(min_value=1, max_value=9))] + left[::-1]
    y_min = draw(st.integers(min_value=0, max_value=4))
    index = y_min + len(values) - 1 + draw(st.integers(min_value=0, max_value=4))
    return Row(index=index, y_min=y_min, values=tuple(values))


class TestRecurrenceProperties:
    @given(monotone_rows())
    def test_chip_accounting(self, r):
        # The child receives everything except one chip per odd entry.
        child = next_row(r)
        odd = sum(v & 1 for v in r.values)
        assert child.chip_sum() == r.chip_sum() - odd

    @given(monotone_rows())
    def test_width_changes_by_one(self, r):
        child = next_row(r)
        if not child.is_empty:
            assert abs(child.width - r.width) == 1

    @given(monotone_rows())
    def test_child_stays_palindromic(self, r):
        child = next_row(r)
        assert child.values == child.values[::-1]


class TestConfigStream:
    def test_single_chip(self):
        assert [r.values for r in intermediate_configuration(0)] == [(1,)]

    def test_n4_matches_worked_table(self):
        rows = list(intermediate_configuration(4))
        assert [(r.index, r.y_min, r.values) for r in rows] == list(golden.EXAMPLE_TABLE_N4)

    def test_n9_row_count(self):
        assert sum(1 for _ in intermediate_configuration(9)) == 92

    def test_stream_bookkeeping(self):
        stream = intermediate_configuration(2)
        assert stream.n == 2
        assert stream.rows_emitted == 0
        first = next(stream)
        assert first.values == (4,)
        assert stream.current_row == first
        assert stream.rows_emitted == 1
        rest = list(stream)
        assert stream.rows_emitted == 4
        assert rest[-1].values == (1, 1)

    def test_row_cap_hit(self):
        stream = intermediate_configuration(4, row_cap=5)
        for _ in range(5):
            next(stream)
        with pytest.raises(RowCapExceededError):
            next(stream)

    def test_row_cap_exact(self):
        rows = list(intermediate_configuration(4, row_cap=10))
        assert len(rows) == 10

    def test_row_cap_validation(self):
        with pytest.raises(ValueError):
            intermediate_configuration(4, row_cap=0)

    @pytest.mark.parametrize("n", range(0, 11))
    def test_termination_within_bound(self, n, table):
        assert table(n)[-1].index <= row_bound(n)


class TestEntry:
    @pytest.mark.parametrize(
        "x,y,expected",
        [(0, 0, 16), (2, 3, 5), (3, 2, 5), (50, 50, 0), (9, 0, 0), (5, 4, 1)],
    )
    def test_n4(self, x, y, expected):
        assert entry(4, x, y) == expected

    def test_negative_coordinates(self):
        with pytest.raises(ValueError):
            entry(4, -1, 0)


class TestRowBound:
    @pytest.mark.parametrize("n,expected", [(0, 1), (4, 10), (5, 16)])
    def test_examples(self, n, expected):
        assert row_bound(n) == expected

    def test_overflow_guard(self):
        with pytest.raises(ChipOverflowError):
            row_bound(MAX_EXPONENT + 1)
