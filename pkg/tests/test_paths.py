import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from raneyseq import exactmath, paths, threshold
from raneyseq.errors import (
    BudgetExceededError,
    HeightExceedsLimitError,
    InvalidParameterError,
)
from raneyseq.paths import ExtMotzkinPath
from raneyseq.threshold import ThresholdParams

EX7_SEQ = (7, 15, 16, 21, 28, 30, 38)
EX7_RISES = (2, 3, -4, 0, 2, -3, 3)


def seq(values, k, l):
    return threshold.validate(values, ThresholdParams(k, l, len(values)))


class TestPathType:
    def test_below_axis_rejected(self):
        with pytest.raises(InvalidParameterError):
            ExtMotzkinPath(3, (1, -2))

    def test_down_step_too_long(self):
        with pytest.raises(InvalidParameterError):
            ExtMotzkinPath(3, (4, -3))

    def test_heights(self):
        path = ExtMotzkinPath(5, EX7_RISES)
        assert path.heights == (2, 5, 1, 1, 3, 0, 3)
        assert path.end_height == 3

    def test_json_round_trip(self):
        path = ExtMotzkinPath(5, EX7_RISES)
        assert ExtMotzkinPath.from_json(path.to_json()) == path


class TestPathOf:
    def test_example7(self):
        path = paths.path_of(seq(EX7_SEQ, 5, 3))
        assert path.rises == EX7_RISES
        assert path.end_height == 3

    @pytest.mark.parametrize("k,n", [(3, 4), (4, 3)])
    def test_staircase_is_flat(self, k, n):
        staircase = seq(tuple(k * i for i in range(1, n + 1)), k, 0)
        assert paths.path_of(staircase).rises == (0,) * n

    def test_all_31_sequences(self):
        for s in threshold.enumerate_sequences(ThresholdParams(3, 1, 3)):
            path = paths.path_of(s)
            assert path.end_height in (0, 1)
            assert (path.end_height == 1) == threshold.is_proper(s)


class TestSequenceOfPath:
    def test_example7_reversed(self):
        path = ExtMotzkinPath(5, EX7_RISES)
        assert paths.sequence_of_path(path, 3).values == EX7_SEQ

    def test_flat_path(self):
        path = ExtMotzkinPath(4, (0, 0, 0))
        assert paths.sequence_of_path(path, 0).values == (4, 8, 12)

    def test_height_exceeds_l(self):
        path = ExtMotzkinPath(4, (2,))
        with pytest.raises(HeightExceedsLimitError):
            paths.sequence_of_path(path, 1)

    def test_round_trip_over_paths(self):
        for path in paths.enumerate_paths(4, 2, 4):
            assert paths.path_of(paths.sequence_of_path(path, 2)) == path


class TestEnumeratePaths:
    def test_example8_total(self):
        assert len(list(paths.enumerate_paths(2, 0, 4))) == 14

    @pytest.mark.parametrize("k,l", [(3, 0), (3, 1), (4, 2), (5, 3)])
    def test_length_one(self, k, l):
        found = sorted(p.rises[0] for p in paths.enumerate_paths(k, l, 1))
        assert found == list(range(l + 1))

    def test_raney_cell(self):
        assert len(list(paths.enumerate_paths(3, 1, 3))) == \
            exactmath.raney(3, 2, 3)

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_counts_match_raney(self, k):
        for l in range(k - 1):
            for n in range(1, 5):
                found = list(paths.enumerate_paths(k, l, n))
                assert len(found) == exactmath.raney(k, l + 1, n)
                assert len(set(found)) == len(found)

    def test_catalan_when_k2(self):
        for n in range(1, 9):
            assert len(list(paths.enumerate_paths(2, 0, n))) == \
                exactmath.catalan(n)

    def test_proper_endpoint_count(self):
        for k, l, n in [(3, 1, 4), (4, 2, 4), (4, 1, 5)]:
            at_l = [p for p in paths.enumerate_paths(k, l, n)
                    if p.end_height == l]
            assert len(at_l) == exactmath.raney(k, k + l, n - 1)

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            list(paths.enumerate_paths(2, 0, 5, budget=3))


class TestClassicMotzkin:
    def test_simple_cases(self):
        assert paths.is_classic_motzkin(ExtMotzkinPath(2, (1, 0, -1, 0)))
        assert not paths.is_classic_motzkin(ExtMotzkinPath(2, (2, -1, -1, 0)))

    def test_example8_split(self):
        all_paths = list(paths.enumerate_paths(2, 0, 4))
        classic = [p for p in all_paths if paths.is_classic_motzkin(p)]
        assert len(classic) == 9
        assert len(all_paths) - len(classic) == 5

    def test_motzkin_numbers(self):
        for n in range(1, 9):
            classic = [p for p in paths.enumerate_paths(2, 0, n)
                       if paths.is_classic_motzkin(p)]
            assert len(classic) == exactmath.motzkin(n)


class TestRender:
    def test_flat(self):
        path = ExtMotzkinPath(3, (0, 0))
        assert paths.render_ascii(path) == "***"

    def test_example7_shape(self):
        art = paths.render_ascii(ExtMotzkinPath(5, EX7_RISES))
        lines = art.splitlines()
        assert len(lines) == 6  # heights 0..5
        assert all(len(line) == 8 for line in lines)
        assert sum(line.count("*") for line in lines) == 8


@given(st.integers(2, 4).flatmap(
    lambda k: st.tuples(st.just(k), st.integers(0, k - 2), st.integers(1, 4))))
@settings(max_examples=25, deadline=None)
def test_path_bijection_property(klm):
    k, l, n = klm
    params = ThresholdParams(k, l, n)
    images = set()
    for s in threshold.enumerate_sequences(params):
        p = paths.path_of(s)
        assert paths.sequence_of_path(p, l) == s
        images.add(p)
    assert images == set(paths.enumerate_paths(k, l, n))
