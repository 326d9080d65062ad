import itertools
import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tdma_psa import (
    BLACK,
    GRAY,
    WHITE,
    ScheduleError,
    ScheduleMatrix,
    SlotState,
    combine_frames,
    gray_count,
    match_frames,
    max_gray_frame,
    parse_matrix,
)

from oracles import MATCH_TABLE, table_match

B, G, W = BLACK, GRAY, WHITE
STATES = (BLACK, GRAY, WHITE)


def frame(text: str):
    return tuple(SlotState.from_char(c) for c in text)


def sparse_frame(gray, black=(), n=15):
    """Frame with the listed grays and blacks, every other slot white."""
    return tuple(G if i in gray else B if i in black else W for i in range(1, n + 1))


class TestMatch:
    def test_examples(self):
        assert match_frames((B, G), (G, B))
        assert not match_frames((B, W), (W, W))
        for b in itertools.product(STATES, repeat=2):
            assert match_frames((G, G), b)

    def test_single_slot_clause_table(self):
        for (x, y), expected in MATCH_TABLE.items():
            assert match_frames((x,), (y,)) is expected

    def test_length_mismatch(self):
        with pytest.raises(ScheduleError):
            match_frames((B,), (B, G))

    def test_exhaustive_short_frames_agree_with_table(self):
        for a in itertools.product(STATES, repeat=3):
            for b in itertools.product(STATES, repeat=3):
                assert match_frames(a, b) == table_match(a, b) == match_frames(b, a)

    def test_match_on_fifteen_node_frames(self):
        # Slot-level definitions decide: B/C match, A/B clash at node 8.
        a = sparse_frame({2, 4, 9, 10, 11, 14, 15}, black={8})
        b = sparse_frame({1, 2, 4, 9, 10, 14, 15}, black={13})
        c = sparse_frame({9, 10, 11, 12, 13, 14, 15}, black={1})
        assert match_frames(b, c)
        assert not match_frames(a, b)
        assert not match_frames(a, c)


class TestCombine:
    def test_example(self):
        assert combine_frames((B, G), (G, B)) == (B, B)

    def test_all_gray_is_absorbed(self):
        rng = random.Random(0)
        for _ in range(50):
            b = tuple(rng.choice(STATES) for _ in range(6))
            assert combine_frames((G,) * 6, b) == b

    def test_mismatch_is_an_error(self):
        with pytest.raises(ScheduleError):
            combine_frames((B, W), (W, W))
        assert combine_frames((B, W), (W, W), check=False) == (W, W)

    def test_combine_gray_pattern(self):
        a = sparse_frame({1, 2, 4, 9, 10, 14, 15})
        b = sparse_frame({9, 10, 11, 12, 13, 14, 15})
        r = combine_frames(a, b)
        assert {i for i, x in enumerate(r, start=1) if x is G} == {9, 10, 14, 15}
        # where b is gray, r copies a; everywhere else r copies b
        assert r[10:13] == a[10:13]
        assert r[:8] == b[:8]

    @given(st.lists(st.tuples(st.sampled_from(STATES), st.sampled_from(STATES)), min_size=1, max_size=20))
    def test_matched_combination_properties(self, pairs):
        a = tuple(x for x, _ in pairs)
        b = tuple(y for _, y in pairs)
        if not match_frames(a, b):
            return
        r = combine_frames(a, b)
        assert r == combine_frames(b, a)
        for x, y, z in zip(a, b, r):
            if B in (x, y):
                assert z is B
            assert (z is G) == (x is G and y is G)
        assert gray_count(r) <= min(gray_count(a), gray_count(b))


def test_gray_count():
    assert gray_count((B, G, W, G)) == 2
    assert gray_count((W,) * 5) == 0
    assert gray_count((G,) * 7) == 7


class TestMaxGrayFrame:
    def matrix(self, counts, n=4):
        return ScheduleMatrix(n, tuple((G,) * c + (W,) * (n - c) for c in counts))

    def test_first_maximum_wins(self):
        s = self.matrix([2, 3, 3])
        assert max_gray_frame(s) == 1
        assert max_gray_frame(s, excluded=1) == 2

    def test_single_frame_excluded(self):
        assert max_gray_frame(self.matrix([2]), excluded=0) is None

    def test_no_gray_means_no_pick(self):
        assert max_gray_frame(self.matrix([0, 0])) is None

    def test_excluded_by_position_not_value(self):
        s = ScheduleMatrix(2, ((G, G), (G, G)))
        assert max_gray_frame(s) == 0
        assert max_gray_frame(s, excluded=0) == 1

    def test_accepts_plain_frame_lists(self):
        assert max_gray_frame([(W, W), (G, W)]) == 1


class TestScheduleMatrix:
    def test_width_is_checked(self):
        with pytest.raises(ScheduleError):
            ScheduleMatrix(3, ((B, W),))

    def test_counts(self):
        s = ScheduleMatrix(3, (frame("BwB"), frame("wB.")))
        assert s.frame_length == 2
        assert s.black_count == 3
        assert s.per_node_blacks() == [1, 1, 1]
        assert s.has_gray
        assert s.blacks_in_frame(0) == [1, 3]

    def test_text_and_json_round_trip(self):
        s = ScheduleMatrix(4, (frame("Bw.w"), frame("wBwB")))
        assert s.to_text() == "Bw.w\nwBwB\n"
        assert parse_matrix(s.to_text()) == s
        assert parse_matrix("# comment\n" + s.to_text()) == s
        assert parse_matrix(json.dumps(s.to_dict())) == s
        assert s.to_dict() == {"nodes": 4, "frames": [list("Bw.w"), list("wBwB")]}

    def test_to_array(self):
        s = ScheduleMatrix(3, (frame("Bw."),))
        assert s.to_array().tolist() == [[1, 0, -1]]

    @pytest.mark.parametrize(
        "text",
        ["BwX\n", "Bw\nBww\n", "", '{"frames": []}', '{"nodes": "3", "frames": []}', "{bad json"],
    )
    def test_parse_errors(self, text):
        with pytest.raises(ScheduleError):
            parse_matrix(text)
