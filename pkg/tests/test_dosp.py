import pytest
from hypothesis import given, assume, strategies as st

from hstar_lab.dosp import (
    Dosp,
    PolytopeSpec,
    SpotDiagram,
    WindingVector,
    canonicalize,
    cyclic_shift_elements,
    dosp_from_winding_vector,
    format_dosp,
    is_r_hypersimplicial,
    parse_dosp,
    r_bad_blocks,
    winding_number,
    winding_vector,
)
from hstar_lab.enumeration import enumerate_winding_vectors, iter_dosps

EX1 = "({1,2,7}_2,{3,5}_3,{4,6}_1)"


def ex1():
    return parse_dosp(EX1, 6, 7)


@st.composite
def winding_inputs(draw):
    k = draw(st.integers(1, 5))
    n = draw(st.integers(1, 6))
    w = tuple(draw(st.lists(st.integers(0, k - 1), min_size=n, max_size=n)))
    assume(sum(w) % k == 0)
    return w, k


class TestPolytopeSpec:
    def test_valid(self):
        spec = PolytopeSpec(2, 5, 3)
        assert (spec.r, spec.k, spec.n) == (2, 5, 3)

    @pytest.mark.parametrize("r,k,n", [(0, 1, 3), (1, 0, 3), (1, 3, 3), (1, 2, 1), (2, 8, 4)])
    def test_invalid(self, r, k, n):
        with pytest.raises(ValueError):
            PolytopeSpec(r, k, n)


class TestParse:
    def test_example_partition(self):
        p = ex1()
        assert len(p.blocks) == 3
        assert p.blocks[0] == frozenset({1, 2, 7})
        assert p.gaps == (2, 3, 1)

    def test_single_spot_circle(self):
        p = parse_dosp("({1}_1)", 1, 1)
        assert p.blocks == (frozenset({1}),)
        assert p.gaps == (1,)

    def test_duplicate_element(self):
        with pytest.raises(ValueError, match="duplicate element 1"):
            parse_dosp("({1,2}_1,{1,3}_1)", 2, 3)

    def test_duplicate_inside_block(self):
        with pytest.raises(ValueError, match="duplicate element 2"):
            parse_dosp("({2,2}_1,{1}_1)", 2, 2)

    @pytest.mark.parametrize("bad", ["", "{1}_1", "({1}_1", "({1}1)", "({}_1)", "(1_1)", "({1},{2})"])
    def test_malformed_syntax(self, bad):
        with pytest.raises(ValueError, match="malformed"):
            parse_dosp(bad, 2, 2)

    def test_gap_sum_mismatch(self):
        with pytest.raises(ValueError, match="gap labels sum to 3, expected k=4"):
            parse_dosp("({1}_1,{2}_2)", 4, 2)

    def test_nonpositive_gap(self):
        with pytest.raises(ValueError, match="nonpositive gap label"):
            parse_dosp("({1}_0,{2}_2)", 2, 2)

    def test_missing_element(self):
        with pytest.raises(ValueError, match="missing elements"):
            parse_dosp("({1}_1,{2}_1)", 2, 3)

    def test_element_out_of_range(self):
        with pytest.raises(ValueError, match="outside 1..2"):
            parse_dosp("({1}_1,{5}_1)", 2, 2)

    def test_whitespace_is_insignificant(self):
        assert parse_dosp("( {1, 2, 7}_2 , {3,5}_3 , {4,6}_1 )", 6, 7) == ex1()

    def test_parse_canonicalizes(self):
        assert parse_dosp("({3,5}_3,{4,6}_1,{1,2,7}_2)", 6, 7) == ex1()

    def test_print_parse_round_trip(self):
        text = format_dosp(ex1())
        assert text == EX1
        assert parse_dosp(text, 6, 7) == ex1()
        assert str(ex1()) == EX1

    @given(winding_inputs())
    def test_parse_format_round_trip(self, wk):
        w, k = wk
        p = dosp_from_winding_vector(w, k)
        assert parse_dosp(format_dosp(p), p.k, p.n) == p


class TestWinding:
    def test_example_vector_and_number(self):
        wv = winding_vector(ex1())
        assert wv.w == (0, 2, 3, 3, 3, 1, 0)
        assert wv.k == 6
        assert winding_number(ex1()) == 2

    def test_single_block_is_zero(self):
        for n in range(1, 6):
            for k in range(1, 5):
                p = Dosp((frozenset(range(1, n + 1)),), (k,), k, n)
                assert winding_vector(p).w == (0,) * n
                assert winding_number(p) == 0

    def test_alternating_blocks(self):
        p = parse_dosp("({1,3}_1,{2,4}_1)", 2, 4)
        assert winding_vector(p).w == (1, 1, 1, 1)
        assert winding_number(p) == 2

    def test_two_blocks_winding_one(self):
        p = parse_dosp("({1,2}_1,{3,4}_1)", 2, 4)
        assert winding_vector(p).w == (0, 1, 0, 1)
        assert winding_number(p) == 1

    def test_winding_vector_invariant_violation(self):
        with pytest.raises(AssertionError):
            WindingVector((1, 0), 3).winding_number()


class TestBadBlocks:
    def test_example_r1(self):
        assert r_bad_blocks(ex1(), 1) == frozenset({frozenset({3, 5})})

    def test_example_r2(self):
        assert r_bad_blocks(ex1(), 2) == frozenset()

    def test_three_singlets(self):
        p = parse_dosp("({1}_1,{2}_1,{3}_1,{4,5}_1)", 4, 5)
        assert r_bad_blocks(p, 1) == frozenset(
            {frozenset({1}), frozenset({2}), frozenset({3})}
        )

    def test_hypersimplicial_examples(self):
        assert not is_r_hypersimplicial(ex1(), 1)
        assert is_r_hypersimplicial(ex1(), 2)

    def test_single_block_hypersimplicial(self):
        for n in range(2, 7):
            for k in range(1, n):
                p = Dosp((frozenset(range(1, n + 1)),), (k,), k, n)
                assert is_r_hypersimplicial(p, 1)

    def test_matches_emptiness_of_bad_set(self):
        for d in range(4):
            for p in iter_dosps(3, 4, d):
                for r in (1, 2):
                    assert is_r_hypersimplicial(p, r) == (not r_bad_blocks(p, r))

    def test_rejects_bad_r(self):
        with pytest.raises(ValueError):
            r_bad_blocks(ex1(), 0)
        with pytest.raises(ValueError):
            is_r_hypersimplicial(ex1(), 0)


class TestFromWindingVector:
    def test_figure_construction(self):
        p = dosp_from_winding_vector((0, 2, 3, 3, 3, 1, 0), 6)
        assert p == ex1()

    def test_all_zero_gives_single_block(self):
        for k in range(1, 5):
            p = dosp_from_winding_vector((0, 0, 0), k)
            assert p.blocks == (frozenset({1, 2, 3}),)
            assert p.gaps == (k,)

    def test_accepts_winding_vector_value(self):
        wv = winding_vector(ex1())
        assert dosp_from_winding_vector(wv) == ex1()
        with pytest.raises(ValueError, match="conflicting"):
            dosp_from_winding_vector(wv, 7)

    def test_rejects_out_of_range_entries(self):
        with pytest.raises(ValueError, match="outside"):
            dosp_from_winding_vector((0, 3), 3)
        with pytest.raises(ValueError, match="multiple"):
            dosp_from_winding_vector((0, 1), 3)
        with pytest.raises(ValueError):
            dosp_from_winding_vector((), 3)

    def test_round_trip_exhaustive_small(self):
        for k in range(1, 4):
            for n in range(1, 5):
                for d in range(n):
                    for wv in enumerate_winding_vectors(k, n, d):
                        p = dosp_from_winding_vector(wv)
                        assert winding_vector(p) == wv
                        assert winding_number(p) == d

    @given(winding_inputs())
    def test_round_trip_property(self, wk):
        w, k = wk
        p = dosp_from_winding_vector(w, k)
        assert winding_vector(p).w == w


class TestCyclicShift:
    def test_shift_by_one(self):
        shifted = cyclic_shift_elements(ex1(), 1)
        assert shifted == parse_dosp("({1,2,3}_2,{4,6}_3,{5,7}_1)", 6, 7)

    def test_shift_by_zero(self):
        assert cyclic_shift_elements(ex1(), 0) == ex1()

    def test_shift_out_of_range(self):
        with pytest.raises(ValueError):
            cyclic_shift_elements(ex1(), 7)
        with pytest.raises(ValueError):
            cyclic_shift_elements(ex1(), -1)

    def test_winding_number_invariance_small(self):
        for k in range(1, 4):
            for n in range(1, 5):
                for d in range(n):
                    for p in iter_dosps(k, n, d):
                        for s in range(n):
                            assert winding_number(cyclic_shift_elements(p, s)) == d

    @given(winding_inputs(), st.integers(0, 5))
    def test_winding_number_invariance_property(self, wk, s):
        w, k = wk
        p = dosp_from_winding_vector(w, k)
        assume(s < p.n)
        assert winding_number(cyclic_shift_elements(p, s)) == winding_number(p)


class TestCanonicalize:
    def test_rotates_block_with_one_first(self):
        rotated = Dosp(
            (frozenset({3, 5}), frozenset({4, 6}), frozenset({1, 2, 7})),
            (3, 1, 2),
            6,
            7,
        )
        assert canonicalize(rotated) == ex1()

    def test_identity_on_canonical(self):
        assert canonicalize(ex1()) == ex1()

    def test_idempotent_exhaustive(self):
        for k in range(1, 4):
            for n in range(1, 5):
                for d in range(n):
                    for p in iter_dosps(k, n, d):
                        assert canonicalize(p) == p
                        # every rotation lands on the same representative
                        m = len(p.blocks)
                        for shift in range(m):
                            rotated = Dosp(
                                p.blocks[shift:] + p.blocks[:shift],
                                p.gaps[shift:] + p.gaps[:shift],
                                p.k,
                                p.n,
                            )
                            assert canonicalize(rotated) == p


class TestDospValidation:
    def test_empty_block_rejected(self):
        with pytest.raises(ValueError, match="nonempty"):
            Dosp((frozenset(), frozenset({1})), (1, 1), 2, 1)

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="equal length"):
            Dosp((frozenset({1}),), (1, 1), 2, 1)

    def test_no_blocks(self):
        with pytest.raises(ValueError, match="at least one block"):
            Dosp((), (), 0, 0)


class TestSpotDiagram:
    def test_gap_consistency(self):
        for k in range(1, 5):
            for n in range(1, 5):
                for d in range(n):
                    for p in iter_dosps(k, n, d):
                        diagram = SpotDiagram.from_dosp(p)
                        blocks, gaps = diagram.blocks_and_gaps()
                        assert blocks == p.blocks
                        assert gaps == p.gaps
                        assert diagram.to_dosp() == p

    def test_example_diagram(self):
        diagram = SpotDiagram.from_dosp(ex1())
        assert diagram.occupancy[0] == frozenset({1, 2, 7})
        assert diagram.occupancy[2] == frozenset({3, 5})
        assert diagram.occupancy[5] == frozenset({4, 6})
        assert diagram.occupied_spots() == [0, 2, 5]

    def test_red_spots(self):
        p = parse_dosp("({1}_2,{2,3}_1,{4}_1)", 4, 4)
        diagram = SpotDiagram.from_dosp(p)
        assert diagram.red_spots({1}, 2) == frozenset({0, 1})

    def test_red_spots_rejects_non_singleton(self):
        diagram = SpotDiagram.from_dosp(ex1())
        with pytest.raises(ValueError, match="not a singleton"):
            diagram.red_spots({3}, 1)

    def test_red_spots_rejects_missing_element(self):
        diagram = SpotDiagram.from_dosp(ex1())
        with pytest.raises(ValueError, match="does not appear"):
            diagram.red_spots({9}, 1)

    def test_red_spots_rejects_occupied_trailing_spot(self):
        p = parse_dosp("({1}_1,{2,3}_1,{4}_2)", 4, 4)
        diagram = SpotDiagram.from_dosp(p)
        with pytest.raises(ValueError, match="empty spots"):
            diagram.red_spots({1}, 2)
