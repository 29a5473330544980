import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvedist.errors import LadderError, MultiCurveError
from curvedist.ladder import (
    Ladder,
    beta_components,
    canonical_form,
    characteristic_matrix,
    ladder_from_matrix,
    ladders_isomorphic,
    parse_ladder,
    transpose,
)

from conftest import random_ladder, random_single_curve_ladder


class TestParsing:
    def test_paper_input_block(self, f8):
        assert f8.k == 12
        assert f8.top == (1, 6, 11, 4, 3, 2, 7, 0, 5, 9, 8, 7)
        assert f8.bottom == (0, 5, 10, 3, 2, 1, 6, 11, 4, 10, 9, 8)

    def test_smallest_ladder(self):
        lad = parse_ladder("0", "0")
        assert lad.k == 1

    def test_bad_multiplicity(self):
        with pytest.raises(LadderError) as exc:
            parse_ladder("0,1", "0,2")
        assert exc.value.code == "BAD_MULTIPLICITY"

    def test_length_mismatch(self):
        with pytest.raises(LadderError) as exc:
            parse_ladder("0,1,0,1", "0,0")
        assert exc.value.code == "LENGTH_MISMATCH"

    def test_empty_input(self):
        with pytest.raises(LadderError) as exc:
            parse_ladder("  ", "0")
        assert exc.value.code == "EMPTY_INPUT"

    def test_garbage_text(self):
        with pytest.raises(LadderError):
            parse_ladder("0,x", "0,x")

    def test_arbitrary_labels_normalized(self):
        lad = parse_ladder("17,99", "99,17")
        assert lad.top == (0, 1)
        assert lad.bottom == (1, 0)

    def test_normalization_identity_on_canonical(self, f8):
        again = Ladder.from_rows(f8.top, f8.bottom)
        assert again == f8

    def test_whitespace_tolerated(self):
        assert parse_ladder(" 0 , 1 ", "1, 0").k == 2


class TestBetaTraversal:
    def test_f8_single_curve_and_orientation(self, f8):
        trav = beta_components(f8)
        assert trav.cycles == ((0, 7, 2, 9, 10, 11, 6, 1, 8, 3, 4, 5),)
        down = {i for i in range(12) if trav.pointing_down[i]}
        assert down == set(range(9))

    def test_trivial(self):
        trav = beta_components(parse_ladder("0", "0"))
        assert trav.cycles == ((0,),)
        assert trav.pointing_down == (True,)

    def test_two_step_walk(self):
        trav = beta_components(parse_ladder("0,1", "1,0"))
        assert trav.cycles == ((0, 1),)

    def test_multi_curve(self):
        trav = beta_components(parse_ladder("0,1", "0,1"))
        assert len(trav.cycles) == 2

    def test_cycles_partition(self):
        rng = random.Random(11)
        for _ in range(200):
            lad = random_ladder(rng, rng.randint(1, 14))
            trav = beta_components(lad)
            everything = [i for c in trav.cycles for i in c]
            assert sorted(everything) == list(range(lad.k))
            for cycle in trav.cycles:
                assert cycle[0] == min(cycle)
                assert trav.pointing_down[cycle[0]]

    def test_up_down_mutually_inverse(self):
        rng = random.Random(12)
        for _ in range(200):
            lad = random_ladder(rng, rng.randint(1, 14))
            for i in range(lad.k):
                j = lad.up(i)
                assert i in (lad.up(j), lad.down(j))
                j = lad.down(i)
                assert i in (lad.up(j), lad.down(j))


class TestCharacteristicMatrix:
    def test_published_rows(self, f8):
        m = characteristic_matrix(f8)
        assert m[0] == (-11, -5, 1, 7)
        assert m[1] == (-12, -6, 2, 8)
        assert m[9] == (-8, 10, 10, -2)

    def test_invariants(self, f8):
        m = characteristic_matrix(f8)
        k = m.k
        for i, (vm, wp, vp, wm) in enumerate(m):
            assert vm < 0 and abs(vm) % k == (i - 1) % k
            assert vp > 0 and vp % k == (i + 1) % k
            assert 1 <= abs(wp) <= k and 1 <= abs(wm) <= k
            assert (wp < 0) != (wm < 0)
            assert {abs(wp) % k, abs(wm) % k} == {f8.up(i), f8.down(i)}

    def test_multi_curve_rejected(self):
        with pytest.raises(MultiCurveError):
            characteristic_matrix(parse_ladder("0,1", "0,1"))

    def test_round_trip_f8(self, f8):
        rebuilt = ladder_from_matrix(characteristic_matrix(f8))
        assert ladders_isomorphic(rebuilt, f8)

    def test_round_trip_random(self):
        rng = random.Random(13)
        for _ in range(150):
            lad = random_single_curve_ladder(rng, rng.randint(1, 14))
            rebuilt = ladder_from_matrix(characteristic_matrix(lad))
            assert ladders_isomorphic(rebuilt, lad)

    def test_orientation_flip_changes_only_w_signs(self, f8):
        m = characteristic_matrix(f8)
        flipped = type(m)(
            tuple((vm, -wp, vp, -wm) for vm, wp, vp, wm in m)
        )
        rebuilt = ladder_from_matrix(flipped)
        assert ladders_isomorphic(rebuilt, f8)


class TestRelabeling:
    def test_beta_invariant_under_relabeling(self):
        rng = random.Random(14)
        for _ in range(100):
            lad = random_ladder(rng, rng.randint(2, 12))
            perm = list(range(lad.k))
            rng.shuffle(perm)
            relabeled = Ladder.from_rows(
                [perm[x] for x in lad.top], [perm[x] for x in lad.bottom]
            )
            assert beta_components(relabeled) == beta_components(lad)

    def test_canonical_form_detects_isomorphism(self, f8):
        perm = [(x + 5) % 12 for x in range(12)]
        relabeled = Ladder.from_rows(
            [perm[x] for x in f8.top], [perm[x] for x in f8.bottom]
        )
        assert canonical_form(relabeled) == canonical_form(f8)
        assert ladders_isomorphic(relabeled, f8)


def same_configuration(a: Ladder, b: Ladder) -> bool:
    """Equal up to the symmetries that leave the pair's geometry alone:
    basepoint rotation, reversing the horizontal direction, swapping
    which side is called top, and arc relabeling."""
    images = [b, b.swapped_rows()]
    images += [
        Ladder.from_rows(im.top[::-1], im.bottom[::-1]) for im in images
    ]
    return any(ladders_isomorphic(a, im, up_to_rotation=True) for im in images)


class TestTranspose:
    def test_involution_up_to_relabeling(self, f8):
        assert ladders_isomorphic(transpose(transpose(f8)), f8,
                                  up_to_rotation=True)

    def test_involution_random(self):
        # the double transpose may come back with the horizontal curve
        # reversed; it is the same configuration up to symmetry
        rng = random.Random(15)
        for _ in range(60):
            lad = random_single_curve_ladder(rng, rng.randint(1, 12))
            assert same_configuration(transpose(transpose(lad)), lad)

    def test_multi_curve_rejected(self):
        with pytest.raises(MultiCurveError):
            transpose(parse_ladder("0,1", "0,1"))


@st.composite
def slot_pairings(draw):
    k = draw(st.integers(min_value=1, max_value=10))
    slots = draw(st.permutations(list(range(2 * k))))
    return k, slots


@given(slot_pairings())
@settings(max_examples=200, deadline=None)
def test_any_pairing_is_a_valid_ladder(pairing):
    k, slots = pairing
    top = [-1] * k
    bottom = [-1] * k
    for lab in range(k):
        for s in (slots[2 * lab], slots[2 * lab + 1]):
            if s % 2 == 0:
                top[s >> 1] = lab
            else:
                bottom[s >> 1] = lab
    lad = Ladder.from_rows(top, bottom)
    assert lad.k == k
    mate = lad.mate
    assert all(mate[mate[s]] == s and mate[s] != s for s in range(2 * k))


@given(slot_pairings(), st.integers(min_value=0, max_value=30))
@settings(max_examples=150, deadline=None)
def test_rotation_preserves_structure(pairing, r):
    k, slots = pairing
    top = [-1] * k
    bottom = [-1] * k
    for lab in range(k):
        for s in (slots[2 * lab], slots[2 * lab + 1]):
            if s % 2 == 0:
                top[s >> 1] = lab
            else:
                bottom[s >> 1] = lab
    lad = Ladder.from_rows(top, bottom)
    rotated = lad.rotated_basepoint(r)
    trav, rtrav = beta_components(lad), beta_components(rotated)
    assert len(trav.cycles) == len(rtrav.cycles)
    assert sorted(len(c) for c in trav.cycles) == sorted(
        len(c) for c in rtrav.cycles
    )
