import random

import pytest

from curvedist.errors import MultiCurveError
from curvedist.faces import (
    face_boundaries,
    face_vector,
    faces,
    faces_any,
    genus,
    genus_of,
    reduce_bigons,
    reduce_bigons_strict,
)
from curvedist.errors import DisjointPairError
from curvedist.ladder import (
    beta_components,
    characteristic_matrix,
    ladders_isomorphic,
    parse_ladder,
)

from conftest import random_ladder, random_single_curve_ladder
from oracles import canonical_cycle, insert_bigon, trule_faces

PUBLISHED_F8_FACES = [
    (0, 11, 7), (0, 5, 6), (1, 6), (8, 1), (2, 7),
    (9, 10, 2), (8, 3), (9, 3, 4), (4, 5), (10, 11),
]


def face_tuple_set(face_set):
    return sorted(canonical_cycle(f.labels) for f in face_set)


class TestFaceList:
    def test_published_census(self, f8):
        assert face_vector(faces(f8)) == {4: 6, 6: 4}

    def test_published_tuples_up_to_rotation(self, f8):
        mine = face_tuple_set(faces(f8))
        published = sorted(canonical_cycle(t) for t in PUBLISHED_F8_FACES)
        assert mine == published

    def test_worked_walk_tuple(self, f8):
        # seeding at the rightward edge 11->0 walks the (0, 5, 6) region
        fs = faces(f8)
        by_first = {f.labels: f for f in fs}
        assert (0, 5, 6) in by_first

    def test_g3_census_size(self, g3):
        fs = faces(g3)
        assert len(fs) == 25  # k - 2(genus - 1) = 29 - 4
        assert sum(face_vector(fs).values()) == 25

    def test_trivial_ladder_single_square(self):
        # one transverse crossing on the torus leaves one square region;
        # the directed-edge partition forces degree 4, not 2
        fs = faces(parse_ladder("0", "0"))
        assert face_vector(fs) == {4: 1}

    def test_multi_curve_rejected(self):
        with pytest.raises(MultiCurveError):
            faces(parse_ladder("0,1", "0,1"))
        assert len(faces_any(parse_ladder("0,1", "0,1"))) == 2


class TestPartition:
    def test_directed_edges_partition(self):
        rng = random.Random(21)
        for _ in range(300):
            lad = random_ladder(rng, rng.randint(1, 14))
            fs = faces_any(lad)
            # every horizontal edge bounds exactly one region per side
            assert all(a >= 0 for a in fs.above)
            assert all(b >= 0 for b in fs.below)
            assert all(s >= 0 for s in fs.slot_face)
            # total appearances: each of k edges twice
            assert sum(len(f.labels) for f in fs) == 2 * lad.k

    def test_face_boundaries_consistent(self, f8):
        fs = faces(f8)
        bounds = face_boundaries(fs)
        for face, items in zip(fs, bounds):
            alpha_items = [it for it in items if it[0] == "a"]
            assert tuple(it[1] for it in alpha_items) == face.labels
            assert len(items) == 2 * len(face.labels)


class TestGenus:
    def test_fixture_genera(self, f8, g3):
        assert genus(f8) == 2
        assert genus(g3) == 3

    def test_torus_pair(self):
        assert genus(parse_ladder("0,1", "1,0")) == 1

    def test_euler_identity(self):
        rng = random.Random(22)
        for _ in range(200):
            lad = random_single_curve_ladder(rng, rng.randint(1, 14))
            fs = faces(lad)
            g = genus_of(fs)
            assert lad.k - 2 * lad.k + len(fs) == 2 - 2 * g


class TestTRuleOracle:
    """The slot walk must agree with the published turning rules
    driven directly off the signed neighbor table."""

    def test_f8(self, f8):
        mine = face_tuple_set(faces(f8))
        oracle = sorted(
            canonical_cycle(t) for t in trule_faces(characteristic_matrix(f8))
        )
        assert mine == oracle

    def test_random_unambiguous_ladders(self):
        rng = random.Random(23)
        checked = 0
        while checked < 120:
            lad = random_single_curve_ladder(rng, rng.randint(2, 14))
            if any(lad.up(i) == lad.down(i) for i in range(lad.k)):
                continue
            checked += 1
            mine = face_tuple_set(faces(lad))
            oracle = sorted(
                canonical_cycle(t)
                for t in trule_faces(characteristic_matrix(lad))
            )
            assert mine == oracle


class TestBigons:
    def test_f8_already_reduced(self, f8):
        reduced, removed = reduce_bigons(f8)
        assert removed == 0 and reduced == f8

    def test_trivial_ladder_unchanged(self):
        lad = parse_ladder("0", "0")
        assert reduce_bigons(lad) == (lad, 0)

    def test_insertion_inverts(self):
        # doubling one intersection of the k=2 torus pair
        lad = parse_ladder("0,1", "1,0")
        bigger = insert_bigon(lad, 0)
        assert bigger.k == 4
        reduced, removed = reduce_bigons(bigger)
        assert removed == 1
        assert ladders_isomorphic(reduced, lad)

    def test_disjoint_result(self):
        lad = parse_ladder("0,0", "1,1")
        reduced, removed = reduce_bigons(lad)
        assert reduced is None and removed == 1
        with pytest.raises(DisjointPairError):
            reduce_bigons_strict(lad)

    def test_reduction_preserves_capped_genus(self):
        rng = random.Random(24)
        for _ in range(200):
            lad = random_single_curve_ladder(rng, rng.randint(2, 10))
            bigger = insert_bigon(lad, rng.randrange(lad.k))
            assert beta_components(bigger).single_curve
            assert genus(bigger) == genus(lad)
            reduced, removed = reduce_bigons(bigger)
            assert removed == 1
            assert bigger.k - 2 * removed == reduced.k
            assert ladders_isomorphic(reduced, lad)

    def test_nested_insertions(self):
        lad = parse_ladder("0,1", "1,0")
        bigger = insert_bigon(insert_bigon(lad, 0), 2)
        reduced, removed = reduce_bigons(bigger)
        assert removed == 2
        assert ladders_isomorphic(reduced, lad)
