"""Complementary regions of a ladder and the genus they determine.

Cutting the surface along both curves leaves 2n-gon regions whose
boundaries alternate horizontal edges and arcs.  Walking all of them
gives the face census, the genus of a regular neighborhood of the
union (capped with discs), and bigon detection.

The horizontal edge between intersections i and i+1 (mod k) carries
label (i+1) mod k; each edge appears in the boundary of exactly one
region on each side (RIGHT appearance above it, LEFT below).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .errors import DisjointPairError, MultiCurveError, ParityError
from .ladder import Ladder, beta_components


@dataclass(frozen=True)
class Face:
    """One complementary region, in truncated form.

    ``labels`` lists the horizontal-edge labels on the boundary in
    traversal order; the region is a 2n-gon with n = len(labels).
    """

    index: int
    labels: tuple[int, ...]

    @property
    def degree(self) -> int:
        return 2 * len(self.labels)

    def canonical(self) -> tuple[int, ...]:
        """Rotation starting at the minimal label (comparison helper)."""
        m = self.labels.index(min(self.labels))
        return self.labels[m:] + self.labels[:m]


@dataclass(frozen=True)
class FaceSet:
    """All regions of a ladder plus edge/arc incidence tables.

    ``above[l]`` / ``below[l]`` give the face on either side of
    horizontal edge l; ``slot_face[s]`` the face containing the
    directed arc exiting slot s.  Iterates as a sequence of Face.
    """

    ladder: Ladder
    faces: tuple[Face, ...]
    above: tuple[int, ...]
    below: tuple[int, ...]
    slot_face: tuple[int, ...]

    def __iter__(self):
        return iter(self.faces)

    def __len__(self):
        return len(self.faces)

    def __getitem__(self, i):
        return self.faces[i]

    def arc_sides(self, label: int) -> tuple[int, int]:
        """The two faces adjacent to arc ``label`` (top occurrence first)."""
        slots = [s for s in range(2 * self.ladder.k)
                 if (self.ladder.top[s >> 1] if s % 2 == 0
                     else self.ladder.bottom[s >> 1]) == label]
        return self.slot_face[slots[0]], self.slot_face[slots[1]]


def _walk(ladder: Ladder) -> FaceSet:
    raw, above, below, slot_face = _kernels.face_walk(ladder.k, ladder.mate)
    faces = tuple(Face(i, tuple(labels)) for i, labels in enumerate(raw))
    return FaceSet(ladder, faces, tuple(above), tuple(below), tuple(slot_face))


def faces(ladder: Ladder) -> FaceSet:
    """Traverse every region boundary of a single-curve ladder."""
    trav = beta_components(ladder)
    if not trav.single_curve:
        raise MultiCurveError(
            f"beta has {len(trav.cycles)} components; shear it first"
        )
    return _walk(ladder)


def faces_any(ladder: Ladder) -> FaceSet:
    """Region traversal without the single-curve requirement.

    The walk itself never needs beta connected; template machinery
    uses this on unglued multi-curve configurations.
    """
    return _walk(ladder)


def face_boundaries(face_set: FaceSet) -> list[list[tuple]]:
    """Full boundary item list per face, replaying the region walk.

    Items alternate ``("a", label, dir)`` (dir 0 = RIGHT, 1 = LEFT) and
    ``("b", exit_slot)`` in traversal order.  Used by the exact
    candidate-separation test, which needs the cyclic boundary
    structure and not just the edge labels.
    """
    ladder = face_set.ladder
    k = ladder.k
    mate = ladder.mate
    used = [[False] * 2 for _ in range(k)]
    out: list[list[tuple]] = [[] for _ in range(len(face_set))]
    for seed_label in range(k):
        for seed_dir in (0, 1):
            if used[seed_label][seed_dir]:
                continue
            fid = (face_set.above if seed_dir == 0 else face_set.below)[seed_label]
            items = out[fid]
            lab, d = seed_label, seed_dir
            while not used[lab][d]:
                used[lab][d] = True
                items.append(("a", lab, d))
                i = lab if d == 0 else (lab - 1) % k
                exit_slot = 2 * i + d
                items.append(("b", exit_slot))
                arrive = mate[exit_slot]
                j = arrive >> 1
                if arrive & 1:
                    lab, d = j, 1
                else:
                    lab, d = (j + 1) % k, 0
    return out


def face_vector(face_set: FaceSet) -> dict[int, int]:
    """Census {degree: count}, keys ascending; degree 2n for an n-gon boundary."""
    census: dict[int, int] = {}
    for f in face_set:
        census[f.degree] = census.get(f.degree, 0) + 1
    return dict(sorted(census.items()))


def genus(ladder: Ladder) -> int:
    """Genus of the capped regular neighborhood of the union.

    With k vertices, 2k edges and |F| disc regions this is
    1 + (k - |F|)/2; it is the minimal genus of a closed surface on
    which the pair fills.
    """
    return genus_of(faces(ladder))


def genus_of(face_set: FaceSet) -> int:
    k = face_set.ladder.k
    if (k - len(face_set)) % 2:
        raise ParityError(f"k - |F| odd (k={k}, |F|={len(face_set)})")
    return 1 + (k - len(face_set)) // 2


def reduce_bigons(ladder: Ladder) -> tuple[Ladder | None, int]:
    """Remove bigon regions until none remain.

    Returns ``(reduced, count)``; ``reduced`` is None when reduction
    removed every intersection (the curves pull apart).  Each step
    deletes one degree-2 region bounded by one horizontal edge and one
    arc, dropping two intersections; the capped genus is unchanged.
    """
    top, bottom, removed = _kernels.reduce_bigons(
        list(ladder.top), list(ladder.bottom)
    )
    if not top:
        return None, removed
    if removed == 0:
        return ladder, 0
    return Ladder.from_rows(top, bottom), removed


def reduce_bigons_strict(ladder: Ladder) -> tuple[Ladder, int]:
    """Like :func:`reduce_bigons` but a disjoint result is an error."""
    reduced, removed = reduce_bigons(ladder)
    if reduced is None:
        raise DisjointPairError(
            "bigon reduction removed every intersection; curves are disjoint"
        )
    return reduced, removed
