"""Ladder representation of a pair of curves on a surface.

A ladder records a filling pair (alpha, beta) combinatorially: alpha
is a horizontal circle carrying k intersection points, and beta is cut
by alpha into k arcs whose endpoint slots sit above (top row) and
below (bottom row) the intersections.  Each arc label occurs exactly
twice across the two rows; the two occurrences are the arc's
endpoints.

The rows are exactly what the interactive tool prompts for::

    Input top identifications: 1,6,11,4,3,2,7,0,5,9,8,7
    Input bottom identifications: 0,5,10,3,2,1,6,11,4,10,9,8

Labels are normalized to 0..k-1 by rank, so canonically-labelled
input is kept verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from . import _kernels
from .errors import LadderError, MultiCurveError

TOP = "TOP"
BOTTOM = "BOTTOM"
DOWN = "DOWN"
UP = "UP"


@dataclass(frozen=True)
class Ladder:
    """Two equal-length rows of arc labels; immutable once validated."""

    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self):
        _validate_rows(self.top, self.bottom)

    @classmethod
    def from_rows(cls, top, bottom) -> "Ladder":
        """Build from arbitrary integer labels, renaming them by rank."""
        top = tuple(top)
        bottom = tuple(bottom)
        _validate_rows(top, bottom)
        rank = {lab: r for r, lab in enumerate(sorted(set(top + bottom)))}
        return cls(tuple(rank[x] for x in top), tuple(rank[x] for x in bottom))

    @property
    def k(self) -> int:
        """Intersection count |alpha ∩ beta|."""
        return len(self.top)

    @cached_property
    def mate(self) -> list[int]:
        """Slot involution: slot 2i is top of intersection i, 2i+1 bottom."""
        first: dict[int, int] = {}
        mate = [-1] * (2 * self.k)
        for s, lab in enumerate(self._slot_labels()):
            if lab in first:
                mate[s] = first[lab]
                mate[first[lab]] = s
            else:
                first[lab] = s
        return mate

    def _slot_labels(self):
        for i in range(self.k):
            yield self.top[i]
            yield self.bottom[i]

    def up(self, i: int) -> int:
        """Intersection reached through the top half-arc at i."""
        return self.mate[2 * i] >> 1

    def down(self, i: int) -> int:
        """Intersection reached through the bottom half-arc at i."""
        return self.mate[2 * i + 1] >> 1

    def rotated_top(self, offset: int) -> "Ladder":
        """Top row cyclically rotated left by ``offset``, bottom fixed."""
        r = offset % self.k
        return Ladder(self.top[r:] + self.top[:r], self.bottom)

    def rotated_basepoint(self, r: int) -> "Ladder":
        """Both rows rotated together: same configuration, new index 0."""
        r %= self.k
        return Ladder(self.top[r:] + self.top[:r], self.bottom[r:] + self.bottom[:r])

    def swapped_rows(self) -> "Ladder":
        return Ladder(self.bottom, self.top)

    def __str__(self):
        return f"{list(self.top)} / {list(self.bottom)}"


def _validate_rows(top: tuple[int, ...], bottom: tuple[int, ...]) -> None:
    if not top or not bottom:
        raise LadderError("empty identification row", code="EMPTY_INPUT")
    if len(top) != len(bottom):
        raise LadderError(
            f"rows differ in length ({len(top)} vs {len(bottom)})",
            code="LENGTH_MISMATCH",
        )
    counts: dict[int, int] = {}
    for lab in top + bottom:
        counts[lab] = counts.get(lab, 0) + 1
    bad = sorted(lab for lab, c in counts.items() if c != 2)
    if bad:
        raise LadderError(
            f"labels must occur exactly twice, bad: {bad}",
            code="BAD_MULTIPLICITY",
        )


def parse_ladder(top_text: str, bottom_text: str) -> Ladder:
    """Parse two comma-separated integer rows into a normalized Ladder."""
    return Ladder.from_rows(_parse_row(top_text), _parse_row(bottom_text))


def _parse_row(text: str) -> list[int]:
    if not text.strip():
        raise LadderError("empty identification row", code="EMPTY_INPUT")
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise LadderError(f"not a comma-separated integer row: {text!r}") from exc


@dataclass(frozen=True)
class BetaTraversal:
    """Cycle decomposition of beta with a DOWN/UP flag per intersection.

    Orientation convention: beta is directed DOWN at the minimal index
    of each cycle.
    """

    cycles: tuple[tuple[int, ...], ...]
    pointing_down: tuple[bool, ...]

    @property
    def single_curve(self) -> bool:
        return len(self.cycles) == 1


def beta_components(ladder: Ladder) -> BetaTraversal:
    """Trace beta through the ladder: cycles plus orientation flags."""
    cycles, down = _kernels.beta_cycles(ladder.k, ladder.mate)
    return BetaTraversal(
        tuple(tuple(c) for c in cycles),
        tuple(bool(d) for d in down),
    )


@dataclass(frozen=True)
class CharacteristicMatrix:
    """k x 4 signed neighbor table, one row per intersection.

    Row i is ``[v-, w+, v+, w-]``: signed horizontal neighbors i-1 and
    i+1, and the intersections reached through the top (w+) and bottom
    (w-) half-arcs.  Magnitudes are residues in 1..k with k standing
    for 0 so that every entry keeps a meaningful sign; v- is always
    negative, v+ positive, and exactly one of w+, w- is negative (w+ is
    negative exactly where beta points down).
    """

    rows: tuple[tuple[int, int, int, int], ...]

    @property
    def k(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, i):
        return self.rows[i]


def _residue(x: int, k: int) -> int:
    r = x % k
    return r if r else k


def characteristic_matrix(ladder: Ladder) -> CharacteristicMatrix:
    """Signed neighbor table of a single-curve ladder."""
    trav = beta_components(ladder)
    if not trav.single_curve:
        raise MultiCurveError(
            f"beta has {len(trav.cycles)} components; matrix needs one"
        )
    k = ladder.k
    rows = []
    for i in range(k):
        sign = -1 if trav.pointing_down[i] else 1
        rows.append(
            (
                -_residue(i - 1, k),
                sign * _residue(ladder.up(i), k),
                _residue(i + 1, k),
                -sign * _residue(ladder.down(i), k),
            )
        )
    return CharacteristicMatrix(tuple(rows))


def transpose(ladder: Ladder) -> Ladder:
    """Ladder of the same pair with the curve roles swapped.

    Intersections are re-indexed along the vertical curve; at each one
    the two horizontal edge-halves become the new arc slots.  Where
    the old vertical curve points down, the edge toward the next
    intersection sits on its left and goes on top (this choice keeps
    the surface's orientation; the other is its mirror image).
    Requires a single-curve ladder.
    """
    trav = beta_components(ladder)
    if not trav.single_curve:
        raise MultiCurveError("transpose needs a single-curve ladder")
    k = ladder.k
    top = []
    bottom = []
    for i in trav.cycles[0]:
        east = (i + 1) % k
        west = i
        if trav.pointing_down[i]:
            top.append(east)
            bottom.append(west)
        else:
            top.append(west)
            bottom.append(east)
    return Ladder.from_rows(top, bottom)


def canonical_form(ladder: Ladder) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Rows with arcs renamed by first appearance in top then bottom.

    Two ladders have equal canonical forms iff they differ only by a
    renaming of arc labels.
    """
    names: dict[int, int] = {}
    rows = []
    for row in (ladder.top, ladder.bottom):
        out = []
        for lab in row:
            if lab not in names:
                names[lab] = len(names)
            out.append(names[lab])
        rows.append(tuple(out))
    return rows[0], rows[1]


def ladders_isomorphic(a: Ladder, b: Ladder, up_to_rotation: bool = False) -> bool:
    """Equality up to arc relabeling, optionally also basepoint rotation."""
    if a.k != b.k:
        return False
    target = canonical_form(b)
    offsets = range(a.k) if up_to_rotation else (0,)
    return any(canonical_form(a.rotated_basepoint(r)) == target for r in offsets)


def ladder_from_matrix(matrix: CharacteristicMatrix) -> Ladder:
    """Rebuild a ladder from its characteristic matrix.

    Inverse of :func:`characteristic_matrix` up to arc relabeling: the
    signs let us replay the beta walk, which pairs every exit slot
    with its arrival slot.
    """
    k = matrix.k
    mate = [-1] * (2 * k)
    seen = [False] * k
    for start in range(k):
        if seen[start]:
            continue
        i = start
        down_at = matrix[i][1] < 0
        while not seen[i]:
            seen[i] = True
            w_plus, w_minus = matrix[i][1], matrix[i][3]
            nxt = abs(w_minus) % k if down_at else abs(w_plus) % k
            exit_slot = 2 * i + (1 if down_at else 0)
            down_next = matrix[nxt][1] < 0
            arrive_slot = 2 * nxt + (0 if down_next else 1)
            mate[exit_slot] = arrive_slot
            mate[arrive_slot] = exit_slot
            i, down_at = nxt, down_next
    top = [-1] * k
    bottom = [-1] * k
    label = 0
    for s in range(2 * k):
        if s <= mate[s]:
            for slot in (s, mate[s]):
                if slot % 2 == 0:
                    top[slot >> 1] = label
                else:
                    bottom[slot >> 1] = label
            label += 1
    return Ladder.from_rows(top, bottom)
