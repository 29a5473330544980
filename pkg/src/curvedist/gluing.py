"""Boundary re-identification search (the ``perm``/shear functionality).

Regluing the two boundary circles of the split surface by a different
rotation rotates one ladder row against the other.  Only the relative
rotation matters, so the k rotations of the top row over a fixed
bottom row exhaust the oriented identifications.  Each offset either
joins the arcs into a single vertical curve or leaves a multi-curve;
single-curve offsets can be distance-classified in place.
"""

from __future__ import annotations

from dataclasses import dataclass

from .distance import DistanceResult, distance
from .errors import GenusTooSmallError
from .ladder import Ladder, beta_components


@dataclass(frozen=True)
class GluingResult:
    offset: int
    ladder: Ladder
    single_curve: bool
    verdict: DistanceResult | None = None


def enumerate_gluings(
    ladder: Ladder,
    classify: bool = False,
    ambient_genus: int | None = None,
    circuit_cap: int | None = None,
) -> list[GluingResult]:
    """All k top-row rotations, flagged single/multi curve.

    With ``classify`` each single-curve gluing carries a distance
    verdict; ``ambient_genus`` pins the surface the verdict refers to
    (a pipeline passes its template's genus so non-filling gluings
    come back as distance 2), otherwise each gluing is judged on the
    surface it fills itself.
    """
    results = []
    for offset in range(ladder.k):
        glued = ladder.rotated_top(offset)
        single = beta_components(glued).single_curve
        verdict = None
        if classify and single:
            verdict = distance(
                glued, ambient_genus=ambient_genus, circuit_cap=circuit_cap
            )
        results.append(GluingResult(offset, glued, single, verdict))
    return results


def single_curve_gluings(ladder: Ladder, **kwargs) -> list[GluingResult]:
    """Just the gluings whose arcs join into one curve."""
    return [g for g in enumerate_gluings(ladder, **kwargs) if g.single_curve]
