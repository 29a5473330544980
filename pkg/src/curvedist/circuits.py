"""Dual graph of the face decomposition and its elementary circuits.

Faces are vertices; each horizontal edge contributes one dual edge
joining the face above it to the face below (a multigraph — self-loops
happen when one face sits on both sides).  Vertex-simple cycles of
this graph are the candidate curves of the distance test: each one
crosses every horizontal edge at most once and visits every face at
most once, so it embeds with at most one arc per face.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .errors import CircuitLimitError
from .faces import FaceSet

DEFAULT_CIRCUIT_CAP = 10**6


@dataclass(frozen=True)
class DualGraph:
    """Multigraph with one labelled edge per horizontal edge.

    ``edges[e] = (u, v, label)`` with u the face above the horizontal
    edge and v the face below.
    """

    n_vertices: int
    edges: tuple[tuple[int, int, int], ...]

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def betti(self) -> int:
        """First Betti number |E| - |V| + #components."""
        parent = list(range(self.n_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v, _ in self.edges:
            parent[find(u)] = find(v)
        components = sum(1 for x in range(self.n_vertices) if find(x) == x)
        return len(self.edges) - self.n_vertices + components


def dual_graph(face_set: FaceSet) -> DualGraph:
    """Dual graph across horizontal edges, edges labelled by edge label."""
    edges = tuple(
        (face_set.above[lab], face_set.below[lab], lab)
        for lab in range(face_set.ladder.k)
    )
    return DualGraph(len(face_set), edges)


def beta_dual_graph(face_set: FaceSet) -> DualGraph:
    """Dual graph across arcs instead: one edge per arc label.

    Used on unglued arc-system configurations, where the regions and
    arc adjacencies do not depend on any later boundary gluing.
    """
    ladder = face_set.ladder
    sides: dict[int, list[int]] = {}
    for s in range(2 * ladder.k):
        lab = ladder.top[s >> 1] if s % 2 == 0 else ladder.bottom[s >> 1]
        sides.setdefault(lab, []).append(face_set.slot_face[s])
    edges = tuple(
        (sides[lab][0], sides[lab][1], lab) for lab in sorted(sides)
    )
    return DualGraph(len(face_set), edges)


@dataclass(frozen=True)
class Circuit:
    """A vertex-simple cycle, stored canonically.

    ``labels[j]`` is the edge crossed between ``faces[j-1]`` and
    ``faces[j]`` (indices mod length).  Canonical form: the minimal
    rotation of the lexicographically smaller traversal direction, so
    equality is equality up to rotation and reversal.
    """

    labels: tuple[int, ...]
    faces: tuple[int, ...]

    def __len__(self):
        return len(self.labels)

    @property
    def label_set(self) -> frozenset[int]:
        return frozenset(self.labels)


def _rotate(labels, faces, r):
    return labels[r:] + labels[:r], faces[r:] + faces[:r]


def _reverse(labels, faces):
    # Walking the cycle backwards: edge j of the reversal is the old
    # edge m-1-j, and the face after it is the old face m-2-j.
    rev_labels = labels[::-1]
    rev_faces = faces[::-1]
    rev_faces = rev_faces[1:] + rev_faces[:1]
    return rev_labels, rev_faces


def canonical_circuit(labels, faces) -> Circuit:
    """Canonicalize an aligned (labels, faces) cycle."""
    labels = tuple(labels)
    faces = tuple(faces)
    m = len(labels)
    best = None
    for cand_labels, cand_faces in (
        (labels, faces),
        _reverse(labels, faces),
    ):
        for r in range(m):
            rot = _rotate(cand_labels, cand_faces, r)
            if best is None or rot[0] < best[0] or (
                rot[0] == best[0] and rot[1] < best[1]
            ):
                best = rot
    return Circuit(best[0], best[1])


def elementary_circuits(
    graph: DualGraph, cap: int = DEFAULT_CIRCUIT_CAP
) -> list[Circuit]:
    """Every elementary circuit exactly once, in canonical sorted order.

    Includes length-1 circuits (self-loops) and length-2 circuits
    (pairs of parallel edges).  Enumeration is exponential in the
    worst case; more than ``cap`` circuits raises CircuitLimitError.
    """
    plain = [(u, v) for u, v, _ in graph.edges]
    try:
        raw = _kernels.simple_cycles_edges(graph.n_vertices, plain, cap)
    except ValueError as exc:
        raise CircuitLimitError(
            f"more than {cap} elementary circuits; raise the cap to proceed"
        ) from exc
    out = []
    for edge_ids, verts in raw:
        labels = [graph.edges[e][2] for e in edge_ids]
        out.append(canonical_circuit(labels, verts))
    out.sort(key=lambda c: (len(c), c.labels, c.faces))
    return out
