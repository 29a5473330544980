"""Pure-Python traversal kernels.

These four functions are the inner loops of everything else: walking
the vertical curve through a ladder, walking complementary-region
boundaries, deleting bigons, and enumerating elementary circuits.
``curvedist._kernels._fast`` is a compiled mirror with identical
outputs; this module is the reference.

Slot encoding: intersection ``i`` owns two arc-endpoint slots,
``2*i`` (top row) and ``2*i + 1`` (bottom row).  ``mate[s]`` is the
slot holding the other endpoint of the arc at slot ``s`` — a
fixed-point-free involution on the ``2k`` slots.

Traversal conventions (fixed once, used everywhere):

* The vertical curve passes straight through an intersection, so a
  strand entering at a top slot leaves at the bottom slot and vice
  versa.  Entering from the top means the strand points DOWN there.
* Horizontal edges: the edge between intersections ``i`` and
  ``i + 1 (mod k)`` carries label ``(i + 1) mod k``.  A RIGHT-directed
  appearance of an edge bounds the region above the horizontal curve,
  a LEFT-directed one the region below.
* Region walk (region kept on the left): after a RIGHT step into
  ``i``, leave through the top slot of ``i``; after a LEFT step,
  through the bottom slot.  An arc arriving at a top slot of ``j``
  continues RIGHT out of ``j``; arriving at a bottom slot, LEFT.
"""

from __future__ import annotations

BACKEND = "pure"


def beta_cycles(k: int, mate: list[int]) -> tuple[list[list[int]], list[bool]]:
    """Cycles of the vertical curve and its DOWN/UP flag per intersection.

    Each cycle starts at its minimal intersection index, where the
    strand is directed DOWN; cycles are listed by minimal index.
    """
    down = [False] * k
    seen = [False] * k
    cycles: list[list[int]] = []
    for start in range(k):
        if seen[start]:
            continue
        cycle = []
        i = start
        going_down = True
        while not seen[i]:
            seen[i] = True
            down[i] = going_down
            cycle.append(i)
            arrive = mate[2 * i + 1] if going_down else mate[2 * i]
            i = arrive >> 1
            going_down = (arrive & 1) == 0
        cycles.append(cycle)
    return cycles, down


def face_walk(
    k: int, mate: list[int]
) -> tuple[list[list[int]], list[int], list[int], list[int]]:
    """Boundary walk of every complementary region.

    Returns ``(faces, above, below, slot_face)`` where ``faces[f]`` is
    the cyclic list of horizontal-edge labels on region ``f`` in
    traversal order, ``above[l]``/``below[l]`` are the regions on the
    two sides of horizontal edge ``l``, and ``slot_face[s]`` is the
    region containing the directed arc that exits slot ``s`` (so the
    two sides of an arc are ``slot_face[s]`` and ``slot_face[mate[s]]``).

    Every directed horizontal edge and every directed arc lies on
    exactly one region boundary, so the walk partitions the ``4k``
    directed edges.
    """
    used_right = [False] * k
    used_left = [False] * k
    above = [-1] * k
    below = [-1] * k
    slot_face = [-1] * (2 * k)
    faces: list[list[int]] = []
    for seed_label in range(k):
        for seed_dir in (0, 1):  # 0 = RIGHT, 1 = LEFT
            if (used_left if seed_dir else used_right)[seed_label]:
                continue
            fid = len(faces)
            labels = []
            lab, d = seed_label, seed_dir
            while True:
                if d == 0:
                    if used_right[lab]:
                        break
                    used_right[lab] = True
                    above[lab] = fid
                    i = lab  # RIGHT edge labelled lab ends at intersection lab
                else:
                    if used_left[lab]:
                        break
                    used_left[lab] = True
                    below[lab] = fid
                    i = lab - 1 if lab else k - 1  # LEFT edge ends at lab-1
                labels.append(lab)
                exit_slot = 2 * i + d
                slot_face[exit_slot] = fid
                arrive = mate[exit_slot]
                j = arrive >> 1
                if arrive & 1:
                    lab, d = j, 1
                else:
                    lab, d = j + 1 if j + 1 < k else 0, 0
            faces.append(labels)
    return faces, above, below, slot_face


def reduce_bigons(
    top: list[int], bottom: list[int]
) -> tuple[list[int], list[int], int]:
    """Delete bigons until none remain.

    A bigon shows up as equal labels at adjacent positions of the same
    row (the arc doubles straight back across one horizontal edge).
    Removing one deletes the two intersections and splices the two
    severed arcs of the other row into one; if those were the same arc
    it disappears with them.  Labels of the result are left as-is
    (possibly non-contiguous); callers renormalize.
    """
    top = list(top)
    bottom = list(bottom)
    removed = 0
    while True:
        k = len(top)
        if k < 2:
            break
        hit = -1
        row = top
        for i in range(k):
            j = i + 1 if i + 1 < k else 0
            if top[i] == top[j]:
                hit = i
                row = bottom
                break
            if bottom[i] == bottom[j]:
                hit = i
                row = top
                break
        if hit < 0:
            break
        i = hit
        j = i + 1 if i + 1 < k else 0
        b, c = row[i], row[j]
        if b != c:
            # splice: rename the far endpoint of arc c to b
            for pos in range(k):
                if pos != i and pos != j:
                    if top[pos] == c:
                        top[pos] = b
                        break
                    if bottom[pos] == c:
                        bottom[pos] = b
                        break
        lo, hi = (i, j) if i < j else (j, i)
        del top[hi], top[lo]
        del bottom[hi], bottom[lo]
        removed += 1
    return top, bottom, removed


def simple_cycles_edges(
    n: int, edges: list[tuple[int, int]], cap: int
) -> list[tuple[list[int], list[int]]]:
    """All elementary circuits of an undirected multigraph, each once.

    ``edges[e] = (u, v)``.  A circuit is returned as
    ``(edge_ids, vertices)`` with ``edge_ids[j]`` running from
    ``vertices[j-1]`` to ``vertices[j]`` (indices mod length).
    Self-loops are length-1 circuits; a pair of distinct parallel
    edges is a length-2 circuit.  Each undirected circuit is emitted
    exactly once: rooted at its minimal vertex, with the reversal
    duplicate suppressed.  Raises ``ValueError`` past ``cap`` results.
    """
    out: list[tuple[list[int], list[int]]] = []
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e, (u, v) in enumerate(edges):
        if u == v:
            out.append(([e], [u]))
        else:
            adj[u].append((v, e))
            adj[v].append((u, e))
    if len(out) > cap:
        raise ValueError("circuit cap exceeded")
    for nbrs in adj:
        nbrs.sort()

    for root in range(n):
        # DFS over simple paths root -> ... using vertices > root only.
        path_v = [root]
        path_e: list[int] = []
        on_path = [False] * n
        on_path[root] = True
        stack: list[tuple[int, int]] = [(root, 0)]  # (vertex, next nbr index)
        while stack:
            v, idx = stack[-1]
            if idx >= len(adj[v]):
                stack.pop()
                on_path[v] = False
                if path_e:
                    path_e.pop()
                path_v.pop()
                continue
            stack[-1] = (v, idx + 1)
            w, e = adj[v][idx]
            if w == root:
                depth = len(path_e)
                if depth >= 2:
                    if path_v[1] < path_v[-1]:
                        out.append((path_e + [e], path_v[1:] + [root]))
                elif depth == 1:
                    if path_e[0] < e:
                        out.append((path_e + [e], [path_v[1], root]))
                if len(out) > cap:
                    raise ValueError("circuit cap exceeded")
            elif w > root and not on_path[w]:
                on_path[w] = True
                path_v.append(w)
                path_e.append(e)
                stack.append((w, 0))
    return out
