# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled mirror of ``curvedist._kernels.pure``.

Same four functions, same outputs (including ordering); the inner
loops run on C integer arrays.  See pure.py for the conventions.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

BACKEND = "fast"


cdef int* _to_c(list values) except NULL:
    cdef Py_ssize_t n = len(values)
    cdef int* buf = <int*> malloc(n * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = values[i]
    return buf


def beta_cycles(int k, list mate):
    cdef int* cmate = _to_c(mate)
    cdef char* seen = <char*> malloc(k)
    cdef char* down_flags = <char*> malloc(k)
    if seen == NULL or down_flags == NULL:
        free(cmate)
        raise MemoryError()
    memset(seen, 0, k)
    memset(down_flags, 0, k)
    cdef list cycles = []
    cdef list cycle
    cdef int start, i, arrive
    cdef bint going_down
    try:
        for start in range(k):
            if seen[start]:
                continue
            cycle = []
            i = start
            going_down = True
            while not seen[i]:
                seen[i] = 1
                down_flags[i] = 1 if going_down else 0
                cycle.append(i)
                if going_down:
                    arrive = cmate[2 * i + 1]
                else:
                    arrive = cmate[2 * i]
                i = arrive >> 1
                going_down = (arrive & 1) == 0
            cycles.append(cycle)
        down = [down_flags[i] != 0 for i in range(k)]
        return cycles, down
    finally:
        free(cmate)
        free(seen)
        free(down_flags)


def face_walk(int k, list mate):
    cdef int* cmate = _to_c(mate)
    cdef char* used_right = <char*> malloc(k)
    cdef char* used_left = <char*> malloc(k)
    cdef int* above = <int*> malloc(k * sizeof(int))
    cdef int* below = <int*> malloc(k * sizeof(int))
    cdef int* slot_face = <int*> malloc(2 * k * sizeof(int))
    if (used_right == NULL or used_left == NULL or above == NULL
            or below == NULL or slot_face == NULL):
        raise MemoryError()
    memset(used_right, 0, k)
    memset(used_left, 0, k)
    cdef list faces = []
    cdef list labels
    cdef int seed_label, seed_dir, fid, lab, d, i, exit_slot, arrive, j
    try:
        for seed_label in range(k):
            for seed_dir in range(2):
                if seed_dir == 0:
                    if used_right[seed_label]:
                        continue
                else:
                    if used_left[seed_label]:
                        continue
                fid = len(faces)
                labels = []
                lab = seed_label
                d = seed_dir
                while True:
                    if d == 0:
                        if used_right[lab]:
                            break
                        used_right[lab] = 1
                        above[lab] = fid
                        i = lab
                    else:
                        if used_left[lab]:
                            break
                        used_left[lab] = 1
                        below[lab] = fid
                        i = lab - 1 if lab else k - 1
                    labels.append(lab)
                    exit_slot = 2 * i + d
                    slot_face[exit_slot] = fid
                    arrive = cmate[exit_slot]
                    j = arrive >> 1
                    if arrive & 1:
                        lab = j
                        d = 1
                    else:
                        lab = j + 1 if j + 1 < k else 0
                        d = 0
                faces.append(labels)
        return (
            faces,
            [above[i] for i in range(k)],
            [below[i] for i in range(k)],
            [slot_face[i] for i in range(2 * k)],
        )
    finally:
        free(cmate)
        free(used_right)
        free(used_left)
        free(above)
        free(below)
        free(slot_face)


def reduce_bigons(list top, list bottom):
    cdef int k = len(top)
    cdef int* ctop = _to_c(top)
    cdef int* cbot = _to_c(bottom)
    cdef int removed = 0
    cdef int i, j, hit, b, c, pos, lo, hi
    cdef bint row_is_top
    cdef int* other
    try:
        while k >= 2:
            hit = -1
            row_is_top = False
            for i in range(k):
                j = i + 1 if i + 1 < k else 0
                if ctop[i] == ctop[j]:
                    hit = i
                    row_is_top = True  # bigon above; splice the bottom row
                    break
                if cbot[i] == cbot[j]:
                    hit = i
                    row_is_top = False
                    break
            if hit < 0:
                break
            i = hit
            j = i + 1 if i + 1 < k else 0
            other = cbot if row_is_top else ctop
            b = other[i]
            c = other[j]
            if b != c:
                for pos in range(k):
                    if pos != i and pos != j:
                        if ctop[pos] == c:
                            ctop[pos] = b
                            break
                        if cbot[pos] == c:
                            cbot[pos] = b
                            break
            lo = i if i < j else j
            hi = j if i < j else i
            # delete columns hi then lo by shifting left
            for pos in range(hi, k - 1):
                ctop[pos] = ctop[pos + 1]
                cbot[pos] = cbot[pos + 1]
            for pos in range(lo, k - 2):
                ctop[pos] = ctop[pos + 1]
                cbot[pos] = cbot[pos + 1]
            k -= 2
            removed += 1
        return (
            [ctop[pos] for pos in range(k)],
            [cbot[pos] for pos in range(k)],
            removed,
        )
    finally:
        free(ctop)
        free(cbot)


def simple_cycles_edges(int n, list edges, cap):
    cdef Py_ssize_t n_edges = len(edges)
    cdef long ccap = cap
    cdef list out = []
    cdef int* eu = <int*> malloc(n_edges * sizeof(int))
    cdef int* ev = <int*> malloc(n_edges * sizeof(int))
    cdef int* deg = <int*> malloc(n * sizeof(int))
    if eu == NULL or ev == NULL or deg == NULL:
        raise MemoryError()
    memset(deg, 0, n * sizeof(int))
    cdef Py_ssize_t e
    cdef int u, v
    for e in range(n_edges):
        u, v = edges[e]
        eu[e] = u
        ev[e] = v
        if u == v:
            out.append(([e], [u]))
        else:
            deg[u] += 1
            deg[v] += 1
    if len(out) > ccap:
        free(eu); free(ev); free(deg)
        raise ValueError("circuit cap exceeded")

    # CSR adjacency sorted by (neighbor, edge id), matching pure.py
    cdef int* start = <int*> malloc((n + 1) * sizeof(int))
    cdef int* adj_v = <int*> malloc(2 * n_edges * sizeof(int))
    cdef int* adj_e = <int*> malloc(2 * n_edges * sizeof(int))
    cdef int* fill = <int*> malloc(n * sizeof(int))
    cdef char* on_path = <char*> malloc(n)
    cdef int* path_v = <int*> malloc((n + 1) * sizeof(int))
    cdef int* path_e = <int*> malloc((n + 1) * sizeof(int))
    cdef int* stack_v = <int*> malloc((n + 1) * sizeof(int))
    cdef int* stack_idx = <int*> malloc((n + 1) * sizeof(int))
    if (start == NULL or adj_v == NULL or adj_e == NULL or fill == NULL
            or on_path == NULL or path_v == NULL or path_e == NULL
            or stack_v == NULL or stack_idx == NULL):
        raise MemoryError()
    cdef int root, w, ei, depth, top, idx, a, b
    try:
        start[0] = 0
        for u in range(n):
            start[u + 1] = start[u] + deg[u]
            fill[u] = start[u]
        # insertion sorted per vertex: iterate neighbors in sorted order by
        # inserting edges in (v, e) order via two passes: simpler to fill
        # then sort each bucket.
        for e in range(n_edges):
            u = eu[e]
            v = ev[e]
            if u != v:
                adj_v[fill[u]] = v
                adj_e[fill[u]] = e
                fill[u] += 1
                adj_v[fill[v]] = u
                adj_e[fill[v]] = e
                fill[v] += 1
        for u in range(n):
            # insertion sort of bucket [start[u], start[u+1]) by (v, e)
            for a in range(start[u] + 1, start[u + 1]):
                v = adj_v[a]
                ei = adj_e[a]
                b = a
                while b > start[u] and (
                    adj_v[b - 1] > v or (adj_v[b - 1] == v and adj_e[b - 1] > ei)
                ):
                    adj_v[b] = adj_v[b - 1]
                    adj_e[b] = adj_e[b - 1]
                    b -= 1
                adj_v[b] = v
                adj_e[b] = ei
        memset(on_path, 0, n)

        for root in range(n):
            path_v[0] = root
            depth = 0  # edges on path
            on_path[root] = 1
            top = 0
            stack_v[0] = root
            stack_idx[0] = start[root]
            while top >= 0:
                u = stack_v[top]
                idx = stack_idx[top]
                if idx >= start[u + 1]:
                    top -= 1
                    on_path[u] = 0
                    if depth > 0:
                        depth -= 1
                    continue
                stack_idx[top] = idx + 1
                w = adj_v[idx]
                ei = adj_e[idx]
                if w == root:
                    if depth >= 2:
                        if path_v[1] < path_v[depth]:
                            out.append((
                                [path_e[a] for a in range(depth)] + [ei],
                                [path_v[a] for a in range(1, depth + 1)]
                                + [root],
                            ))
                    elif depth == 1:
                        if path_e[0] < ei:
                            out.append((
                                [path_e[0], ei],
                                [path_v[1], root],
                            ))
                    if len(out) > ccap:
                        raise ValueError("circuit cap exceeded")
                elif w > root and not on_path[w]:
                    on_path[w] = 1
                    path_v[depth + 1] = w
                    path_e[depth] = ei
                    depth += 1
                    top += 1
                    stack_v[top] = w
                    stack_idx[top] = start[w]
            on_path[root] = 0
        return out
    finally:
        free(eu); free(ev); free(deg); free(start)
        free(adj_v); free(adj_e); free(fill); free(on_path)
        free(path_v); free(path_e); free(stack_v); free(stack_idx)
