"""Independent reference computations the fast paths are checked against.

Everything here recomputes results by a route the library does not
use: region walking straight off the signed neighbor table's T-rules,
brute-force cycle enumeration, and grid search over weight vectors.
"""

from __future__ import annotations

import itertools

from curvedist.circuits import canonical_circuit
from curvedist.ladder import CharacteristicMatrix, Ladder


def canonical_cycle(seq) -> tuple[int, ...]:
    """Min rotation of the lexicographically smaller direction."""
    seq = tuple(seq)
    best = None
    for cand in (seq, seq[::-1]):
        for r in range(len(cand)):
            rot = cand[r:] + cand[:r]
            if best is None or rot < best:
                best = rot
    return best


def trule_faces(matrix: CharacteristicMatrix) -> list[tuple[int, ...]]:
    """Region walk driven only by the signed table's magnitudes.

    Implements the published turning rules literally: after a
    rightward horizontal step into t, follow the strand to |w+(t)|;
    after a leftward step, to |w-(t)|; a strand arriving at its
    endpoint's up-neighbor side turns right, at its down-neighbor side
    left.  Ambiguous only when some up- and down-neighbor coincide;
    callers avoid such tables.
    """
    k = matrix.k

    def res(x):
        return x % k

    def up(i):
        return res(abs(matrix[i][1]))

    def down(i):
        return res(abs(matrix[i][3]))

    for i in range(k):
        assert up(i) != down(i), "ambiguous table; oracle not applicable"

    faces = []
    seen = set()
    for s0 in range(k):
        for t0 in (res(s0 + 1), res(s0 - 1)):
            if (s0, t0) in seen:
                continue
            labels = []
            s, t = s0, t0
            while (s, t) not in seen:
                seen.add((s, t))
                labels.append(t if t == res(s + 1) else s)
                if t == res(s + 1):  # T1: rightward step
                    b_s, b_t = t, up(t)
                else:  # T2: leftward step
                    b_s, b_t = t, down(t)
                if b_s == up(b_t):  # T3/T5: arrived on the up side
                    s, t = b_t, res(b_t + 1)
                else:  # T4/T6
                    assert b_s == down(b_t)
                    s, t = b_t, res(b_t - 1)
            faces.append(tuple(labels))
    return faces


def brute_force_circuits(n: int, edges) -> set[tuple[tuple, tuple]]:
    """All elementary circuits by exhaustive vertex-subset search.

    Returns canonicalized (labels, faces) pairs.  Self-loops are
    length-1 circuits; distinct parallel edge pairs length-2; longer
    circuits come from Hamiltonian cycles on each vertex subset with
    every choice of connecting edge.
    """
    out = set()
    by_pair: dict[frozenset, list] = {}
    for u, v, lab in edges:
        if u == v:
            c = canonical_circuit((lab,), (u,))
            out.add((c.labels, c.faces))
        else:
            by_pair.setdefault(frozenset((u, v)), []).append(lab)
    for pair, labs in by_pair.items():
        u, v = sorted(pair)
        for la, lb in itertools.combinations(sorted(labs), 2):
            c = canonical_circuit((la, lb), (v, u))
            out.add((c.labels, c.faces))
    vertices = list(range(n))
    for size in range(3, n + 1):
        for subset in itertools.combinations(vertices, size):
            first = subset[0]
            for perm in itertools.permutations(subset[1:]):
                if perm[0] > perm[-1]:
                    continue  # each cycle once up to reversal
                cycle = (first,) + perm
                hops = [
                    by_pair.get(frozenset((cycle[i], cycle[(i + 1) % size])))
                    for i in range(size)
                ]
                if any(h is None for h in hops):
                    continue
                for choice in itertools.product(*hops):
                    # labels[j] runs from cycle[j] to cycle[j+1], so the
                    # face after labels[j] is cycle[j+1]
                    faces = cycle[1:] + cycle[:1]
                    c = canonical_circuit(choice, faces)
                    out.add((c.labels, c.faces))
    return out


def grid_solutions(system, objective: int) -> list[tuple[int, ...]]:
    """Every feasible vector summing to the objective, by full search."""
    n = system.n_vars
    out = []

    def rec(prefix, remaining):
        if len(prefix) == n - 1:
            vec = tuple(prefix) + (remaining,)
            if system.satisfied_by(vec):
                out.append(vec)
            return
        for value in range(remaining + 1):
            rec(prefix + [value], remaining - value)

    if n == 1:
        vec = (objective,)
        return [vec] if system.satisfied_by(vec) else []
    rec([], objective)
    return sorted(out)


def insert_bigon(ladder: Ladder, i: int) -> Ladder:
    """Poke the strand just above crossing ``i`` across the next edge.

    An honest finger isotopy: the top strand at ``i`` dives below the
    horizontal curve immediately to its right and resurfaces, adding
    two crossings, one bigon above (short connector y) and its tip x
    below.  One reduction step must restore the original pair up to
    relabeling.
    """
    k = ladder.k
    t = ladder.top[i]
    x, y = k, k + 1  # fresh labels: tip and connector
    top = list(ladder.top)
    top[i] = y
    top = top[: i + 1] + [y, t] + top[i + 1:]
    bottom = list(ladder.bottom)
    bottom = bottom[: i + 1] + [x, x] + bottom[i + 1:]
    return Ladder.from_rows(top, bottom)
