#!/usr/bin/env python3
"""One-time generator for data/graph9c.g6.

Builds every isomorphism class of graphs on up to 9 vertices by vertex
augmentation (each n-vertex graph arises from deleting a vertex of some
(n+1)-vertex graph), deduplicating with an invariant bucket plus an
exact isomorphism test.  At the top level only connected children are
kept, which is exactly the set of connected 9-vertex classes; the count
is checked against the known value 261080 before writing.

Pure Python; takes a few minutes.  The committed data file is the
output of this script.
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from resolvekit.graphs import Graph, write_graph6  # noqa: E402

# total graph classes / connected graph classes per vertex count
KNOWN_ALL = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
KNOWN_CONNECTED_9 = 261080


def bfs_rows(adj, n):
    """Distance rows; unreachable vertices get sentinel n."""
    rows = []
    for s in range(n):
        row = [n] * n
        seen = frontier = 1 << s
        d = 0
        while frontier:
            f = frontier
            while f:
                low = f & -f
                row[low.bit_length() - 1] = d
                f ^= low
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= nxt
            d += 1
        rows.append(tuple(row))
    return rows


def components(adj, n):
    masks = []
    left = (1 << n) - 1
    while left:
        start = left & -left
        seen = frontier = start
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= nxt
        masks.append(seen)
        left &= ~seen
    return masks


def vertex_profiles(adj, n):
    dist = bfs_rows(adj, n)
    profs = []
    for v in range(n):
        deg = adj[v].bit_count()
        tri = 0
        nb = adj[v]
        f = nb
        while f:
            low = f & -f
            tri += (adj[low.bit_length() - 1] & nb).bit_count()
            f ^= low
        profs.append((deg, tri, tuple(sorted(dist[v]))))
    return tuple(profs)


def invariant(profs):
    return tuple(sorted(profs))


def isomorphic(A, pa, B, pb, n):
    cand = [[b for b in range(n) if pb[b] == pa[a]] for a in range(n)]
    if any(not c for c in cand):
        return False
    order = sorted(range(n), key=lambda a: len(cand[a]))
    mapped = [-1] * n
    used = [False] * n

    def go(d):
        if d == n:
            return True
        a = order[d]
        for b in cand[a]:
            if used[b]:
                continue
            ok = True
            for dd in range(d):
                u = order[dd]
                if (A[a] >> u & 1) != (B[b] >> mapped[u] & 1):
                    ok = False
                    break
            if ok:
                mapped[a] = b
                used[b] = True
                if go(d + 1):
                    return True
                used[b] = False
                mapped[a] = -1
        return False

    return go(0)


def augment(level, n, connected_only):
    """All classes on n vertices whose parents (one vertex deleted) are in
    ``level``; every n-vertex graph has such a parent, so this is complete."""
    buckets = {}
    classes = []
    for parent in level:
        comps = components(parent, n - 1) if connected_only else None
        for nb in range(0 if not connected_only else 1, 1 << (n - 1)):
            if connected_only and any(nb & c == 0 for c in comps):
                continue
            child = tuple(row | ((nb >> v & 1) << (n - 1))
                          for v, row in enumerate(parent)) + (nb,)
            profs = vertex_profiles(child, n)
            bucket = buckets.setdefault(invariant(profs), [])
            if any(isomorphic(child, profs, rep, rp, n) for rep, rp in bucket):
                continue
            bucket.append((child, profs))
            classes.append(child)
    return classes


def main():
    out_path = Path(__file__).resolve().parent.parent / "data" / "graph9c.g6"
    level = [(0,)]
    for n in range(2, 9):
        t0 = time.time()
        level = augment(level, n, connected_only=False)
        print(f"n={n}: {len(level)} classes ({time.time() - t0:.1f}s)")
        assert len(level) == KNOWN_ALL[n], (n, len(level))
    t0 = time.time()
    final = augment(level, 9, connected_only=True)
    print(f"n=9 connected: {len(final)} classes ({time.time() - t0:.1f}s)")
    assert len(final) == KNOWN_CONNECTED_9, len(final)
    with open(out_path, "w") as fh:
        for adj in final:
            fh.write(write_graph6(Graph(9, adj)) + "\n")
    print(f"wrote {out_path}")


if __name__ == "__main__":
    main()
