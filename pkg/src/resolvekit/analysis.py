"""Brute-force oracles, bounds, and the exceptional-graph census.

The census classifies connected graphs by whether the column-space
criterion fails, i.e. whether the graph's radix parameter exceeds its
vertex count.  Since failures are rare, the scan is staged so the
expensive exact decision runs on as few graphs as possible:

  1. a division-free modular elimination certifies most bordered
     matrices invertible (invertible implies not flagged);
  2. a tiny exhaustive witness search certifies an AP image for most of
     the rest (an AP witness implies not flagged);
  3. the survivors get the exact kernel-and-permutation decision.

Every stage is exact-sound: stage 1 only ever certifies nonzero
determinants, stage 2 only ever certifies membership, and stage 3 is
the full decision procedure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb, isqrt, log
from typing import Iterable, Optional, Sequence

import numpy as np

from . import witness as witness_mod
from .errors import ResourceCapExceeded
from .exactmath import int_det
from .graphs import Graph, distance_matrix, edge_pairs, write_graph6
from .witness import DEFAULT_ENUM_CAP, _box_chunks

_PRIME = 1_000_003


# -- resolving-set oracles ----------------------------------------------


def is_resolving(M, S: Sequence[Sequence[int]], cap: int = 1 << 20) -> bool:
    """Exhaustively test whether the words in S resolve the n-fold
    product: every hidden word must get a distinct vector of summed
    matrix entries against the words of S."""
    rows = tuple(tuple(int(x) for x in row) for row in M)
    p, q = len(rows), len(rows[0])
    S_list = [tuple(int(x) for x in s) for s in S]
    if not S_list:
        return p <= 1
    n = len(S_list[0])
    if any(len(s) != n for s in S_list):
        raise ValueError("query words must share one length")
    if any(not 0 <= x < q for s in S_list for x in s):
        raise ValueError("query symbol out of range")
    total = p ** n
    if total > cap:
        raise ResourceCapExceeded(f"{p}^{n} words exceeds cap {cap}")
    M_np = np.array(rows, dtype=np.int64)
    S_arr = np.array(S_list, dtype=np.int64)
    idx = np.arange(total, dtype=np.int64)
    words = np.empty((total, n), dtype=np.int64)
    for c in range(n - 1, -1, -1):
        idx, words[:, c] = np.divmod(idx, p)
    sig = np.zeros((total, len(S_list)), dtype=np.int64)
    for c in range(n):
        sig += M_np[words[:, c]][:, S_arr[:, c]]
    return len(np.unique(sig, axis=0)) == total


def min_resolving(M, n: int, word_cap: int = 25, cap: int = 1 << 20) -> int:
    """Minimum size of a resolving subset of [q]^n, by increasing-size
    exhaustive search over subsets in lexicographic word order."""
    rows = tuple(tuple(int(x) for x in row) for row in M)
    q = len(rows[0])
    words = list(itertools.product(range(q), repeat=n))
    if len(words) > word_cap:
        raise ResourceCapExceeded(
            f"{q}^{n} = {len(words)} candidate words exceeds cap {word_cap}")
    for k in range(1, len(words) + 1):
        for S in itertools.combinations(words, k):
            if is_resolving(rows, S, cap):
                return k
    raise ResourceCapExceeded(f"no resolving subset of [{q}]^{n} exists")


def caceres_formula(q: int) -> int:
    """Closed form floor(2(2q-1)/3) for the two-factor complete-graph
    metric dimension."""
    if q < 2:
        raise ValueError("need q >= 2")
    return 2 * (2 * q - 1) // 3


def lower_bound(q: int, diam: int, n: int) -> int:
    """Counting lower bound on the resolving-set size of any n-fold
    product with q symbols and factor diameter ``diam``.

    Concentration confines almost all of the q^n words to a cube of
    side below 2*sqrt(n ln n)*diam in the image; counting integer
    points gives the smallest m with

        (2*ceil(sqrt(n ln n))*diam + 1)^m >= q^n * (1 - 2m/n^2),

    evaluated in exact integer arithmetic.  The square root is rounded
    up (n ln n is never an integer) so the bound stays valid.
    """
    if q < 2 or diam < 1 or n < 2:
        raise ValueError("need q >= 2, diam >= 1, n >= 2")
    x_up = int(n * log(n)) + 1
    c = isqrt(x_up)
    if c * c < x_up:
        c += 1
    side = 2 * c * diam + 1
    qn = q ** n
    nn = n * n
    m = 1
    while True:
        rhs = qn * (nn - 2 * m)
        if rhs <= 0 or side ** m * nn >= rhs:
            return m
        m += 1


# -- exhaustive witness structure check ----------------------------------


def _ap_rows_any(mw: np.ndarray, p: int) -> np.ndarray:
    """Given images stacked as (..., p, K), flag the candidates whose p
    values form an AP with nonzero difference, exactly."""
    m0 = mw.min(axis=-2)
    span = mw.max(axis=-2) - m0
    d, rem = np.divmod(span, p - 1)
    okd = (span > 0) & (rem == 0)
    d_safe = np.where(d > 0, d, 1)
    rel = mw - m0[..., None, :]
    digits, rem2 = np.divmod(rel, d_safe[..., None, :])
    alldiv = (rem2 == 0).all(axis=-2)
    bits = np.bitwise_or.reduce(1 << np.minimum(digits, 62), axis=-2)
    return okd & alldiv & (bits == (1 << p) - 1)


def appendix_oracle(M, bound: int, cap: Optional[int] = DEFAULT_ENUM_CAP) -> bool:
    """True iff no zero-sum integer vector with entries in
    [-bound, bound] maps to an AP image under M, by exhaustive search
    over the full box."""
    rows = tuple(tuple(int(x) for x in row) for row in M)
    p, q = len(rows), len(rows[0])
    if bound < 1:
        raise ValueError("need bound >= 1")
    mt = np.array(rows, dtype=np.int64).T
    for ws in _box_chunks(q, bound, cap):
        mw = (ws @ mt).T[None, :, :]  # (1, p, K)
        if _ap_rows_any(mw, p)[0].any():
            return False
    return True


_CANDIDATE_CACHE: dict[tuple[int, int], np.ndarray] = {}


def _witness_candidates(q: int, bound: int) -> np.ndarray:
    """Zero-sum nonzero vectors in the box with first nonzero entry
    positive, as a (K, q) array; cached per (q, bound)."""
    key = (q, bound)
    got = _CANDIDATE_CACHE.get(key)
    if got is None:
        out = []
        for head in itertools.product(range(-bound, bound + 1), repeat=q - 1):
            last = -sum(head)
            if abs(last) > bound:
                continue
            w = head + (last,)
            nz = next((x for x in w if x), 0)
            if nz > 0:
                out.append(w)
        got = np.array(out, dtype=np.int64).reshape(len(out), q)
        _CANDIDATE_CACHE[key] = got
    return got


def _ap_witness_in_box(rows, bound: int) -> bool:
    W = _witness_candidates(len(rows[0]), bound)
    if not len(W):
        return False
    dist = np.array(rows, dtype=np.int64)[None, :, :]
    return bool(_ap_rows_any(dist @ W.T, len(rows))[0].any())


# -- canonical forms ------------------------------------------------------


def _wl_colors(g: Graph) -> tuple[int, ...]:
    """Stable 1-dimensional refinement coloring with canonical integer
    color names (so colors are comparable across graphs)."""
    colors = tuple(g.degree(v) for v in range(g.q))
    while True:
        sigs = []
        for v in range(g.q):
            neigh = sorted(colors[u] for u in range(g.q) if g.adj[v] >> u & 1)
            sigs.append((colors[v], tuple(neigh)))
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = tuple(palette[s] for s in sigs)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_edge_mask(g: Graph) -> tuple[tuple[int, ...], int]:
    """Canonical form: the color multiset plus the minimum edge mask
    over all orderings that list color classes in canonical order.

    Equal canonical forms is exactly graph isomorphism.  The refinement
    usually leaves tiny classes, so the product of factorials stays
    small except for highly symmetric graphs.
    """
    colors = _wl_colors(g)
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    ordered_classes = [classes[c] for c in sorted(classes)]
    pairs = list(enumerate(edge_pairs(g.q)))
    best = None
    for perm_parts in itertools.product(
            *(itertools.permutations(cls) for cls in ordered_classes)):
        order = [v for part in perm_parts for v in part]
        mask = 0
        for b, (i, j) in pairs:
            if g.adj[order[i]] >> order[j] & 1:
                mask |= 1 << b
        if best is None or mask < best:
            best = mask
    return (tuple(sorted(colors)), best)


def isomorphic(g1: Graph, g2: Graph) -> bool:
    return g1.q == g2.q and canonical_edge_mask(g1) == canonical_edge_mask(g2)


# -- census ---------------------------------------------------------------


@dataclass(frozen=True)
class FlaggedGraph:
    """One census hit: a connected graph whose radix parameter exceeds
    its vertex count."""

    index: int
    q: int
    graph: Graph
    graph6: str
    lower: int
    upper: Optional[int]


@dataclass
class SearchReport:
    """Census outcome: flagged records in input order plus per-size
    scan totals.  Only flagged graphs are recorded individually; the
    non-flagged majority is summarized by the counts."""

    flagged: list[FlaggedGraph] = field(default_factory=list)
    scanned: dict[int, int] = field(default_factory=dict)
    skipped_disconnected: int = 0
    class_reps: dict[int, list[FlaggedGraph]] = field(default_factory=dict)

    def flagged_classes(self, q: int) -> int:
        return len(self.class_reps.get(q, []))


def _is_flagged(rows, prescreened: bool = False) -> bool:
    """Exact staged decision for one distance matrix.

    ``prescreened`` means stages 1 and 2 already ran (batched) and
    failed, so only the exact decision remains; ``feasible_permutation``
    still recomputes the determinant exactly, which also catches the
    modular prescreen's rare false singulars."""
    if not prescreened:
        q = len(rows)
        bordered = [list(r) + [1] for r in rows]
        bordered.append([1] * q + [0])
        if int_det(bordered) != 0:
            return False
        if _ap_witness_in_box(rows, 1):
            return False
    return witness_mod.feasible_permutation(rows) is None


def _make_flagged(index: int, g: Graph, rows, box: int, cap: Optional[int]) -> FlaggedGraph:
    q = g.q
    upper: Optional[int] = None
    b = 1
    while True:
        b = min(b, box)
        try:
            found = witness_mod.search_witness(rows, b, cap)
        except ResourceCapExceeded:
            break
        if found is not None:
            upper = found.ratio + 1
            break
        if b == box:
            break
        b *= 2
    return FlaggedGraph(index=index, q=q, graph=g, graph6=write_graph6(g),
                        lower=q + 1, upper=upper)


def _dedup_classes(report: SearchReport) -> None:
    seen: dict[int, dict] = {}
    for rec in report.flagged:
        forms = seen.setdefault(rec.q, {})
        key = canonical_edge_mask(rec.graph)
        if key not in forms:
            forms[key] = rec
    report.class_reps = {q: list(forms.values()) for q, forms in seen.items()}


def corpus_census(graph_stream: Iterable[Graph], box: int = 6,
                  cap: Optional[int] = DEFAULT_ENUM_CAP) -> SearchReport:
    """Scan a stream of graphs (e.g. parsed from a graph6 file).

    Disconnected inputs are skipped and counted.  Flagged graphs are
    recorded in input order with an r interval; isomorphism classes of
    the flagged graphs are deduplicated by canonical form.
    """
    report = SearchReport()
    for index, g in enumerate(graph_stream):
        if g.q < 2 or not g.is_connected():
            report.skipped_disconnected += 1
            continue
        rows = distance_matrix(g).entries
        report.scanned[g.q] = report.scanned.get(g.q, 0) + 1
        if _is_flagged(rows):
            report.flagged.append(_make_flagged(index, g, rows, box, cap))
    _dedup_classes(report)
    return report


# -- batched labeled-enumeration census -----------------------------------


def _batch_masks_to_dist(q: int, masks: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Filter the edge masks to connected graphs and return their
    distance matrices, all vectorized across graphs."""
    pairs = edge_pairs(q)
    adj = np.zeros((len(masks), q), dtype=np.int64)
    for e, (u, v) in enumerate(pairs):
        bit = (masks >> e) & 1
        adj[:, u] |= bit << v
        adj[:, v] |= bit << u
    reach = np.ones(len(masks), dtype=np.int64)
    for _ in range(q - 1):
        nxt = reach.copy()
        for v in range(q):
            nxt |= adj[:, v] * ((reach >> v) & 1)
        reach = nxt
    keep = reach == (1 << q) - 1
    masks, adj = masks[keep], adj[keep]
    n = len(masks)
    dist = np.zeros((n, q, q), dtype=np.int64)
    for s in range(q):
        seen = np.full(n, 1 << s, dtype=np.int64)
        frontier = seen.copy()
        d = 0
        while frontier.any():
            nxt = np.zeros(n, dtype=np.int64)
            for v in range(q):
                nxt |= adj[:, v] * ((frontier >> v) & 1)
            frontier = nxt & ~seen
            seen |= frontier
            d += 1
            for v in range(q):
                dist[:, s, v] += d * ((frontier >> v) & 1)
    return masks, dist


def _batch_maybe_singular(dist: np.ndarray) -> np.ndarray:
    """Division-free elimination of the bordered matrices modulo a
    prime.  False means the determinant is certainly nonzero; True
    means singular or an unlucky prime division, so callers must
    confirm exactly."""
    nmat, q = dist.shape[0], dist.shape[1]
    n = q + 1
    a = np.zeros((nmat, n, n), dtype=np.int64)
    a[:, :q, :q] = dist
    a[:, :q, q] = 1
    a[:, q, :q] = 1
    zero = np.zeros(nmat, dtype=bool)
    for k in range(n):
        nz = a[:, k:, k] != 0
        has = nz.any(axis=1)
        zero |= ~has
        idx = k + np.argmax(nz, axis=1)
        swap = np.nonzero(has & (idx != k))[0]
        if len(swap):
            rows_k = a[swap, k, :].copy()
            a[swap, k, :] = a[swap, idx[swap], :]
            a[swap, idx[swap], :] = rows_k
        if k == n - 1:
            break
        pivot = a[:, k, k].copy()
        pivot[pivot == 0] = 1
        a[:, k + 1:, k + 1:] = (
            a[:, k + 1:, k + 1:] * pivot[:, None, None]
            - a[:, k + 1:, k, None] * a[:, k, None, k + 1:]) % _PRIME
        a[:, k + 1:, k] = 0
    return zero


def census_labeled(q: int, box: int = 6, cap: Optional[int] = DEFAULT_ENUM_CAP,
                   chunk_bits: int = 15) -> SearchReport:
    """Census over every labeled connected graph on q vertices.

    Semantically identical to running ``corpus_census`` on
    ``enumerate_connected_labeled(q)``, but stages 1 and 2 of the
    decision run vectorized over chunks of edge masks.
    """
    if not 2 <= q <= 7:
        raise ValueError("labeled census supports 2 <= q <= 7")
    report = SearchReport()
    W1 = _witness_candidates(q, 1)
    nbits = comb(q, 2)
    scanned = 0
    for lo in range(0, 1 << nbits, 1 << chunk_bits):
        hi = min(lo + (1 << chunk_bits), 1 << nbits)
        masks, dist = _batch_masks_to_dist(q, np.arange(lo, hi, dtype=np.int64))
        if len(masks):
            maybe = np.nonzero(_batch_maybe_singular(dist))[0]
            if len(maybe):
                ap = _ap_rows_any(dist[maybe] @ W1.T, q)
                for i in maybe[~ap.any(axis=1)]:
                    rows = tuple(tuple(int(x) for x in r) for r in dist[i])
                    if _is_flagged(rows, prescreened=True):
                        g = Graph.from_edge_mask(q, int(masks[i]))
                        report.flagged.append(
                            _make_flagged(scanned + int(i), g, rows, box, cap))
            scanned += len(masks)
    report.scanned[q] = scanned
    _dedup_classes(report)
    return report


def format_census_report(report: SearchReport) -> str:
    """External text form: one line per flagged graph then one summary
    line per graph size."""
    lines = []
    for rec in report.flagged:
        upper = str(rec.upper) if rec.upper is not None else "?"
        lines.append(f"{rec.index} {rec.q} {rec.graph6} {rec.lower} {upper}")
    for q in sorted(report.scanned):
        lines.append(f"q={q} scanned={report.scanned[q]} "
                     f"flagged_classes={report.flagged_classes(q)}")
    return "\n".join(lines) + "\n"
