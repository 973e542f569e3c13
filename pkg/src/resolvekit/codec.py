"""Build, verify, and run the radix codes behind the resolving sets.

Given a p x q integer matrix M (typically a graph distance matrix), a
witness w, and a radix r exceeding the witness ratio, the code is a
matrix S with rows 0..m and one column per factor of the product.
Columns are indexed by pairs (j, k) where j is a lattice index and
0 <= k <= b(j), with b(j) the largest exponent satisfying

    r**b(j) * |w|_1 <= 2**popcount(j),

and the column set J holds the lexicographically first n such pairs.
Each column satisfies two signed-count identities over the submasks of
its lattice index: its own signed symbol counts equal r**k * w, and its
counts against every larger row index vanish.  Together these let a
distance vector against the rows of S be peeled row by row, from m down
to 0, into base-r digits that name the hidden word's symbols.

Entries of S are vertex symbols 0..q-1; hidden words take values in
0..p-1 (rows of M).  All arithmetic is integer-exact; numpy is used for
int64 bulk operations only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import InconsistentDistanceVector
from .mobius import downset, popcount
from .witness import WitnessInfo, validate


def b_exponent(r: int, l1: int, bits: int) -> int:
    """Largest b with r**b * l1 <= 2**bits, or -1 when even b = 0 fails."""
    b = -1
    t = l1
    lim = 1 << bits
    while t <= lim:
        b += 1
        t *= r
    return b


@dataclass(frozen=True)
class CodePlan:
    """Everything that determines a code except the materialized S."""

    M: tuple[tuple[int, ...], ...]
    info: WitnessInfo
    r: int
    n: int
    J: tuple[tuple[int, int], ...]
    m: int

    @property
    def p(self) -> int:
        return len(self.M)

    @property
    def q(self) -> int:
        return len(self.M[0])

    def b(self, j: int) -> int:
        return b_exponent(self.r, self.info.l1, popcount(j))


def plan(M, info: WitnessInfo, r: int | None, n: int) -> CodePlan:
    """Assemble the column index set J for an n-factor code.

    ``r`` defaults to the witness's own radix ``info.r_w``; any radix
    strictly above ``info.ratio`` works.  The exponents b(j) come from
    exact integer comparisons, never floating logs.
    """
    rows = tuple(tuple(int(x) for x in row) for row in M)
    if validate(rows, info.w) != info:
        raise ValueError("witness info does not match the matrix")
    if n < 1:
        raise ValueError("need n >= 1 factors")
    if r is None:
        r = info.r_w
    if r <= info.ratio:
        raise ValueError(f"radix too small: r={r} must exceed ratio={info.ratio}")
    maxabs = max(abs(x) for row in rows for x in row)
    if (maxabs + 1) * n >= 1 << 62:
        raise ValueError("matrix entries too large for int64 distance sums")
    J: list[tuple[int, int]] = []
    j = 0
    while len(J) < n:
        b = b_exponent(r, info.l1, popcount(j))
        for k in range(b + 1):
            J.append((j, k))
            if len(J) == n:
                break
        j += 1
    return CodePlan(M=rows, info=info, r=r, n=n, J=tuple(J), m=J[-1][0])


@dataclass
class Code:
    """A built code: the plan plus the symbol matrix S of shape (m+1, n)."""

    plan: CodePlan
    S: np.ndarray
    _mu_cache: dict = field(default_factory=dict, repr=False)

    @property
    def rows(self) -> int:
        return self.plan.m + 1

    def mu_arrays(self, j: int) -> tuple[np.ndarray, np.ndarray]:
        """Submasks of j and their Mobius signs toward j, as arrays."""
        hit = self._mu_cache.get(j)
        if hit is None:
            subs = np.array(downset(j), dtype=np.int64)
            signs = np.where((popcount(j) - _popcounts(subs)) % 2 == 0, 1, -1).astype(np.int64)
            hit = (subs, signs)
            self._mu_cache[j] = hit
        return hit


def _popcounts(a: np.ndarray) -> np.ndarray:
    out = np.zeros(a.shape, dtype=np.int64)
    x = a.copy()
    while x.any():
        out += x & 1
        x >>= 1
    return out


def build(cp: CodePlan) -> Code:
    """Materialize S column by column.

    For each column (j, k) the submasks of j split into the positive and
    negative Mobius halves; r**k * w_t copies of symbol t go to the
    positive half when w_t > 0 and to the negative half when w_t < 0, in
    increasing vertex and slot order.  Leftover slots on both halves get
    symbol 0, whose net contribution cancels.  Rows i not below j copy
    the entry at i & j, which is what makes the counts against larger
    row indices vanish.
    """
    w = cp.info.w
    q = cp.q
    dtype = np.int16 if q < (1 << 15) else np.int64
    S = np.empty((cp.m + 1, cp.n), dtype=dtype)
    all_rows = np.arange(cp.m + 1, dtype=np.int64)
    for ci, (j, k) in enumerate(cp.J):
        subs = downset(j)
        pj = popcount(j)
        pos = [i for i in subs if (pj - popcount(i)) % 2 == 0]
        neg = [i for i in subs if (pj - popcount(i)) % 2 == 1]
        rk = cp.r ** k
        lookup = np.zeros(j + 1, dtype=dtype)
        pi = ni = 0
        for t in range(q):
            c = rk * w[t]
            if c > 0:
                for _ in range(c):
                    lookup[pos[pi]] = t
                    pi += 1
            elif c < 0:
                for _ in range(-c):
                    lookup[neg[ni]] = t
                    ni += 1
        assert pi <= len(pos) and ni <= len(neg)
        S[:, ci] = lookup[all_rows & j]
    return Code(plan=cp, S=S)


def verify_identities(code: Code) -> bool:
    """Exact check of both signed-count identities for every column."""
    cp = code.plan
    w = np.array(cp.info.w, dtype=np.int64)
    q = cp.q
    for ci, (j, k) in enumerate(cp.J):
        subs, signs = code.mu_arrays(j)
        counts = np.zeros(q, dtype=np.int64)
        np.add.at(counts, code.S[subs, ci].astype(np.int64), signs)
        if not np.array_equal(counts, (cp.r ** k) * w):
            return False
        for jj in range(j + 1, cp.m + 1):
            subs2, signs2 = code.mu_arrays(jj)
            counts = np.zeros(q, dtype=np.int64)
            np.add.at(counts, code.S[subs2, ci].astype(np.int64), signs2)
            if counts.any():
                return False
    return True


def encode(code: Code, X: Sequence[int]) -> tuple[int, ...]:
    """Distance vector of word X against every row of S.

    X is indexed by the columns of J in order; entry values are rows of
    M (vertices of the base graph)."""
    cp = code.plan
    x = np.asarray(X, dtype=np.int64)
    if x.shape != (cp.n,):
        raise ValueError(f"word must have length {cp.n}")
    if len(x) and (x.min() < 0 or x.max() >= cp.p):
        raise ValueError("word symbol out of range")
    M = np.array(cp.M, dtype=np.int64)
    D = M[x[:, None], code.S.T.astype(np.int64)].sum(axis=0)
    return tuple(int(v) for v in D)


def row_queries(code: Code) -> list[tuple[int, ...]]:
    """The rows of S as words over 0..q-1, i.e. the resolving set /
    nonadaptive query list, in row order 0..m."""
    return [tuple(int(v) for v in row) for row in code.S]


def _cols_by_j(cp: CodePlan) -> dict[int, list[tuple[int, int]]]:
    groups: dict[int, list[tuple[int, int]]] = {}
    for ci, (j, k) in enumerate(cp.J):
        groups.setdefault(j, []).append((ci, k))
    return groups


def decode(code: Code, D: Sequence[int]) -> tuple[int, ...]:
    """Recover the unique word X with encode(X) == D.

    Walks j0 from m down to 0 keeping a residual distance vector with
    the already-decoded columns subtracted; the Mobius-weighted sum of
    the residual over the submasks of j0 collapses to a base-r number
    whose digits name X's symbols at j0's columns.  Any divisibility,
    digit-range, or leftover failure raises InconsistentDistanceVector.
    """
    X = _decode_batch(code, np.asarray([list(D)], dtype=np.int64))
    return tuple(int(v) for v in X[0])


def decode_many(code: Code, D_rows: Sequence[Sequence[int]]) -> np.ndarray:
    """Vectorized decode of many distance vectors; same checks as
    ``decode``, applied to every row."""
    return _decode_batch(code, np.asarray(D_rows, dtype=np.int64))


def _decode_batch(code: Code, D: np.ndarray) -> np.ndarray:
    cp = code.plan
    info = cp.info
    nm = cp.m + 1
    if D.ndim != 2 or D.shape[1] != nm:
        raise ValueError(f"distance vectors must have length {nm}")
    groups = _cols_by_j(cp)
    M = np.array(cp.M, dtype=np.int64)
    digit_to_row = np.full(cp.r, -1, dtype=np.int64)
    for row, digit in enumerate(info.normalized()):
        digit_to_row[digit] = row
    R = D.astype(np.int64).copy()
    X = np.empty((len(D), cp.n), dtype=np.int64)
    lo = info.min_mw
    for j0 in range(cp.m, -1, -1):
        subs, signs = code.mu_arrays(j0)
        T = R[:, subs] @ signs
        ks = groups.get(j0)
        if ks is None:
            bad = np.nonzero(T)[0]
            if len(bad):
                raise InconsistentDistanceVector(
                    f"nonzero residual at row index {j0} (word {bad[0]})")
            continue
        powsum = sum(cp.r ** k for _, k in ks)
        T0 = T - lo * powsum
        bad = np.nonzero((T0 < 0) | (T0 % info.g != 0))[0]
        if len(bad):
            raise InconsistentDistanceVector(
                f"residual not divisible by g at row index {j0} (word {bad[0]})")
        U = T0 // info.g
        for ci, k in ks:
            U, digit = np.divmod(U, cp.r)
            rows = digit_to_row[digit]
            bad = np.nonzero(rows < 0)[0]
            if len(bad):
                raise InconsistentDistanceVector(
                    f"digit outside witness image at column ({j0},{k}) (word {bad[0]})")
            X[:, ci] = rows
            col = code.S[:, ci].astype(np.int64)
            R -= M[rows[:, None], col[None, :]]
        bad = np.nonzero(U)[0]
        if len(bad):
            raise InconsistentDistanceVector(
                f"leftover digits at row index {j0} (word {bad[0]})")
    return X


# -- text dump ----------------------------------------------------------


def dump_code(code: Code) -> str:
    """Line-based text form: header ``p q n m r g``, then w, then one
    line ``j k s_0 ... s_m`` per column.  Integer tokens only."""
    cp = code.plan
    lines = [f"{cp.p} {cp.q} {cp.n} {cp.m} {cp.r} {cp.info.g}"]
    lines.append(" ".join(str(x) for x in cp.info.w))
    for ci, (j, k) in enumerate(cp.J):
        syms = " ".join(str(int(v)) for v in code.S[:, ci])
        lines.append(f"{j} {k} {syms}")
    return "\n".join(lines) + "\n"


def parse_code(text: str, M) -> Code:
    """Rebuild a Code from its dump and the matrix it was built for.

    The dump does not carry M itself, so the caller supplies it; header
    fields and the column index set are cross-checked against a fresh
    plan, making parse(dump) the exact inverse of dump."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2:
        raise ValueError("truncated code dump")
    try:
        p, q, n, m, r, g = (int(t) for t in lines[0].split())
        w = tuple(int(t) for t in lines[1].split())
    except ValueError as exc:
        raise ValueError(f"malformed code dump header: {exc}") from None
    rows = tuple(tuple(int(x) for x in row) for row in M)
    if (len(rows), len(rows[0])) != (p, q):
        raise ValueError(f"matrix shape {len(rows)}x{len(rows[0])} does not match dump {p}x{q}")
    info = validate(rows, w)
    if info.g != g:
        raise ValueError("dump header g does not match the witness")
    cp = plan(rows, info, r, n)
    if cp.m != m:
        raise ValueError("dump header m does not match the plan")
    if len(lines) != 2 + n:
        raise ValueError(f"expected {n} column lines, found {len(lines) - 2}")
    dtype = np.int16 if q < (1 << 15) else np.int64
    S = np.empty((m + 1, n), dtype=dtype)
    for ci, line in enumerate(lines[2:]):
        toks = [int(t) for t in line.split()]
        if len(toks) != 2 + m + 1:
            raise ValueError(f"column line {ci} has {len(toks)} tokens, expected {m + 3}")
        if (toks[0], toks[1]) != cp.J[ci]:
            raise ValueError(f"column line {ci} index {toks[:2]} does not match plan {cp.J[ci]}")
        col = toks[2:]
        if any(not 0 <= s < q for s in col):
            raise ValueError(f"column line {ci} has symbols outside 0..{q - 1}")
        S[:, ci] = col
    return Code(plan=cp, S=S)
