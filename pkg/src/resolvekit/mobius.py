"""The meet-semilattice of nonnegative integers under bitwise AND.

``x <= y`` in the lattice order iff ``x & y == x``; the meet of two
elements is ``x & y``.  The Mobius function of this order is ``(-1)**k``
on comparable pairs, where ``k`` counts the bit positions of ``y`` not
set in ``x``, and 0 otherwise.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping


def popcount(x: int) -> int:
    """Number of ones in the binary expansion of ``x >= 0``."""
    if x < 0:
        raise ValueError("popcount requires a nonnegative integer")
    return x.bit_count()


def is_below(x: int, y: int) -> bool:
    """Lattice order test: ``x`` precedes ``y`` iff ``x == x & y``."""
    return x & y == x


def mu(x: int, y: int) -> int:
    """Mobius function of the AND-semilattice: ``(-1)**(n(y)-n(x))`` if
    ``x`` precedes ``y``, else 0."""
    if x < 0 or y < 0:
        raise ValueError("lattice indices must be nonnegative")
    if x & y != x:
        return 0
    return -1 if (y.bit_count() - x.bit_count()) & 1 else 1


def downset(j: int) -> list[int]:
    """All ``2**popcount(j)`` submasks of ``j`` in increasing order.

    Uses the standard decreasing-submask walk and reverses it, so the
    order is deterministic.
    """
    if j < 0:
        raise ValueError("lattice indices must be nonnegative")
    out = []
    s = j
    while True:
        out.append(s)
        if s == 0:
            break
        s = (s - 1) & j
    out.reverse()
    return out


def popcount_prefix_sum(x: int) -> int:
    """Exact value of ``sum(popcount(i) for i in range(x + 1))``.

    Counted per bit position in closed form, so it stays cheap for
    arbitrarily large ``x``.
    """
    if x < 0:
        raise ValueError("popcount_prefix_sum requires a nonnegative integer")
    total = 0
    n = x + 1
    b = 0
    while (1 << b) <= x:
        period = 1 << (b + 1)
        half = 1 << b
        full, rem = divmod(n, period)
        total += full * half + max(0, rem - half)
        b += 1
    return total


def lindstrom_check(a: int, b: int, f: Mapping[int, int] | Callable[[int], int]) -> int:
    """Evaluate ``sum(f(x & a) * mu(x, b) for x below b)``.

    The semilattice identity guarantees the sum vanishes whenever ``b``
    does not precede ``a``; that precondition is enforced here because
    the identity says nothing about the comparable case.  ``f`` may be a
    mapping or a callable defined on the submasks of ``a & b``.
    """
    if is_below(b, a):
        raise ValueError("lindstrom_check requires b not below a")
    get = f.__getitem__ if isinstance(f, Mapping) else f
    total = 0
    for x in downset(b):
        total += get(x & a) * mu(x, b)
    return total
