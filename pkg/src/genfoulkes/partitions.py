"""Integer partitions as plain tuples.

A partition is a tuple of positive ints in weakly decreasing order; the empty
tuple is the partition of 0.  The same tuples label conjugacy classes of S_n
by cycle type.  Everything that enumerates partitions does so in reverse
lexicographic order, ``(4), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)``.
"""

import re
from collections import Counter
from functools import lru_cache
from math import factorial, prod


def is_partition(parts):
    return (
        isinstance(parts, tuple)
        and all(isinstance(p, int) and p >= 1 for p in parts)
        and all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))
    )


def as_partition(parts):
    """Validate and return ``parts`` as a canonical tuple.

    Trailing zeros are dropped; anything else that is not weakly decreasing
    and nonnegative raises ``ValueError``.
    """
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts}")
    return parts


def weight(parts):
    return sum(parts)


@lru_cache(maxsize=None)
def partitions_of(n, max_part=None):
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def partition_index(n):
    """Map partition -> position in ``partitions_of(n)``."""
    return {lam: i for i, lam in enumerate(partitions_of(n))}


def conjugate(lam):
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def dominates(mu, lam):
    """True iff ``mu`` dominates ``lam`` (all prefix sums of mu are >= those of lam)."""
    if sum(mu) != sum(lam):
        raise ValueError(f"dominance needs equal weights: {mu} vs {lam}")
    s_mu = s_lam = 0
    for j in range(max(len(mu), len(lam))):
        s_mu += mu[j] if j < len(mu) else 0
        s_lam += lam[j] if j < len(lam) else 0
        if s_mu < s_lam:
            return False
    return True


def fits_in_rectangle(lam, rows, cols):
    return len(lam) <= rows and (not lam or lam[0] <= cols)


def omega_k(a, b, k):
    """Partitions of ``k`` contained in the rectangle with ``b`` rows of length ``a``."""
    if not 1 <= k < a * b:
        raise ValueError(f"cut point k={k} outside 1..{a * b - 1}")
    return tuple(lam for lam in partitions_of(k) if fits_in_rectangle(lam, b, a))


def add_partitions(mu, nu):
    """Componentwise sum, padding the shorter partition with zeros."""
    length = max(len(mu), len(nu))
    mu = mu + (0,) * (length - len(mu))
    nu = nu + (0,) * (length - len(nu))
    return tuple(x + y for x, y in zip(mu, nu))


def multiplicities(rho):
    return Counter(rho)


def centralizer_order(rho):
    """Order of the centralizer of a permutation with cycle type ``rho``."""
    return prod(i**m * factorial(m) for i, m in Counter(rho).items())


def class_size(rho):
    return factorial(sum(rho)) // centralizer_order(rho)


def class_sign(rho):
    """Sign of any permutation of cycle type ``rho``."""
    return -1 if (sum(rho) - len(rho)) % 2 else 1


def cycle_type(perm):
    """Cycle type of a permutation given in one-line notation on 1..n."""
    n = len(perm)
    seen = [False] * n
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i] - 1
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def class_representative(rho, offset=0):
    """A permutation of cycle type ``rho`` on ``offset+1..offset+n``.

    Returned as a dict point -> image.  Cycles are consecutive runs, longest
    first: (3, 1) -> (1 2 3)(4).
    """
    perm = {}
    start = offset + 1
    for length in rho:
        for i in range(length):
            perm[start + i] = start + (i + 1) % length
        start += length
    return perm


_PARTITION_RE = re.compile(r"^\s*\[\s*(\d+(\s*,\s*\d+)*)?\s*\]\s*$")


def parse_partition(text):
    """Parse ``"[3,1]"`` (or ``"[]"``) into a partition tuple."""
    if not _PARTITION_RE.match(text):
        raise ValueError(f"cannot parse partition {text!r}; expected e.g. [3,1]")
    inner = text.strip()[1:-1].strip()
    if not inner:
        return ()
    parts = tuple(int(x) for x in inner.split(","))
    if any(p == 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {text!r}")
    return as_partition(parts)


def format_partition(lam):
    return "[" + ",".join(str(p) for p in lam) + "]"
