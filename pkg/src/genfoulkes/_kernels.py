"""Integer kernels with a numba path and a pure-numpy fallback.

Set ``GENFOULKES_BACKEND=numpy`` to force the fallback.  Both paths are
always importable so tests and the benchmark can compare them directly.

Everything here works in int64.  Callers guard against overflow: character
values of S_n are bounded by sqrt(n!), so the character table is safe far
beyond the configured table bound, and the Kronecker cube checks its own
worst-case magnitude before choosing int64.
"""

from functools import lru_cache
from math import factorial, isqrt

import numpy as np

from . import _config
from .partitions import class_size, partitions_of

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


INT64_SAFE = 2**62
MAX_TABLE_N = 20


def _remove_rim_hooks(lam, r):
    """Yield (smaller partition, sign) for every rim hook of length r in lam."""
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    occupied = set(beta)
    for x in beta:
        y = x - r
        if y < 0 or y in occupied:
            continue
        between = sum(1 for z in beta if y < z < x)
        new_beta = sorted((y if z == x else z for z in beta), reverse=True)
        smaller = tuple(p for p in (new_beta[i] - (ell - 1 - i) for i in range(ell)) if p)
        yield smaller, (-1) ** between


@lru_cache(maxsize=None)
def mn_transitions(n):
    """Sparse rim-hook removal data for all partitions of weight <= n.

    Returns ``(offsets, ptr, target, sign)``.  Partitions of every weight
    0..n are concatenated; weight s occupies ``offsets[s]:offsets[s + 1]``.
    For hook length r and global index i, the removals live in
    ``ptr[r * P + i] : ptr[r * P + i + 1]`` of ``target``/``sign``.
    """
    allparts = [lam for s in range(n + 1) for lam in partitions_of(s)]
    total = len(allparts)
    index = {lam: i for i, lam in enumerate(allparts)}
    offsets = np.zeros(n + 2, dtype=np.int64)
    for s in range(n + 1):
        offsets[s + 1] = offsets[s] + len(partitions_of(s))
    ptr = np.zeros((n + 1) * total + 1, dtype=np.int64)
    target, sign = [], []
    for r in range(n + 1):
        for i, lam in enumerate(allparts):
            row = r * total + i
            if r >= 1:
                for smaller, s in _remove_rim_hooks(lam, r):
                    target.append(index[smaller])
                    sign.append(s)
            ptr[row + 1] = len(target)
    return offsets, ptr, np.array(target, dtype=np.int64), np.array(sign, dtype=np.int64)


def _class_matrix(n):
    classes = partitions_of(n)
    width = max((len(rho) for rho in classes), default=0)
    parts = np.zeros((len(classes), max(width, 1)), dtype=np.int64)
    lengths = np.zeros(len(classes), dtype=np.int64)
    for c, rho in enumerate(classes):
        parts[c, : len(rho)] = rho
        lengths[c] = len(rho)
    return parts, lengths


@njit(cache=True)
def _mn_table_nb(class_parts, class_len, offsets, ptr, target, sign, n):
    total = offsets[n + 1]
    lo = offsets[n]
    hi = offsets[n + 1]
    nclass = class_parts.shape[0]
    out = np.zeros((hi - lo, nclass), dtype=np.int64)
    for c in range(nclass):
        v = np.zeros(total, dtype=np.int64)
        v[0] = 1
        s = 0
        for j in range(class_len[c]):
            r = class_parts[c, j]
            new = np.zeros(total, dtype=np.int64)
            for idx in range(offsets[s + r], offsets[s + r + 1]):
                row = r * total + idx
                acc = 0
                for e in range(ptr[row], ptr[row + 1]):
                    acc += sign[e] * v[target[e]]
                new[idx] = acc
            v = new
            s += r
        for i in range(hi - lo):
            out[i, c] = v[lo + i]
    return out


def _mn_table_np(class_parts, class_len, offsets, ptr, target, sign, n):
    total = int(offsets[n + 1])
    lo, hi = int(offsets[n]), int(offsets[n + 1])
    # one (rows, targets, signs) triple per hook length
    per_r = {}
    for r in range(1, n + 1):
        seg = ptr[r * total : (r + 1) * total + 1]
        counts = np.diff(seg)
        rows = np.repeat(np.arange(total, dtype=np.int64), counts)
        per_r[r] = (rows, target[seg[0] : seg[-1]], sign[seg[0] : seg[-1]])
    out = np.zeros((hi - lo, class_parts.shape[0]), dtype=np.int64)
    for c in range(class_parts.shape[0]):
        v = np.zeros(total, dtype=np.int64)
        v[0] = 1
        for j in range(class_len[c]):
            rows, tgt, sgn = per_r[int(class_parts[c, j])]
            new = np.zeros(total, dtype=np.int64)
            np.add.at(new, rows, sgn * v[tgt])
            v = new
        out[:, c] = v[lo:hi]
    return out


def mn_table(n, backend=None):
    """Character table of S_n as an int64 array.

    Rows are irreducibles, columns are cycle types, both in
    ``partitions_of(n)`` order.
    """
    if n > MAX_TABLE_N:
        raise ValueError(f"int64 character table limited to n <= {MAX_TABLE_N}")
    backend = backend or _config.BACKEND
    offsets, ptr, target, sign = mn_transitions(n)
    parts, lengths = _class_matrix(n)
    if n == 0:
        return np.ones((1, 1), dtype=np.int64)
    if backend == "numba" and HAVE_NUMBA:
        return _mn_table_nb(parts, lengths, offsets, ptr, target, sign, n)
    return _mn_table_np(parts, lengths, offsets, ptr, target, sign, n)


@njit(cache=True)
def _triple_sum_nb(table, weights):
    p, nclass = table.shape
    out = np.zeros((p, p, p), dtype=np.int64)
    for i in range(p):
        for j in range(i, p):
            for l in range(j, p):
                acc = 0
                for c in range(nclass):
                    acc += weights[c] * table[i, c] * table[j, c] * table[l, c]
                out[i, j, l] = acc
                out[i, l, j] = acc
                out[j, i, l] = acc
                out[j, l, i] = acc
                out[l, i, j] = acc
                out[l, j, i] = acc
    return out


def _triple_sum_np(table, weights):
    return np.einsum("c,ic,jc,lc->ijl", weights, table, table, table)


def kronecker_cube(n, backend=None):
    """All Kronecker coefficients of S_n as an integer array indexed by partitions.

    ``cube[i, j, l] = (1/n!) sum_rho |class rho| chi_i(rho) chi_j(rho) chi_l(rho)``.
    Falls back to Python integers when int64 could overflow.
    """
    backend = backend or _config.BACKEND
    table = mn_table(n, backend)
    classes = partitions_of(n)
    weights = [class_size(rho) for rho in classes]
    fact = factorial(n)
    chi_max = isqrt(fact) + 1
    worst = max(weights) * chi_max**3 * len(classes)
    if worst < INT64_SAFE:
        w = np.array(weights, dtype=np.int64)
        if backend == "numba" and HAVE_NUMBA:
            sums = _triple_sum_nb(table, w)
        else:
            sums = _triple_sum_np(table, w)
        if np.any(sums % fact):
            raise ArithmeticError("Kronecker triple sum not divisible by n!")
        return sums // fact
    obj = table.astype(object)
    sums = np.einsum("c,ic,jc,lc->ijl", np.array(weights, dtype=object), obj, obj, obj)
    if any(x % fact for x in sums.flat):
        raise ArithmeticError("Kronecker triple sum not divisible by n!")
    return sums // fact
