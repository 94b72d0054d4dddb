"""Young tableaux, polytabloids and Garnir straightening.

A tableau is a tuple of row tuples, e.g. ``((1, 2), (3, 4))``; its shape is
the tuple of row lengths.  A linear combination of polytabloids is a plain
dict ``{tableau: coefficient}`` with zero coefficients removed.  When every
key is standard, the dict is a vector of the Specht module in the standard
polytabloid basis.
"""

from collections import Counter
from functools import lru_cache
from itertools import combinations, permutations, product
from math import factorial, prod

from . import _config
from .partitions import class_representative, partitions_of


def shape_of(t):
    return tuple(len(row) for row in t)


def columns(t):
    if not t:
        return ()
    return tuple(tuple(row[j] for row in t if len(row) > j) for j in range(len(t[0])))


def from_columns(cols, shape):
    return tuple(tuple(cols[j][i] for j in range(length)) for i, length in enumerate(shape))


def is_standard(t):
    rows_ok = all(row[j] < row[j + 1] for row in t for j in range(len(row) - 1))
    cols_ok = all(c[i] < c[i + 1] for c in columns(t) for i in range(len(c) - 1))
    return rows_ok and cols_ok


def validate_tableau(t, shape=None):
    """Check that ``t`` is a bijective filling of its diagram by 1..b."""
    t = tuple(tuple(row) for row in t)
    sh = shape_of(t)
    if any(sh[i] < sh[i + 1] for i in range(len(sh) - 1)) or 0 in sh:
        raise ValueError(f"rows of {t} do not form a Young diagram")
    if shape is not None and sh != tuple(shape):
        raise ValueError(f"tableau {t} does not have shape {shape}")
    entries = sorted(x for row in t for x in row)
    if entries != list(range(1, len(entries) + 1)):
        raise ValueError(f"tableau {t} is not filled by 1..{len(entries)}")
    return t


@lru_cache(maxsize=None)
def standard_tableaux(shape):
    """All standard tableaux of ``shape``, sorted lexicographically by rows."""
    shape = tuple(shape)
    b = sum(shape)
    if b == 0:
        return ((),)
    out = []
    # b sits in some removable corner; recurse on the smaller shape.
    for i, length in enumerate(shape):
        if i + 1 < len(shape) and shape[i + 1] == length:
            continue
        smaller = list(shape)
        smaller[i] -= 1
        smaller = tuple(p for p in smaller if p)
        for t in standard_tableaux(smaller):
            rows = [list(row) for row in t]
            if i == len(rows):
                rows.append([])
            rows[i].append(b)
            out.append(tuple(tuple(row) for row in rows))
    return tuple(sorted(out))


def hook_lengths(shape):
    conj = [sum(1 for p in shape if p > j) for j in range(shape[0])] if shape else []
    return [[shape[i] - j + conj[j] - i - 1 for j in range(shape[i])] for i in range(len(shape))]


def syt_count(shape):
    """Number of standard tableaux of ``shape`` via the hook length formula."""
    n = sum(shape)
    return factorial(n) // prod(h for row in hook_lengths(shape) for h in row)


def permutation_sign(seq):
    """Sign of the permutation sorting ``seq`` (distinct, comparable items)."""
    order = sorted(range(len(seq)), key=seq.__getitem__)
    seen = [False] * len(seq)
    sign = 1
    for start in range(len(seq)):
        if seen[start]:
            continue
        i = start
        length = 0
        while not seen[i]:
            seen[i] = True
            i = order[i]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def tabloid(t):
    return tuple(frozenset(row) for row in t)


def expand_to_tabloids(t):
    """Write the polytabloid e_t as a signed sum of tabloids.

    Entries may be anything hashable and sortable (block tuples work), which
    lets the wreath-product oracle reuse this for decorated tableaux.
    """
    shape = shape_of(t)
    cols = columns(t)
    base = prod(permutation_sign(c) for c in cols)
    out = Counter()
    for choice in product(*(permutations(c) for c in cols)):
        # sign relative to t itself, not to the sorted columns
        sign = base * prod(permutation_sign(c) for c in choice)
        out[tabloid(from_columns(choice, shape))] += sign
    return {k: v for k, v in out.items() if v}


def column_sort(t):
    """Sort every column increasing; return (sign, sorted tableau)."""
    shape = shape_of(t)
    cols = columns(t)
    sign = prod(permutation_sign(c) for c in cols)
    return sign, from_columns(tuple(tuple(sorted(c)) for c in cols), shape)


def _first_row_descent(t):
    for i, row in enumerate(t):
        for j in range(len(row) - 1):
            if row[j] > row[j + 1]:
                return i, j
    return None


@lru_cache(maxsize=None)
def _straighten_sorted(t):
    # t is column-increasing; returns a tuple of (standard tableau, coeff).
    descent = _first_row_descent(t)
    if descent is None:
        return ((t, 1),)
    i, j = descent
    cells = [(r, j) for r in range(i, len(t)) if len(t[r]) > j]
    size_a = len(cells)
    cells += [(r, j + 1) for r in range(i + 1)]
    values = [t[r][c] for r, c in cells]
    a_values = set(values[:size_a])
    pool = sorted(values)
    result = Counter()
    # Garnir: the signed sum over coset representatives vanishes, so e_t is
    # minus the sum over the non-identity representatives.
    for chosen in combinations(pool, size_a):
        if set(chosen) == a_values:
            continue
        rest = [v for v in pool if v not in chosen]
        new_values = list(chosen) + rest
        position = {v: p for p, v in enumerate(values)}
        sigma_sign = permutation_sign([position[v] for v in new_values])
        rows = [list(row) for row in t]
        for (r, c), v in zip(cells, new_values):
            rows[r][c] = v
        col_sign, u = column_sort(tuple(tuple(row) for row in rows))
        for s, coeff in _straighten_sorted(u):
            result[s] -= sigma_sign * col_sign * coeff
    return tuple((s, c) for s, c in sorted(result.items()) if c)


def straighten(t):
    """Express e_t in the standard polytabloid basis.

    Returns ``{standard tableau: integer coefficient}``.
    """
    t = validate_tableau(t)
    sign, u = column_sort(t)
    return {s: sign * c for s, c in _straighten_sorted(u)}


def straighten_vector(v):
    out = Counter()
    for t, c in v.items():
        for s, d in straighten(t).items():
            out[s] += c * d
    return {s: c for s, c in out.items() if c}


def apply_permutation(g, t):
    """Relabel the entries of ``t`` by ``g`` (one-line notation on 1..b)."""
    return tuple(tuple(g[x - 1] for x in row) for row in t)


def compose(g, h):
    """The permutation g∘h (apply h first), both in one-line notation."""
    return tuple(g[h[i] - 1] for i in range(len(h)))


def specht_action(g, v):
    """Act by ``g`` on a vector ``{standard tableau: coeff}`` of S^shape."""
    out = Counter()
    for t, c in v.items():
        for s, d in straighten(apply_permutation(g, t)).items():
            out[s] += c * d
    return {s: c for s, c in out.items() if c}


def specht_matrix(shape, g):
    """Integer matrix of ``g`` on S^shape; column i is the image of basis vector i."""
    basis = standard_tableaux(tuple(shape))
    index = {t: i for i, t in enumerate(basis)}
    mat = [[0] * len(basis) for _ in basis]
    for i, t in enumerate(basis):
        for s, c in straighten(apply_permutation(g, t)).items():
            mat[index[s]][i] = c
    return mat


def one_line(rho):
    """Class representative of cycle type ``rho`` in one-line notation."""
    perm = class_representative(rho)
    return tuple(perm[i] for i in range(1, sum(rho) + 1))


def specht_character(shape, bound=None):
    """Character of S^shape by tracing the straightened action.

    Independent of the Murnaghan-Nakayama rule; used to cross-check it.
    Returns ``{cycle type: value}``.
    """
    shape = tuple(shape)
    b = sum(shape)
    bound = _config.BRUTE_CHARACTER_BOUND if bound is None else bound
    _config.check_bound("b", b, bound, "GENFOULKES_BRUTE_CHARACTER_BOUND")
    basis = standard_tableaux(shape)
    values = {}
    for rho in partitions_of(b):
        g = one_line(rho)
        values[rho] = sum(straighten(apply_permutation(g, t)).get(t, 0) for t in basis)
    return values


def format_tableau(t):
    return "[" + "/".join(",".join(str(x) for x in row) for row in t) + "]"
