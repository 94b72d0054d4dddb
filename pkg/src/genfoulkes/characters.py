"""Irreducible characters of S_n and inner products of class functions.

Class functions are dicts ``{cycle type: value}`` covering every partition
of n.  Functions on S_k x S_m are dicts ``{(rho, sigma): value}``.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np

from . import _config, _kernels
from .partitions import centralizer_order, class_size, partitions_of
from .vectors import BipartiteDecomposition, SchurVector


@lru_cache(maxsize=None)
def mn_character(lam, rho):
    """chi^lam(rho) by recursive border-strip removal."""
    lam, rho = tuple(lam), tuple(rho)
    if sum(lam) != sum(rho):
        raise ValueError(f"weight mismatch: {lam} vs {rho}")
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    return sum(sign * mn_character(smaller, rest) for smaller, sign in _kernels._remove_rim_hooks(lam, r))


@dataclass(frozen=True)
class CharacterTable:
    n: int
    classes: tuple
    matrix: np.ndarray  # rows: irreducibles, columns: classes, both in partitions_of(n) order

    @property
    def irreducibles(self):
        return self.classes

    def row(self, lam):
        return dict(zip(self.classes, (int(x) for x in self.matrix[self._index[tuple(lam)]])))

    @property
    def rows(self):
        return {lam: tuple(int(x) for x in self.matrix[i]) for i, lam in enumerate(self.classes)}

    @property
    def _index(self):
        return {lam: i for i, lam in enumerate(self.classes)}

    def __call__(self, lam, rho):
        idx = self._index
        return int(self.matrix[idx[tuple(lam)], idx[tuple(rho)]])


@lru_cache(maxsize=None)
def _table(n):
    matrix = _kernels.mn_table(n)
    matrix.setflags(write=False)
    return CharacterTable(n, partitions_of(n), matrix)


def character_table(n, bound=None):
    bound = _config.CHARACTER_TABLE_BOUND if bound is None else bound
    _config.check_bound("n", n, bound, "GENFOULKES_CHARACTER_TABLE_BOUND")
    return _table(n)


def character(lam):
    """chi^lam as a class function."""
    return character_table(sum(lam)).row(lam)


def _weight_of(f):
    ns = {sum(rho) for rho in f}
    if len(ns) != 1:
        raise ValueError("class function keys have mixed weights")
    (n,) = ns
    if set(f) != set(partitions_of(n)):
        raise ValueError(f"class function must be defined on every cycle type of S_{n}")
    return n


def inner_product(f, g):
    """(1/n!) sum_rho |class rho| f(rho) g(rho), as an exact Fraction."""
    n, m = _weight_of(f), _weight_of(g)
    if n != m:
        raise ValueError(f"weight mismatch: {n} vs {m}")
    return sum((Fraction(f[rho] * g[rho], centralizer_order(rho)) for rho in f), Fraction(0))


def _as_int(x, what):
    if x.denominator != 1:
        raise ValueError(f"non-integer multiplicity {x} for {what}; not a virtual character")
    return int(x)


def decompose_class_function(f):
    """Multiplicity of each irreducible in the class function ``f``.

    The result may be virtual; check ``.is_module``.
    """
    n = _weight_of(f)
    table = character_table(n)
    values = [f[rho] for rho in table.classes]
    z = [centralizer_order(rho) for rho in table.classes]
    out = {}
    for i, lam in enumerate(table.classes):
        total = sum(Fraction(int(table.matrix[i, c]) * values[c], z[c]) for c in range(len(z)))
        out[lam] = _as_int(total, lam)
    return SchurVector(n, out)


def decompose_bipartite(f):
    """Decompose a class function on S_k x S_m into products chi^mu x chi^lam."""
    ks = {sum(r) for r, _ in f}
    ms = {sum(s) for _, s in f}
    if len(ks) != 1 or len(ms) != 1:
        raise ValueError("bipartite class function keys have mixed weights")
    (k,), (m,) = ks, ms
    cls_k, cls_m = partitions_of(k), partitions_of(m)
    if len(f) != len(cls_k) * len(cls_m):
        raise ValueError("bipartite class function must cover every pair of cycle types")
    tk, tm = character_table(k), character_table(m)
    # F[r, s] = f(r, s) / (z_r z_s), then multiplicities = Tk F Tm^T
    scaled = [[Fraction(f[r, s], centralizer_order(r) * centralizer_order(s)) for s in cls_m] for r in cls_k]
    out = {}
    for i, mu in enumerate(cls_k):
        for j, lam in enumerate(cls_m):
            total = Fraction(0)
            for r in range(len(cls_k)):
                chi_mu = int(tk.matrix[i, r])
                if not chi_mu:
                    continue
                row = scaled[r]
                total += chi_mu * sum(
                    (int(tm.matrix[j, s]) * row[s] for s in range(len(cls_m))), Fraction(0)
                )
            out[mu, lam] = _as_int(total, (mu, lam))
    return BipartiteDecomposition(k, m, out)


def product_character(mu, lam):
    """The character of S^mu (x) S^lam on S_k x S_m."""
    f, g = character(mu), character(lam)
    return {(r, s): f[r] * g[s] for r in f for s in g}


def regular_character(n):
    return {rho: (factorial(n) if all(p == 1 for p in rho) else 0) for rho in partitions_of(n)}


def class_sizes(n):
    return {rho: class_size(rho) for rho in partitions_of(n)}
