"""Brute-force matrix model of F_nu^a and its restriction components.

A basis vector of F_nu^a is a pair (t, X): a standard tableau t of shape nu
on 1..b and a block system X, i.e. a set partition of 1..ab into b blocks of
size a.  It stands for the polytabloid whose cell holding l in t holds the
block X_l instead.  Block systems are stored canonically, blocks sorted
internally and ordered by their minimum, so every S_b-orbit of ordered block
systems has exactly one representative.

Acting by a permutation of 1..ab moves the blocks; re-sorting the moved
blocks by minimum gives a permutation phi of the block labels, and the image
is e_{phi(t)} decorated by the canonical system, which is then straightened
in the Specht basis of S^nu.  Everything is exact integer arithmetic.
"""

from collections import Counter
from functools import lru_cache
from itertools import combinations
from typing import NamedTuple

import numpy as np

from . import _config
from .characters import decompose_bipartite
from .partitions import as_partition, class_representative, omega_k, partitions_of
from .tableaux import apply_permutation, expand_to_tabloids, standard_tableaux, straighten


class WreathPolytabloid(NamedTuple):
    tableau: tuple
    blocks: tuple


@lru_cache(maxsize=None)
def enumerate_block_systems(a, b, bound=None):
    """All canonical block systems of 1..ab into b blocks of size a."""
    bound = _config.ORACLE_BOUND if bound is None else bound
    _config.check_bound("ab", a * b, bound, "GENFOULKES_ORACLE_BOUND")
    out = []

    def rec(remaining, acc):
        if not remaining:
            out.append(tuple(acc))
            return
        first, rest = remaining[0], remaining[1:]
        for others in combinations(rest, a - 1):
            block = (first,) + others
            left = tuple(x for x in rest if x not in others)
            rec(left, acc + [block])

    rec(tuple(range(1, a * b + 1)), [])
    return tuple(out)


def canonical_blocks(blocks):
    """Canonical form of an ordered block system, plus the label permutation.

    Returns ``(canonical, phi)`` where ``blocks[l - 1] == canonical[phi[l - 1] - 1]``.
    """
    normalized = [tuple(sorted(block)) for block in blocks]
    canonical = tuple(sorted(normalized, key=lambda blk: blk[0]))
    position = {blk: i + 1 for i, blk in enumerate(canonical)}
    return canonical, tuple(position[blk] for blk in normalized)


def intersection_type(blocks, k):
    """Partition type of {1..k} intersected with the blocks."""
    sizes = sorted((sum(1 for x in blk if x <= k) for blk in blocks), reverse=True)
    return tuple(s for s in sizes if s)


def filter_P_lambda(a, b, k, lam):
    """Canonical block systems whose intersection with {1..k} has type lam."""
    lam = as_partition(lam)
    if lam not in omega_k(a, b, k):
        raise ValueError(f"{lam} is not in Omega_{k} for a={a}, b={b}")
    return tuple(X for X in enumerate_block_systems(a, b) if intersection_type(X, k) == lam)


def count_P_lambda_brute(a, b, k, lam):
    return len(filter_P_lambda(a, b, k, lam))


def pairing_block_system(tau):
    """The a = 2 block system pairing l with tau(b + l), given tau's images of b+1..2b."""
    return tuple((l + 1, image) for l, image in enumerate(tau))


def decorate(t, blocks):
    """The diagram t_X: each entry l of t replaced by the block X_l."""
    return tuple(tuple(blocks[l - 1] for l in row) for row in t)


def wreath_tabloid_expansion(t, blocks):
    """e_{t_X} as a signed sum of tabloids whose entries are blocks."""
    return expand_to_tabloids(decorate(t, blocks))


def act_and_straighten(g, v):
    """Act by ``g`` (one-line notation on 1..ab) on the basis vector ``v``.

    Returns ``{WreathPolytabloid: coefficient}`` in the standard basis.
    Works for every g in S_ab; restricting to S_k x S_{ab-k} keeps each
    restriction component invariant.
    """
    t, blocks = v
    moved = [tuple(g[x - 1] for x in blk) for blk in blocks]
    canonical, phi = canonical_blocks(moved)
    return {
        WreathPolytabloid(s, canonical): c for s, c in straighten(apply_permutation(phi, t)).items()
    }


def _bipartite_representative(rho, sigma):
    k = sum(rho)
    perm = class_representative(rho)
    perm.update(class_representative(sigma, offset=k))
    return tuple(perm[i] for i in range(1, k + sum(sigma) + 1))


class OracleModule:
    """The restriction component of F_nu^a to S_k x S_{ab-k} indexed by lam.

    ``basis`` lists (t, X) with X in P_lam and t standard of shape nu.
    """

    def __init__(self, a, b, nu, k, lam):
        self.a, self.b, self.k = a, b, k
        self.nu = as_partition(nu)
        self.lam = as_partition(lam)
        if sum(self.nu) != b:
            raise ValueError(f"nu={self.nu} is not a partition of b={b}")
        self.n = a * b
        self.systems = filter_P_lambda(a, b, k, self.lam)
        tableaux = standard_tableaux(self.nu)
        self.basis = tuple(WreathPolytabloid(t, X) for X in self.systems for t in tableaux)
        self.index = {v: i for i, v in enumerate(self.basis)}

    @property
    def dimension(self):
        return len(self.basis)

    def act(self, g, v):
        return act_and_straighten(g, v)

    def matrix(self, g):
        """Dense integer matrix of g; column i is the image of basis vector i."""
        mat = np.zeros((self.dimension, self.dimension), dtype=np.int64)
        for i, v in enumerate(self.basis):
            for w, c in act_and_straighten(g, v).items():
                mat[self.index[w], i] = c
        return mat

    def trace(self, g):
        """Trace of g from diagonal contributions only."""
        tableaux = standard_tableaux(self.nu)
        total = 0
        for X in self.systems:
            moved = [tuple(g[x - 1] for x in blk) for blk in X]
            canonical, phi = canonical_blocks(moved)
            if canonical != X:
                continue
            for t in tableaux:
                total += straighten(apply_permutation(phi, t)).get(t, 0)
        return total

    def character(self):
        """``{(rho, sigma): trace}`` over all class pairs of S_k x S_{ab-k}."""
        return {
            (rho, sigma): self.trace(_bipartite_representative(rho, sigma))
            for rho in partitions_of(self.k)
            for sigma in partitions_of(self.n - self.k)
        }


def _check_trace_bound(a, b, bound):
    bound = _config.ORACLE_TRACE_BOUND if bound is None else bound
    _config.check_bound("ab", a * b, bound, "GENFOULKES_ORACLE_TRACE_BOUND")


@lru_cache(maxsize=None)
def _oracle_character(a, b, nu, k, lam):
    return OracleModule(a, b, nu, k, lam).character()


def oracle_character(a, b, nu, k, lam, bound=None):
    _check_trace_bound(a, b, bound)
    return dict(_oracle_character(a, b, as_partition(nu), k, as_partition(lam)))


def oracle_decompose(a, b, nu, k, lam, bound=None):
    """Decompose the oracle component into S^mu (x) S^kappa; must be a genuine module."""
    result = decompose_bipartite(oracle_character(a, b, nu, k, lam, bound))
    if not result.is_module:
        raise ArithmeticError(f"oracle produced negative multiplicities: {result}")
    return result


def oracle_restriction(a, b, nu, k, bound=None):
    """Sum of oracle_decompose over every lam in Omega_k."""
    parts = [oracle_decompose(a, b, nu, k, lam, bound) for lam in omega_k(a, b, k)]
    total = parts[0]
    for p in parts[1:]:
        total = total + p
    return total


def type_counts(a, b, k):
    """Counter of intersection types over all block systems (for P_lam sizes)."""
    return Counter(intersection_type(X, k) for X in enumerate_block_systems(a, b))
