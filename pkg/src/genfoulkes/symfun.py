"""Symmetric functions at fixed weight: LR products, restriction, plethysm with h_a.

Schur expansions are ``SchurVector`` objects.  Power-sum expansions are
plain dicts ``{partition: Fraction}``.
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache

from . import _config
from .characters import character_table
from .partitions import (
    as_partition,
    centralizer_order,
    conjugate,
    partitions_of,
)
from .vectors import BipartiteDecomposition, SchurVector

__all__ = [
    "SchurVector",
    "BipartiteDecomposition",
    "lr_coefficient",
    "lr_coefficient_by_characters",
    "induce_product",
    "restrict",
    "plethysm_h",
    "plethysm_h_brute",
    "young_module",
    "kostka",
    "schur_from_power_sums",
    "unit",
]


def _contains(outer, inner):
    return len(inner) <= len(outer) and all(inner[i] <= outer[i] for i in range(len(inner)))


@lru_cache(maxsize=None)
def lr_coefficient(nu, mu, lam):
    """Littlewood-Richardson coefficient c^nu_{mu, lam} by the skew tableau rule.

    Counts semistandard fillings of nu/mu with content lam whose reverse
    reading word (rows top to bottom, each right to left) is a lattice word.
    """
    nu, mu, lam = tuple(nu), tuple(mu), tuple(lam)
    if sum(nu) != sum(mu) + sum(lam):
        raise ValueError(f"weights do not add up: |{nu}| != |{mu}| + |{lam}|")
    if not _contains(nu, mu) or not _contains(nu, lam):
        return 0
    mu_pad = mu + (0,) * (len(nu) - len(mu))
    cells = [(i, j) for i in range(len(nu)) for j in range(nu[i] - 1, mu_pad[i] - 1, -1)]
    filling = {}
    counts = [0] * (len(lam) + 1)

    def place(pos):
        if pos == len(cells):
            return 1
        i, j = cells[pos]
        hi = len(lam)
        right = filling.get((i, j + 1))
        if right is not None:
            hi = min(hi, right)
        above = filling.get((i - 1, j))
        lo = above + 1 if above is not None else 1
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= lam[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[i, j] = v
            total += place(pos + 1)
            del filling[i, j]
            counts[v] -= 1
        return total

    return place(0)


def lr_coefficient_by_characters(nu, mu, lam):
    """c^nu_{mu, lam} as <chi^nu restricted, chi^mu x chi^lam> over S_k x S_m."""
    nu, mu, lam = tuple(nu), tuple(mu), tuple(lam)
    k, m = sum(mu), sum(lam)
    if sum(nu) != k + m:
        raise ValueError("weights do not add up")
    tn, tk, tm = character_table(k + m), character_table(k), character_table(m)
    total = Fraction(0)
    for rho in partitions_of(k):
        a = tk(mu, rho)
        if not a:
            continue
        for sigma in partitions_of(m):
            b = tm(lam, sigma)
            if not b:
                continue
            joined = tuple(sorted(rho + sigma, reverse=True))
            total += Fraction(a * b * tn(nu, joined), centralizer_order(rho) * centralizer_order(sigma))
    if total.denominator != 1:
        raise ArithmeticError(f"non-integer LR coefficient {total}")
    return int(total)


def unit():
    """The trivial module of S_0, unit for ``induce_product``."""
    return SchurVector(0, {(): 1})


def induce_product(A, B):
    """Induce the outer tensor product of A and B from S_k x S_m to S_{k+m}."""
    n = A.n + B.n
    out = Counter()
    for mu, c in A.items():
        for lam, d in B.items():
            for nu in partitions_of(n):
                coeff = lr_coefficient(nu, mu, lam)
                if coeff:
                    out[nu] += c * d * coeff
    return SchurVector(n, out)


def restrict(A, k):
    """Restrict an S_n module to S_k x S_{n-k}."""
    n = A.n
    if not 0 < k < n:
        raise ValueError(f"cut point k={k} outside 1..{n - 1}")
    out = Counter()
    for nu, c in A.items():
        for mu in partitions_of(k):
            if not _contains(nu, mu):
                continue
            for lam in partitions_of(n - k):
                coeff = lr_coefficient(nu, mu, lam)
                if coeff:
                    out[mu, lam] += c * coeff
    return BipartiteDecomposition(k, n - k, out)


# --- power sums -----------------------------------------------------------


def _p_product(f, g):
    out = Counter()
    for alpha, c in f.items():
        for beta, d in g.items():
            out[tuple(sorted(alpha + beta, reverse=True))] += c * d
    return out


@lru_cache(maxsize=None)
def _p_r_of_h(r, a):
    # p_r[h_a] = h_a[p_r] = sum_{sigma |- a} p_{r sigma} / z_sigma
    return {tuple(r * s for s in sigma): Fraction(1, centralizer_order(sigma)) for sigma in partitions_of(a)}


@lru_cache(maxsize=None)
def _p_rho_of_h(rho, a):
    out = {(): Fraction(1)}
    for r in rho:
        out = _p_product(out, _p_r_of_h(r, a))
    return dict(out)


def schur_from_power_sums(pcoeffs, n):
    """Convert sum c_tau p_tau to the Schur basis, asserting integrality.

    Uses <p_tau, s_lam> = chi^lam(tau).
    """
    table = character_table(n)
    idx = {rho: i for i, rho in enumerate(table.classes)}
    out = {}
    for i, lam in enumerate(table.classes):
        total = sum((c * int(table.matrix[i, idx[tau]]) for tau, c in pcoeffs.items()), Fraction(0))
        if total.denominator != 1:
            raise ArithmeticError(f"non-integer Schur coefficient {total} at {lam}")
        out[lam] = int(total)
    return SchurVector(n, out)


@lru_cache(maxsize=None)
def _plethysm_h(nu, a):
    b = sum(nu)
    chi = character_table(b).row(nu)
    total = Counter()
    for rho in partitions_of(b):
        if not chi[rho]:
            continue
        w = Fraction(chi[rho], centralizer_order(rho))
        for tau, c in _p_rho_of_h(rho, a).items():
            total[tau] += w * c
    result = schur_from_power_sums(total, a * b)
    if not result.is_module:
        raise ArithmeticError(f"plethysm s{nu}[h{a}] has a negative coefficient: {result}")
    return result


def plethysm_h(nu, a, bound=None):
    """Schur expansion of s_nu[h_a], computed through power sums."""
    nu = as_partition(nu)
    if a < 1:
        raise ValueError(f"a must be positive, got {a}")
    bound = _config.PLETHYSM_BOUND if bound is None else bound
    _config.check_bound("ab", a * sum(nu), bound, "GENFOULKES_PLETHYSM_BOUND")
    return _plethysm_h(nu, a)


# --- monomial route (independent of characters) ---------------------------


@lru_cache(maxsize=None)
def kostka(lam, mu):
    """Number of semistandard tableaux of shape lam and content mu.

    Peels off the largest letter as a horizontal strip.
    """
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        return 0
    if not mu:
        return 1 if not lam else 0
    strip, rest = mu[-1], mu[:-1]
    total = 0
    for inner in _horizontal_strip_removals(lam, strip):
        total += kostka(inner, rest)
    return total


def _horizontal_strip_removals(lam, size):
    # inner shapes kappa with lam/kappa a horizontal strip of the given size:
    # lam[i+1] <= kappa[i] <= lam[i]
    out = []

    def rec(i, left, acc):
        if i == len(lam):
            if left == 0:
                out.append(tuple(p for p in acc if p))
            return
        floor = lam[i + 1] if i + 1 < len(lam) else 0
        for take in range(0, min(left, lam[i] - floor) + 1):
            rec(i + 1, left - take, acc + [lam[i] - take])

    rec(0, size, [])
    return out


def young_module(mu):
    """Schur expansion of the permutation module M^mu (Kostka numbers)."""
    mu = as_partition(mu)
    n = sum(mu)
    return SchurVector(n, {lam: kostka(lam, mu) for lam in partitions_of(n)})


def _monomials_below(alpha, degree):
    out = []

    def rec(i, left, acc):
        if i == len(alpha):
            if left == 0:
                out.append(tuple(acc))
            return
        for e in range(min(left, alpha[i]), -1, -1):
            rec(i + 1, left - e, acc + [e])

    rec(0, degree, [])
    return sorted(out)


def _plethysm_monomial_coefficient(nu, a, alpha):
    # SSYT of shape nu in the alphabet of degree-a monomials dividing x^alpha,
    # with product of entries equal to x^alpha.
    letters = _monomials_below(alpha, a)
    cells = [(i, j) for i in range(len(nu)) for j in range(nu[i])]
    filling = {}
    budget = list(alpha)

    def place(pos):
        if pos == len(cells):
            return 1
        i, j = cells[pos]
        lo = 0
        if j > 0:
            lo = filling[i, j - 1]
        if i > 0:
            lo = max(lo, filling[i - 1, j] + 1)
        total = 0
        for idx in range(lo, len(letters)):
            e = letters[idx]
            if any(x > y for x, y in zip(e, budget)):
                continue
            for v, x in enumerate(e):
                budget[v] -= x
            filling[i, j] = idx
            total += place(pos + 1)
            for v, x in enumerate(e):
                budget[v] += x
        filling.pop((i, j), None)
        return total

    return place(0)


def plethysm_h_brute(nu, a, bound=None):
    """Schur expansion of s_nu[h_a] from monomial coefficients.

    Expands s_nu over the alphabet of degree-a monomials, reads off the
    coefficient of each dominant monomial x^alpha, then inverts the
    unitriangular Kostka matrix.  Shares nothing with ``plethysm_h``.
    """
    nu = as_partition(nu)
    n = a * sum(nu)
    bound = _config.BRUTE_PLETHYSM_BOUND if bound is None else bound
    _config.check_bound("ab", n, bound, "GENFOULKES_BRUTE_PLETHYSM_BOUND")
    alphas = partitions_of(n)  # reverse lex is a linear extension of dominance
    mono = {alpha: _plethysm_monomial_coefficient(nu, a, alpha) for alpha in alphas}
    schur = {}
    for alpha in alphas:
        schur[alpha] = mono[alpha] - sum(d * kostka(lam, alpha) for lam, d in schur.items() if d)
    return SchurVector(n, schur)


def two_row_support(vec):
    return all(len(lam) <= 2 for lam in vec)


def conjugate_vector(vec):
    """Tensor with the sign module: S^lam -> S^{lam conjugate}."""
    return SchurVector(vec.n, {conjugate(lam): c for lam, c in vec.items()})
