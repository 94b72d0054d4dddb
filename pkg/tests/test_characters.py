from fractions import Fraction
from math import factorial

import pytest

from genfoulkes._config import BoundExceeded
from genfoulkes.characters import (
    character,
    character_table,
    decompose_bipartite,
    decompose_class_function,
    inner_product,
    mn_character,
    product_character,
    regular_character,
)
from genfoulkes.partitions import (
    centralizer_order,
    class_sign,
    class_size,
    conjugate,
    partitions_of,
)
from genfoulkes.tableaux import specht_character, syt_count


def test_mn_examples():
    for rho in partitions_of(5):
        assert mn_character((5,), rho) == 1
        assert mn_character((1,) * 5, rho) == (-1) ** (5 - len(rho))
    assert mn_character((2, 1), (1, 1, 1)) == 2
    with pytest.raises(ValueError):
        mn_character((2, 1), (2,))


def test_table_small():
    t1 = character_table(1)
    assert t1.rows == {(1,): (1,)}
    t3 = character_table(3)
    identity = t3.classes.index((1, 1, 1))
    assert [t3.rows[lam][identity] for lam in t3.classes] == [1, 2, 1]
    assert set(character_table(6).rows[(6,)]) == {1}


def test_table_bound():
    with pytest.raises(BoundExceeded):
        character_table(17)
    assert character_table(17, bound=17).n == 17


@pytest.mark.parametrize("n", range(1, 11))
def test_orthogonality(n):
    table = character_table(n)
    classes = table.classes
    rows = table.rows
    for lam in classes:
        for mu in classes:
            s = sum(class_size(rho) * rows[lam][j] * rows[mu][j] for j, rho in enumerate(classes))
            assert s == (factorial(n) if lam == mu else 0)
    for j, rho in enumerate(classes):
        for l, sigma in enumerate(classes):
            s = sum(rows[lam][j] * rows[lam][l] for lam in classes)
            assert s == (centralizer_order(rho) if j == l else 0)


@pytest.mark.parametrize("n", range(1, 13))
def test_degree_is_syt_count(n):
    for lam in partitions_of(n):
        assert character(lam)[(1,) * n] == syt_count(lam)


@pytest.mark.parametrize("n", range(1, 11))
def test_conjugation_twists_by_sign(n):
    for lam in partitions_of(n):
        chi, chi_conj = character(lam), character(conjugate(lam))
        for rho in partitions_of(n):
            assert chi_conj[rho] == class_sign(rho) * chi[rho]


@pytest.mark.parametrize("b", range(1, 7))
def test_mn_matches_trace_oracle(b):
    for lam in partitions_of(b):
        assert specht_character(lam) == character(lam)


@pytest.mark.parametrize("n", range(1, 9))
def test_inner_product_orthonormal(n):
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            assert inner_product(character(lam), character(mu)) == (1 if lam == mu else 0)


def test_inner_product_trivial_and_errors():
    trivial = {rho: 1 for rho in partitions_of(4)}
    assert inner_product(trivial, trivial) == 1
    assert isinstance(inner_product(trivial, trivial), Fraction)
    with pytest.raises(ValueError):
        inner_product(trivial, {rho: 1 for rho in partitions_of(3)})
    with pytest.raises(ValueError):
        inner_product({(4,): 1}, trivial)


def test_decompose_class_function():
    reg = decompose_class_function(regular_character(3))
    assert reg.coeffs == {(3,): 1, (2, 1): 2, (1, 1, 1): 1}
    assert decompose_class_function(character((2, 1))).coeffs == {(2, 1): 1}
    points = {(1, 1, 1): 3, (2, 1): 1, (3,): 0}
    assert decompose_class_function(points).coeffs == {(3,): 1, (2, 1): 1}


def test_decompose_virtual_and_non_integral():
    virtual = {rho: character((3,))[rho] - character((2, 1))[rho] for rho in partitions_of(3)}
    dec = decompose_class_function(virtual)
    assert dec.coeffs == {(3,): 1, (2, 1): -1}
    assert not dec.is_module
    with pytest.raises(ValueError):
        decompose_class_function({(1, 1, 1): 1, (2, 1): 0, (3,): 0})


def test_decompose_bipartite_psi_examples():
    psi_trivial = {((1, 1), (1, 1)): 2, ((2,), (2,)): 2, ((2,), (1, 1)): 0, ((1, 1), (2,)): 0}
    assert decompose_bipartite(psi_trivial).coeffs == {((2,), (2,)): 1, ((1, 1), (1, 1)): 1}
    psi_sign = {((1, 1), (1, 1)): 2, ((2,), (2,)): -2, ((2,), (1, 1)): 0, ((1, 1), (2,)): 0}
    assert decompose_bipartite(psi_sign).coeffs == {((2,), (1, 1)): 1, ((1, 1), (2,)): 1}


@pytest.mark.parametrize("k,m", [(2, 3), (3, 3), (1, 4), (4, 2)])
def test_decompose_bipartite_products(k, m):
    for mu in partitions_of(k):
        for lam in partitions_of(m):
            dec = decompose_bipartite(product_character(mu, lam))
            assert dec.coeffs == {(mu, lam): 1}
