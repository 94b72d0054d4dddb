import json
from math import factorial

import pytest

from genfoulkes import foulkes
from genfoulkes.characters import character, decompose_bipartite
from genfoulkes.foulkes import (
    FoulkesSpec,
    check_foulkes_conjecture,
    count_P_lambda,
    foulkes_decomposition,
    foulkes_dimension,
    kronecker,
    kronecker_table,
    u_character_closed_form,
    u_decomposition,
    v_dimension,
)
from genfoulkes.oracle import count_P_lambda_brute
from genfoulkes.partitions import centralizer_order, conjugate, omega_k, partitions_of
from genfoulkes.symfun import restrict
from genfoulkes.tableaux import syt_count

SMALL = [(a, b) for a in range(1, 13) for b in range(1, 13) if a * b <= 12]


def test_spec_validation():
    spec = FoulkesSpec(3, 2, [1, 1])
    assert spec.nu == (1, 1) and spec.n == 6
    with pytest.raises(ValueError):
        FoulkesSpec(2, 3, (2,))
    with pytest.raises(ValueError):
        FoulkesSpec(0, 1, (1,))


def test_F_3_2():
    dec = foulkes_decomposition((3,), 2)
    assert dec.coeffs == {(6,): 1, (4, 2): 1, (2, 2, 2): 1}
    assert dec.dimension() == 15 == foulkes_dimension((3,), 2)


@pytest.mark.parametrize("b", range(1, 6))
def test_a_equals_one(b):
    for nu in partitions_of(b):
        assert foulkes_decomposition(nu, 1).coeffs == {nu: 1}


def test_weight_mismatch_rejected():
    with pytest.raises(ValueError):
        foulkes._check_nu((3,), 2)


def test_psi_examples():
    psi = u_character_closed_form((2,))
    assert psi[(2,), (2,)] == 2
    assert psi[(2,), (1, 1)] == 0
    for b in range(1, 6):
        for nu in partitions_of(b):
            psi = u_character_closed_form(nu)
            e = (1,) * b
            assert psi[e, e] == factorial(b) * syt_count(nu)


def test_kronecker_examples():
    assert kronecker((2, 1), (2, 1), (2, 1)) == 1
    assert kronecker((3,), (2, 1), (2, 1)) == 1
    assert kronecker((3,), (3,), (2, 1)) == 0
    with pytest.raises(ValueError):
        kronecker((2,), (2, 1), (2, 1))


@pytest.mark.parametrize("b", range(1, 9))
def test_kronecker_trivial_and_sign_rows(b):
    for lam in partitions_of(b):
        assert kronecker(lam, lam, (b,)) == 1
        assert kronecker(conjugate(lam), lam, (1,) * b) == 1


def _kronecker_brute(mu, lam, nu):
    b = sum(nu)
    f, g, h = character(mu), character(lam), character(nu)
    total = sum(f[r] * g[r] * h[r] * factorial(b) // centralizer_order(r) for r in partitions_of(b))
    assert total % factorial(b) == 0
    return total // factorial(b)


@pytest.mark.parametrize("b", range(1, 6))
def test_kronecker_matches_scalar_sum(b):
    for (mu, lam, nu), c in kronecker_table(b).items():
        assert c == _kronecker_brute(mu, lam, nu)


@pytest.mark.parametrize("b", range(1, 8))
def test_kronecker_symmetries(b):
    table = kronecker_table(b)
    for (mu, lam, nu), c in table.items():
        assert c >= 0
        for perm in ((lam, mu, nu), (nu, lam, mu), (mu, nu, lam), (lam, nu, mu), (nu, mu, lam)):
            assert table[perm] == c
        assert table[conjugate(mu), conjugate(lam), nu] == c
        assert table[conjugate(mu), lam, conjugate(nu)] == c


def test_u_decomposition_examples():
    assert u_decomposition((2,), 2).coeffs == {((2,), (2,)): 1, ((1, 1), (1, 1)): 1}
    assert u_decomposition((1, 1), 2).coeffs == {((2,), (1, 1)): 1, ((1, 1), (2,)): 1}
    assert u_decomposition((2,), 3).coeffs == {((2,), (4,)): 1, ((2,), (2, 2)): 1, ((1, 1), (3, 1)): 1}
    with pytest.raises(ValueError):
        u_decomposition((2,), 1)


@pytest.mark.parametrize("b", range(1, 7))
def test_u_dimension_is_psi_at_identity(b):
    for nu in partitions_of(b):
        assert u_decomposition(nu, 2).dimension() == factorial(b) * syt_count(nu)


@pytest.mark.parametrize("b", range(1, 6))
def test_psi_decomposition_is_kronecker_route(b):
    for nu in partitions_of(b):
        assert decompose_bipartite(u_character_closed_form(nu)) == u_decomposition(nu, 2)


def test_count_P_lambda_examples():
    assert count_P_lambda(2, 2, 2, (2,)) == 1
    assert count_P_lambda(2, 2, 2, (1, 1)) == 2
    for b in range(1, 7):
        assert count_P_lambda(2, b, b, (1,) * b) == factorial(b)
    with pytest.raises(ValueError):
        count_P_lambda(2, 2, 2, (3,))
    with pytest.raises(ValueError):
        count_P_lambda(2, 2, 2, (1,))


@pytest.mark.parametrize("a,b", SMALL)
def test_count_P_lambda_closed_matches_enumeration(a, b):
    for k in range(1, a * b):
        for lam in omega_k(a, b, k):
            assert count_P_lambda(a, b, k, lam) == count_P_lambda_brute(a, b, k, lam), (a, b, k, lam)


def test_v_dimension():
    assert v_dimension((2,), 2, 2, (2,)) == 1
    for b in range(1, 6):
        assert v_dimension((b,), 2, b, (1,) * b) == factorial(b)


@pytest.mark.parametrize("a,b", [(a, b) for a in (1, 2, 3) for b in (1, 2, 3, 4)])
def test_eq1_all_cuts(a, b):
    for nu in partitions_of(b):
        for k in range(1, a * b):
            report = foulkes.verify_eq1(nu, a, k)
            assert report.ok, report.details


@pytest.mark.parametrize("b", range(2, 5))
def test_theorem1_a2(b):
    for nu in partitions_of(b):
        report = foulkes.verify_theorem1(nu, 2)
        assert report.ok, report.details
        paths = [d["path"] for d in report.details if "path" in d]
        assert paths == ["kronecker+plethysm", "closed-form character", "oracle trace"]


def test_theorem1_a3():
    for b in (2, 3):
        for nu in partitions_of(b):
            assert foulkes.verify_theorem1(nu, 3).ok
    report = foulkes.verify_theorem1((2, 2), 3)
    assert report.ok
    assert any(d.get("skipped") for d in report.details)


def test_theorem1_reports_mismatch(monkeypatch):
    good = foulkes.u_decomposition((2,), 2)
    monkeypatch.setattr(foulkes, "u_decomposition", lambda nu, a: good + good)
    report = foulkes.verify_theorem1((2,), 2, use_oracle=False)
    assert report.status == "mismatch"
    json.dumps(report.to_json())


@pytest.mark.parametrize("b", range(1, 6))
def test_thrall_b(b):
    assert foulkes.verify_thrall_b(b).ok


@pytest.mark.parametrize("a", range(2, 6))
def test_thrall_a(a):
    report = foulkes.verify_thrall_a(a)
    assert report.ok
    dec = foulkes_decomposition((2,), a)
    assert all(len(lam) == 1 or lam[1] % 2 == 0 for lam in dec)
    flags = [d["display_comparison"] for d in report.details if "display_comparison" in d]
    assert flags == ["mismatch-with-paper-display, internally consistent"]


@pytest.mark.parametrize("b", range(1, 6))
def test_corollaries(b):
    assert foulkes.verify_corollaries(b).ok


def test_sign_lemma_example():
    full = restrict(foulkes_decomposition((2,), 2), 2)
    row = {mu: full[(1, 1), mu] for mu in partitions_of(2)}
    assert row == {(2,): 0, (1, 1): 1}


@pytest.mark.parametrize("a,b", [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4)])
def test_sign_lemma(a, b):
    for nu in partitions_of(b):
        assert foulkes.verify_sign_component_lemma(nu, a).ok


@pytest.mark.parametrize("a,b", SMALL)
def test_tabloid_lemma(a, b):
    assert foulkes.verify_tabloid_lemma(a, b).ok


def test_corollary6_reading_and_sweep():
    assert foulkes.corollary6_reading() == "shifted"
    for a in (1, 2):
        for b in range(1, 5):
            if (a + 1) * b > 12:
                continue
            report = foulkes.verify_corollary6(a, b)
            assert report.ok
            summary = {d["reading"]: d for d in report.details if "pairs" in d}
            assert summary["shifted"]["mismatches"] == 0
            assert summary["shifted"]["pairs"] == len(partitions_of(b)) * len(partitions_of(a * b))
    displayed = foulkes.verify_corollary6(1, 2).details
    assert any(d.get("reading") == "displayed" and d.get("mismatches") for d in displayed)


@pytest.mark.parametrize("a,b", [(2, 3), (2, 4), (2, 5), (3, 4), (3, 3), (2, 2)])
def test_foulkes_conjecture(a, b):
    report = check_foulkes_conjecture(a, b)
    assert report.ok
    if a == b:
        assert foulkes_decomposition((b,), a) == foulkes_decomposition((a,), b)


def test_foulkes_conjecture_rejects_a_gt_b():
    with pytest.raises(ValueError):
        check_foulkes_conjecture(3, 2)


def test_run_sweep_order_independent_of_workers():
    jobs = [(foulkes.verify_tabloid_lemma, (a, b)) for a, b in [(2, 2), (2, 3), (3, 2), (1, 4)]]
    serial = [r.to_json() for r in foulkes.run_sweep(jobs, 1)]
    parallel = [r.to_json() for r in foulkes.run_sweep(jobs, 3)]
    assert serial == parallel
