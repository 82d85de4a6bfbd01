import numpy as np
import pytest

import lounesto


def test_version():
    assert lounesto.__version__ == "0.1.0"


def test_clifford_relation():
    eta = np.diag([1.0, -1.0, -1.0, -1.0])
    for mu in range(4):
        for nu in range(4):
            anti = lounesto.gamma(mu) @ lounesto.gamma(nu) + lounesto.gamma(nu) @ lounesto.gamma(mu)
            assert np.allclose(anti, 2 * eta[mu, nu] * np.eye(4))
    assert np.allclose(lounesto.gamma5(), np.diag([1, 1, -1, -1]))


def test_classify_chiral_and_random():
    chiral = np.array([1, 0, 0, 0], dtype=complex)
    assert lounesto.classify(chiral) == "6"
    rng = np.random.default_rng(0)
    psi = rng.normal(size=4) + 1j * rng.normal(size=4)
    assert lounesto.classify(psi) == "1"
    ok, worst = lounesto.fpk_check(psi, "CT")
    assert ok and worst < 1e-12


def test_bilinears_dirac_dual():
    p = lounesto.Momentum.on_shell(0.0, 0.0, 0.0, 1.0)
    psi = np.array([1, 0, 1, 0], dtype=complex)
    b = lounesto.bilinears(psi, "1", p)
    assert abs(b["sigma"] - 2) < 1e-12
    assert set(b["S"]) == {"01", "02", "03", "12", "13", "23"}


def test_relation_table_signs():
    t = lounesto.relation_table()
    assert t[1][2] == "-CP"
    assert t[3][3] == "-1"


def test_spin_sum_dirac():
    p = lounesto.Momentum.on_shell(0.3, -0.2, 0.5, 1.0)
    s = lounesto.spin_sum("regular", "1", p)
    assert np.allclose(s, lounesto.slash(p) + np.eye(4))


def test_eta_dimensions():
    assert len(lounesto.derive_eta()) == 2
    assert len(lounesto.derive_eta(parity=True)) == 1


def test_table_v_regular_identity():
    t = lounesto.table_v()
    assert t[0][0] == "✓"


def test_operator_labels():
    m, antilinear = lounesto.operator_matrix("C")
    assert antilinear
    assert m.shape == (4, 4)
    _, antilinear = lounesto.operator_matrix("CT")
    assert not antilinear
    with pytest.raises(ValueError):
        lounesto.operator_matrix("nonsense")
    assert len(lounesto.admissible_duals()) > 10
