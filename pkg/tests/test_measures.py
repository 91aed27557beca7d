import numpy as np
import pytest

from qcorr.linalg import (
    DensityMatrix,
    InvalidStateError,
    UnsupportedDimensionError,
    as_rng,
    random_density_matrix,
    tensor_product,
)
from qcorr.measures import (
    JointDistribution,
    Povm,
    ProjectiveBasis,
    classical_correlation_a,
    classical_mutual_info,
    conditional_states_b,
    discord_a,
    discord_b,
    full_report,
    i_eigenbasis,
    i_eigenbasis_scan,
    joint_distribution,
    maximize_mi_povm,
    maximize_mi_projective,
    measurement_induced_disturbance,
    quantum_mutual_info,
)
from qcorr.optimize import OptimizerConfig
from qcorr.states import bell_diagonal_state, classical_quantum_state

LIGHT = OptimizerConfig(restarts=3, max_iters=200, seed=0)

SINGLET = DensityMatrix(
    np.array([[0, 0, 0, 0], [0, 0.5, -0.5, 0], [0, -0.5, 0.5, 0], [0, 0, 0, 0]], dtype=complex),
    2,
    2,
)


def test_projective_basis_constructors_and_validation():
    assert ProjectiveBasis.computational(3).dim == 3
    assert ProjectiveBasis.fourier(4).dim == 4
    with pytest.raises(InvalidStateError):
        ProjectiveBasis(np.ones((2, 2), dtype=complex))


def test_povm_from_basis_sums_to_identity():
    povm = Povm.from_basis(ProjectiveBasis.fourier(3))
    np.testing.assert_allclose(povm.effects.sum(axis=0), np.eye(3), atol=1e-12)
    assert povm.n_outcomes == 3
    assert povm.rows is not None


def test_povm_rejects_bad_effect_sets():
    proj = np.diag([1.0, 0.0]).astype(complex)
    with pytest.raises(InvalidStateError):
        Povm(np.stack([proj, proj]))  # sums to diag(2, 0)
    neg = np.stack([np.diag([1.5, 1.0]).astype(complex), np.diag([-0.5, 0.0]).astype(complex)])
    with pytest.raises(InvalidStateError):
        Povm(neg)


def test_povm_random_rank_one_is_valid_and_seeded():
    povm = Povm.random_rank_one(3, 7, as_rng(4))
    np.testing.assert_allclose(povm.effects.sum(axis=0), np.eye(3), atol=1e-10)
    again = Povm.random_rank_one(3, 7, as_rng(4))
    np.testing.assert_allclose(povm.effects, again.effects, atol=0)


def test_joint_distribution_validation_and_marginals():
    table = np.array([[0.5, 0.0], [0.25, 0.25]])
    jd = JointDistribution(table)
    np.testing.assert_allclose(jd.marginal_a, [0.5, 0.5], atol=1e-12)
    np.testing.assert_allclose(jd.marginal_b, [0.75, 0.25], atol=1e-12)
    with pytest.raises(InvalidStateError):
        JointDistribution(np.array([[0.9, -0.1], [0.1, 0.1]]))
    with pytest.raises(InvalidStateError):
        JointDistribution(np.array([[0.4, 0.4], [0.4, 0.4]]))


def test_joint_distribution_of_singlet_in_matched_bases():
    for basis in (ProjectiveBasis.computational(2), ProjectiveBasis.fourier(2)):
        jd = joint_distribution(SINGLET, basis, basis)
        np.testing.assert_allclose(np.sort(jd.table.ravel()), [0, 0, 0.5, 0.5], atol=1e-12)
        assert classical_mutual_info(jd) == pytest.approx(1.0, abs=1e-12)


def test_joint_distribution_general_effects_match_rank_one_path():
    rho = random_density_matrix(3, 2, rng=as_rng(8))
    basis = ProjectiveBasis.fourier(3)
    rank_one = Povm.from_basis(basis)
    u = basis.vectors
    # same measurement with the rows stripped forces the general einsum path
    general = Povm(np.stack([np.outer(u[:, k], u[:, k].conj()) for k in range(3)]))
    assert general.rows is None
    bob = Povm.random_rank_one(2, 3, as_rng(9))
    t1 = joint_distribution(rho, rank_one, bob).table
    t2 = joint_distribution(rho, general, bob).table
    np.testing.assert_allclose(t1, t2, atol=1e-12)


def test_classical_mutual_info_oracles():
    assert classical_mutual_info(np.outer([0.5, 0.5], [0.2, 0.8])) == pytest.approx(0.0, abs=1e-12)
    assert classical_mutual_info(np.eye(3) / 3) == pytest.approx(np.log2(3), abs=1e-12)
    hand = np.array([[0.5, 0.0], [0.25, 0.25]])
    assert classical_mutual_info(hand) == pytest.approx(0.31127812445913294, abs=1e-12)


def test_quantum_mutual_info_oracles():
    assert quantum_mutual_info(SINGLET) == pytest.approx(2.0, abs=1e-12)
    a = random_density_matrix(2, 1, rng=as_rng(1))
    b = random_density_matrix(3, 1, rng=as_rng(2))
    prod = DensityMatrix(tensor_product(a.mat, b.mat), 2, 3)
    assert quantum_mutual_info(prod) == pytest.approx(0.0, abs=1e-12)


def test_maximize_mi_projective_hits_two_qubit_closed_form():
    rho = bell_diagonal_state([0.9, 0.0, 0.0])
    res = maximize_mi_projective(rho, LIGHT)
    h = -0.95 * np.log2(0.95) - 0.05 * np.log2(0.05)
    assert res.value == pytest.approx(1 - h, abs=1e-9)
    assert res.meas_a.n_outcomes == 2


def test_maximize_mi_projective_rejects_large_dimensions():
    big = random_density_matrix(17, 2, rng=as_rng(0))
    with pytest.raises(UnsupportedDimensionError):
        maximize_mi_projective(big, LIGHT)


def test_maximize_mi_povm_never_below_projective():
    rho = random_density_matrix(2, 2, rng=as_rng(21))
    proj = maximize_mi_projective(rho, LIGHT)
    povm = maximize_mi_povm(rho, 4, 4, LIGHT)
    assert povm.value >= proj.value - 1e-9
    assert povm.meas_a.n_outcomes == 4


def test_conditional_states_b_recovers_cq_branches():
    sigma0 = np.diag([1.0, 0.0]).astype(complex)
    sigma1 = np.array([[0.5, 0.5], [0.5, 0.5]], dtype=complex)
    rho = classical_quantum_state([0.3, 0.7], [sigma0, sigma1])
    branches = conditional_states_b(rho, ProjectiveBasis.computational(2))
    probs = [p for p, _ in branches]
    np.testing.assert_allclose(probs, [0.3, 0.7], atol=1e-12)
    np.testing.assert_allclose(branches[0][1], sigma0, atol=1e-12)
    np.testing.assert_allclose(branches[1][1], sigma1, atol=1e-12)


def test_classical_correlation_a_on_cq_state_equals_holevo_value():
    sigma0 = np.diag([1.0, 0.0]).astype(complex)
    sigma1 = np.array([[0.5, 0.5], [0.5, 0.5]], dtype=complex)
    rho = classical_quantum_state([0.5, 0.5], [sigma0, sigma1])
    res = classical_correlation_a(rho, LIGHT)
    # ensemble Holevo quantity: S(avg) - avg S, with pure branches
    avg = 0.5 * sigma0 + 0.5 * sigma1
    vals = np.linalg.eigvalsh(avg)
    chi = float(-np.sum(vals * np.log2(vals)))
    assert res.value == pytest.approx(chi, abs=1e-6)


def test_discord_vanishes_on_cq_states_and_matches_luo_form():
    sigma0 = np.diag([1.0, 0.0]).astype(complex)
    sigma1 = np.array([[0.5, 0.5], [0.5, 0.5]], dtype=complex)
    cq = classical_quantum_state([0.4, 0.6], [sigma0, sigma1])
    assert discord_a(cq, LIGHT).value <= 1e-9
    bell = bell_diagonal_state([0.3, 0.2, 0.1])
    res = discord_a(bell, LIGHT)
    assert res.value == pytest.approx(0.05068495714647758, abs=1e-7)
    assert res.classical_correlation == pytest.approx(0.06593194462450902, abs=1e-7)


def test_discord_b_mirrors_discord_a_on_symmetric_states():
    bell = bell_diagonal_state([0.3, 0.2, 0.1])
    a = discord_a(bell, LIGHT).value
    b = discord_b(bell, LIGHT).value
    assert a == pytest.approx(b, abs=1e-6)


def test_i_eigenbasis_flags_degeneracy_and_stays_below_search():
    res = i_eigenbasis(SINGLET)
    assert res.degenerate_a and res.degenerate_b
    rho = random_density_matrix(2, 3, rng=as_rng(31))
    plain = i_eigenbasis(rho)
    assert not plain.degenerate_a and not plain.degenerate_b
    best = maximize_mi_projective(rho, LIGHT)
    assert plain.value <= best.value + 1e-9


def test_i_eigenbasis_scan_exposes_degenerate_spread():
    scan = i_eigenbasis_scan(SINGLET, samples=40, seed=0)
    assert scan.shape == (40,)
    assert np.all(scan <= 1.0 + 1e-9)  # capped by the marginal entropies
    assert scan.max() - scan.min() > 0.05
    again = i_eigenbasis_scan(SINGLET, samples=40, seed=0)
    np.testing.assert_allclose(scan, again, atol=0)
    rho = random_density_matrix(2, 2, rng=as_rng(60))
    flat = i_eigenbasis_scan(rho, samples=10, seed=1)
    np.testing.assert_allclose(flat, i_eigenbasis(rho).value, atol=1e-9)


def test_measurement_induced_disturbance_nonnegative():
    for seed in range(4):
        rho = random_density_matrix(2, 2, rng=as_rng([41, seed]))
        assert measurement_induced_disturbance(rho) >= -1e-9


def test_full_report_orders_the_measure_chain():
    rho = random_density_matrix(3, 2, rng=as_rng(55))
    rep = full_report(rho, LIGHT)
    assert rep.eigenbasis_mi <= rep.mi_projective + 1e-9
    assert rep.mi_projective <= rep.classical_corr_a + 1e-9
    assert rep.mi_projective <= rep.classical_corr_b + 1e-9
    assert rep.nonclassicality >= -1e-12
    assert rep.discord_a >= -1e-12
    assert rep.disturbance >= rep.nonclassicality - 1e-9
    assert rep.heuristic
    d = rep.to_dict()
    assert d["quantum_mi"] == pytest.approx(quantum_mutual_info(rho), abs=1e-12)
    assert d["povm_outcomes_a"] is None


def test_full_report_with_povm_search():
    rho = random_density_matrix(2, 2, rng=as_rng(56))
    rep = full_report(rho, LIGHT, povm_outcomes=(4, 4))
    assert rep.mi_povm is not None
    assert rep.mi_povm >= rep.mi_projective - 1e-9
    assert rep.to_dict()["povm_outcomes_a"] == 4
