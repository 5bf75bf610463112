import itertools
import warnings

import numpy as np
import pytest

from fesops import states
from fesops.exceptions import (
    AllZeroError,
    DimensionMismatchError,
    NotFesStateError,
    NTooLargeError,
    OddQError,
    QOutOfRangeError,
)
from helpers import brute_psi_pq

RNG = np.random.default_rng(99)


def random_fes_vector(n: int) -> states.FesVector:
    amps = RNG.standard_normal(states.fes_dim(n)) + 1j * RNG.standard_normal(states.fes_dim(n))
    return states.FesVector(n, amps / np.linalg.norm(amps))


def ghz_statevector(n: int) -> states.StateVector:
    amps = np.zeros(2**n, dtype=complex)
    amps[0] = amps[-1] = 1 / np.sqrt(2)
    return states.StateVector(n, amps)


W3 = states.StateVector(3, np.array([0, 1, 1, 0, 1, 0, 0, 0]) / np.sqrt(3))


class TestPsiPq:
    def test_all_plus_state(self):
        got = states.to_computational(states.psi_pq(3, 0))
        assert np.allclose(got.amps, 1 / (2 * np.sqrt(2)), atol=1e-15)

    def test_three_qubit_entangled_state_matches_brute_sum(self):
        got = states.to_computational(states.psi_pq(3, 2))
        assert np.allclose(got.amps, brute_psi_pq(3, 2), atol=1e-14)

    def test_two_qubit_all_minus(self):
        got = states.to_computational(states.psi_pq(2, 2))
        assert np.allclose(got.amps, np.array([1, -1, -1, 1]) / 2, atol=1e-15)

    def test_four_qubit_all_minus_exists(self):
        vec = states.psi_pq(4, 4)
        assert vec.amps[-1] == 1.0 and vec.norm() == 1.0

    @pytest.mark.parametrize("n,q", [(3, 1), (5, 3)])
    def test_odd_q_rejected(self, n, q):
        with pytest.raises(OddQError):
            states.psi_pq(n, q)

    @pytest.mark.parametrize("n,q", [(3, 4), (3, -2), (4, 6)])
    def test_out_of_range_q_rejected(self, n, q):
        with pytest.raises(QOutOfRangeError):
            states.psi_pq(n, q)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
    def test_matches_brute_construction(self, n):
        for q in range(0, n + 1, 2):
            got = states.to_computational(states.psi_pq(n, q))
            assert np.allclose(got.amps, brute_psi_pq(n, q), atol=1e-13)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_eigenbasis_orthonormal_in_computational_expansion(self, n):
        expanded = [states.to_computational(states.psi_pq(n, q)) for q in range(0, n + 1, 2)]
        for i, a in enumerate(expanded):
            for j, b in enumerate(expanded):
                expected = 1.0 if i == j else 0.0
                assert abs(states.fidelity(a, b) - expected) <= 1e-14


class TestConversions:
    def test_cap_enforced(self):
        with pytest.raises(NTooLargeError):
            states.to_computational(random_fes_vector(12), cap=10)

    def test_linearity_over_amplitudes(self):
        a, b = random_fes_vector(5), random_fes_vector(5)
        mix = states.FesVector(5, (a.amps + b.amps) / np.linalg.norm(a.amps + b.amps))
        direct = states.to_computational(mix).amps
        combo = states.to_computational(a).amps + states.to_computational(b).amps
        combo /= np.linalg.norm(combo)
        assert np.allclose(direct, combo, atol=1e-13)

    def test_ghz3_projection(self):
        got = states.from_computational(ghz_statevector(3))
        assert got.amps[0] == pytest.approx(0.5, abs=1e-14)
        assert got.amps[1] == pytest.approx(np.sqrt(3) / 2, abs=1e-14)

    def test_w_state_is_not_fes(self):
        with pytest.raises(NotFesStateError):
            states.from_computational(W3)

    def test_unit_vector_round_trip_is_exact(self):
        back = states.from_computational(states.to_computational(states.psi_pq(5, 4)))
        expected = np.zeros(3)
        expected[2] = 1.0
        assert np.max(np.abs(back.amps - expected)) <= 1e-14

    @pytest.mark.parametrize("n", range(2, 13))
    def test_round_trip_random_states(self, n):
        s = random_fes_vector(n)
        back = states.from_computational(states.to_computational(s))
        assert np.max(np.abs(back.amps - s.amps)) <= 1e-12

    @pytest.mark.parametrize("n", range(2, 9))
    def test_expansions_are_flip_and_exchange_symmetric(self, n):
        v = states.to_computational(random_fes_vector(n))
        report = states.check_symmetries(v, tol=1e-12)
        assert report.exchange_symmetric and report.flip_symmetric

    def test_unnormalized_input_rejected(self):
        v = states.StateVector(2, np.array([1.0, 0, 0, 1.0]), normalized=False)
        with pytest.raises(ValueError):
            states.from_computational(v)


class TestFamilies:
    def test_gamma_at_pi_6_is_ghz(self):
        assert states.fidelity(states.gamma(np.pi / 6), states.ghz(3)) == pytest.approx(1.0)

    def test_gamma_boundary_warns_and_reaches_all_plus(self):
        with pytest.warns(states.FamilyDomainWarning):
            edge = states.gamma(np.pi / 2)
        assert states.fidelity(edge, states.psi_pq(3, 0)) == pytest.approx(1.0, abs=1e-15)

    def test_gamma_balanced_angle(self):
        assert np.allclose(states.gamma(np.pi / 4).amps, np.sqrt(2) / 2, atol=1e-15)

    def test_theta_family_at_pi_6_is_ghz4(self):
        assert states.fidelity(states.theta_family(np.pi / 6), states.ghz(4)) >= 1 - 1e-12

    def test_theta_family_upper_boundary_is_in_domain(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            edge = states.theta_family(np.pi / 2)
        assert np.allclose(edge.amps, [1 / np.sqrt(2), 0.0, 1 / np.sqrt(2)], atol=1e-15)

    def test_phi_family_upper_boundary(self):
        edge = states.phi_family(np.pi / 2)
        assert np.allclose(edge.amps, [1 / np.sqrt(2), 0.0, 1 / np.sqrt(2)], atol=1e-15)

    def test_phi_family_small_angle_hugs_the_entangled_state(self):
        close = states.phi_family(np.pi / 100)
        assert states.fidelity(close, states.psi_pq(5, 2)) == pytest.approx(
            np.cos(np.pi / 100) ** 2
        )

    @pytest.mark.parametrize("theta", np.linspace(0.05, np.pi / 2, 7))
    def test_families_stay_normalized(self, theta):
        assert states.phi_family(theta).norm() == pytest.approx(1.0, abs=1e-15)
        assert states.theta_family(theta).norm() == pytest.approx(1.0, abs=1e-15)


class TestGhz:
    def test_three_qubits(self):
        assert np.allclose(states.ghz(3).amps, [0.5, np.sqrt(3) / 2], atol=1e-15)

    def test_four_qubits_equals_theta_family(self):
        assert np.allclose(states.ghz(4).amps, states.theta_family(np.pi / 6).amps, atol=1e-15)

    def test_two_qubits(self):
        assert np.allclose(states.ghz(2).amps, [1 / np.sqrt(2), 1 / np.sqrt(2)], atol=1e-15)

    @pytest.mark.parametrize("n", range(2, 11))
    def test_amplitude_closed_form_matches_projection(self, n):
        projected = states.from_computational(ghz_statevector(n))
        assert np.max(np.abs(states.ghz(n).amps - projected.amps)) <= 1e-12

    def test_cap(self):
        with pytest.raises(NTooLargeError):
            states.ghz(25)


class TestGAbcd:
    def test_identifies_with_four_qubit_eigenstate(self):
        raw = states.g_abcd(1, -1, 0, 2)
        assert raw.norm() == pytest.approx(np.sqrt(6), abs=1e-12)
        fid = states.fidelity(states.normalize(raw), states.to_computational(states.psi_pq(4, 2)))
        assert fid >= 1 - 1e-12

    def test_ghz4_parameters(self):
        raw = states.g_abcd(1, 0, 0, 1)
        expected = np.zeros(16)
        expected[0] = expected[15] = 1.0
        assert np.allclose(raw.amps, expected, atol=1e-15)

    def test_symmetric_slice_is_fes(self):
        # the slice b = a - d, c = 0 stays inside the FES subspace
        rng = np.random.default_rng(7)
        for _ in range(100):
            a = complex(rng.standard_normal(), rng.standard_normal())
            d = complex(rng.standard_normal(), rng.standard_normal())
            raw = states.g_abcd(a, a - d, 0, d)
            if raw.norm() < 1e-6:
                continue
            states.from_computational(states.normalize(raw), tol=1e-10)

    def test_generic_parameters_are_not_fes(self):
        # b != a - d breaks exchange symmetry between the weight-2 slots
        raw = states.normalize(states.g_abcd(2, 1, 0, 2))
        with pytest.raises(NotFesStateError):
            states.from_computational(raw)

    def test_all_zero_rejected(self):
        with pytest.raises(AllZeroError):
            states.g_abcd(0, 0, 0, 0)


class TestSymmetries:
    def test_ghz_has_both(self):
        report = states.check_symmetries(states.to_computational(states.ghz(3)))
        assert report == (True, True)

    def test_w_state_is_exchange_only(self):
        report = states.check_symmetries(W3)
        assert report.exchange_symmetric and not report.flip_symmetric

    def test_product_basis_state_has_neither(self):
        v = states.StateVector(2, np.array([0, 1.0, 0, 0]))
        assert states.check_symmetries(v) == (False, False)


class TestFidelity:
    def test_self_overlap(self):
        s = random_fes_vector(4)
        assert states.fidelity(s, s) == pytest.approx(1.0, abs=1e-14)

    def test_orthogonal_eigenstates(self):
        a = states.to_computational(states.psi_pq(4, 0))
        b = states.to_computational(states.psi_pq(4, 4))
        assert states.fidelity(a, b) <= 1e-15

    def test_ghz_overlap_with_all_plus(self):
        assert states.fidelity(states.ghz(3), states.psi_pq(3, 0)) == pytest.approx(0.25)

    def test_mismatched_inputs_rejected(self):
        with pytest.raises(DimensionMismatchError):
            states.fidelity(states.ghz(3), states.ghz(4))
        with pytest.raises(DimensionMismatchError):
            states.fidelity(states.ghz(3), states.to_computational(states.ghz(3)))


class TestTextFormat:
    @pytest.mark.parametrize("basis", ["fes", "comp"])
    def test_round_trip(self, tmp_path, basis):
        s = random_fes_vector(5)
        state = s if basis == "fes" else states.to_computational(s)
        path = tmp_path / "state.txt"
        states.save_state(state, path)
        back = states.load_state(path)
        assert type(back) is type(state)
        assert back.n == state.n
        assert np.array_equal(back.amps, state.amps)

    def test_header_format(self, tmp_path):
        path = tmp_path / "state.txt"
        states.save_state(states.ghz(3), path)
        first, *rest = path.read_text().splitlines()
        assert first == "n=3 basis=fes"
        assert len(rest) == 2 and all("," in line for line in rest)

    def test_bad_header_rejected(self):
        with pytest.raises(ValueError):
            states.loads_state("qubits=3\n0,0\n")

    def test_wrong_amplitude_count_rejected(self):
        with pytest.raises(ValueError):
            states.loads_state("n=3 basis=fes\n1,0\n")
