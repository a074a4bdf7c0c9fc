import cmath
import math
import random

import numpy as np
import pytest
from scipy.linalg import expm

from latknot import (
    Order,
    UnknownKnot,
    apply,
    apply_move_unitary,
    apply_word_unitary,
    basis_state,
    components,
    evolve,
    generators,
    hamiltonian,
    invariant_observable,
    is_invariant,
    length,
    measure_distribution,
    orbit_projector,
    superposition,
    symmetrize_diagonal,
    tug,
)
from latknot import fixtures as fx
from latknot.quantum import Observable


def test_basis_state(basis01, square):
    psi = basis_state(square, basis01)
    assert abs(psi.norm() - 1) < 1e-12
    assert len(psi.amplitudes) == 1
    other = basis_state(fx.square_x((0, 1)), basis01)
    assert psi.inner(other) == 0


def test_basis_state_unknown(basis01):
    with pytest.raises(UnknownKnot):
        basis_state(fx.rectangle(), basis01)


def test_move_unitary_permutes(basis01, square):
    m = tug((0, 0, 0), 1, 0)
    target = apply(m, square)
    psi = apply_move_unitary(m, basis_state(square, basis01))
    assert psi.amplitude(target) == 1.0
    again = apply_move_unitary(m, psi)
    assert again.amplitude(square) == 1.0


def test_unitary_preserves_inner_products(basis01, gens01, rng):
    a = superposition([(basis01.knots[0], 0.6), (basis01.knots[5], 0.8)], basis01)
    b = superposition([(basis01.knots[5], 1), (basis01.knots[9], 1j)], basis01)
    ip = a.inner(b)
    for _ in range(20):
        m = rng.choice(gens01)
        a, b = apply_move_unitary(m, a), apply_move_unitary(m, b)
    assert abs(a.inner(b) - ip) < 1e-12


def test_amplitude_multiset_preserved(basis01, gens01, rng):
    psi = superposition([(basis01.knots[1], 0.5), (basis01.knots[2], math.sqrt(0.75))], basis01)
    before = sorted(abs(c) for c in psi.amplitudes.values())
    word = [rng.choice(gens01) for _ in range(40)]
    after = apply_word_unitary(word, psi)
    assert sorted(abs(c) for c in after.amplitudes.values()) == pytest.approx(before)
    # hence a 1-term state can never reach a genuine 2-term superposition
    assert len(after.amplitudes) == len(psi.amplitudes)


class TestHamiltonian:
    def test_pair_blocks(self, basis01):
        g = tug((0, 0, 0), 3, 3)
        ham = hamiltonian(g, basis01)
        h = ham.dense()
        assert np.allclose(h, h.T)
        for a, b in ham.pairs:
            blk = h[np.ix_([a, b], [a, b])]
            assert np.allclose(blk, (math.pi / 2) * np.array([[1, -1], [-1, 1]]))

    def test_zero_on_fixed_knots(self, basis01):
        g = tug((0, 0, 0), 3, 3)
        ham = hamiltonian(g, basis01)
        moved = {i for p in ham.pairs for i in p}
        h = ham.dense()
        for i in range(len(basis01)):
            if i not in moved:
                assert not h[i].any()

    def test_spectrum(self, basis01):
        h = hamiltonian(tug((0, 0, 0), 3, 3), basis01).dense()
        evals = np.linalg.eigvalsh(h)
        assert all(abs(e) < 1e-10 or abs(e - math.pi) < 1e-10 for e in evals)

    def test_exp_ih_is_permutation_scipy_oracle(self, basis01, gens01):
        for g in gens01[:6] + gens01[24:27] + gens01[36:39]:
            ham = hamiltonian(g, basis01)
            u = expm(1j * ham.dense())
            assert np.max(np.abs(u - ham.permutation_matrix())) < 1e-10


class TestEvolve:
    def test_t1_fidelity(self, basis01):
        g = tug((0, 0, 0), 3, 3)
        start = fx.bent_hexagon((0, 1))
        target = apply(g, start)
        assert target != start
        res = evolve(basis_state(start, basis01), g, 1.0)
        fid = abs(res.inner(basis_state(target, basis01)))
        assert abs(fid - 1.0) < 1e-10

    def test_t0_identity(self, basis01, square):
        psi = basis_state(square, basis01)
        res = evolve(psi, tug((0, 0, 0), 3, 3), 0.0)
        assert res.amplitudes == psi.amplitudes

    def test_half_time_equal_split(self, basis01):
        g = tug((0, 0, 0), 3, 3)
        start = fx.bent_hexagon((0, 1))
        target = apply(g, start)
        half = evolve(basis_state(start, basis01), g, 0.5)
        assert abs(abs(half.amplitude(start)) ** 2 - 0.5) < 1e-10
        assert abs(abs(half.amplitude(target)) ** 2 - 0.5) < 1e-10

    def test_matches_move_unitary_up_to_phase(self, basis01, gens01, rng):
        psi = superposition([(basis01.knots[3], 1), (basis01.knots[11], 1j)], basis01)
        for _ in range(10):
            g = rng.choice(gens01)
            a = evolve(psi, g, 1.0)
            b = apply_move_unitary(g, psi)
            assert abs(abs(a.inner(b)) - 1.0) < 1e-10

    def test_closed_form_matches_dense_exponential(self, basis01):
        g = tug((0, 0, 0), 3, 3)
        psi = superposition([(basis01.knots[2], 0.8), (basis01.knots[7], 0.6)], basis01)
        for t in (0.3, 0.77, 1.5):
            ham = hamiltonian(g, basis01)
            u = expm(-1j * ham.dense() * t)
            want = u @ psi.to_vector()
            got = evolve(psi, g, t).to_vector()
            assert np.max(np.abs(want - got)) < 1e-10


class TestObservables:
    def test_orbit_projector(self, basis01, gens01, square):
        proj = orbit_projector(square, gens01, basis01)
        vals = np.array(proj.values)
        assert set(vals) <= {0.0, 1.0}
        # P^2 = P and P = P^T hold trivially for diagonal indicators
        dist = measure_distribution(basis_state(square, basis01), proj)
        assert dist[1.0] == pytest.approx(1.0)

    def test_projector_excludes_two_component_knot(self, basis01, gens01, square):
        proj = orbit_projector(square, gens01, basis01)
        psi = basis_state(fx.square_union((0, 1)), basis01)
        dist = measure_distribution(psi, proj)
        assert dist.get(1.0, 0.0) == pytest.approx(0.0)

    def test_invariant_observable_components(self, basis01):
        omega = invariant_observable(components, basis01)
        assert sorted({lam for lam, _ in omega.spectral()}) == [1.0, 2.0]

    def test_length_invariance_split(self, basis01, gens01, gens01_inext):
        omega = invariant_observable(length, basis01)
        ok, counter = is_invariant(omega, gens01)
        assert not ok
        gen, (k1, k2) = counter
        assert gen.kind.name == "TUG"
        assert length(k1) != length(k2)
        ok2, _ = is_invariant(omega, gens01_inext)
        assert ok2

    def test_constant_observable_invariant(self, basis01, gens01):
        omega = invariant_observable(lambda k: 7.0, basis01)
        ok, _ = is_invariant(omega, gens01)
        assert ok
        assert len(omega.spectral()) == 1

    def test_orbit_projector_commutes(self, basis01, gens01, square):
        proj = orbit_projector(square, gens01, basis01)
        ok, _ = is_invariant(proj, gens01)
        assert ok

    def test_dense_observable_roundtrip(self, basis01, gens01):
        # a dense multiple of the identity commutes with everything
        mat = np.eye(len(basis01)) * 2.5
        omega = Observable(basis01, matrix=mat)
        ok, _ = is_invariant(omega, gens01[:6])
        assert ok
        psi = basis_state(basis01.knots[0], basis01)
        dist = measure_distribution(psi, omega)
        assert dist[2.5] == pytest.approx(1.0)

    def test_measure_distribution_sums_to_one(self, basis01, gens01, rng):
        omega = invariant_observable(length, basis01)
        for _ in range(20):
            pairs = [(rng.choice(basis01.knots), rng.random() + 1e-3) for _ in range(3)]
            psi = superposition(pairs, basis01)
            dist = measure_distribution(psi, omega)
            assert abs(sum(dist.values()) - 1.0) < 1e-12

    def test_superposition_distribution(self, basis01, square):
        psi = superposition([(square, 1), (fx.square_union((0, 1)), 1)], basis01)
        dist = measure_distribution(psi, invariant_observable(components, basis01))
        assert dist[1.0] == pytest.approx(0.5) and dist[2.0] == pytest.approx(0.5)

    def test_one_orbit_superposition(self, basis01, gens01, square):
        psi = superposition([(square, 1), (fx.square_x((0, 1)), 1)], basis01)
        dist = measure_distribution(psi, orbit_projector(square, gens01, basis01))
        assert dist[1.0] == pytest.approx(1.0)

    def test_point_mass_on_basis_state(self, basis01, square):
        dist = measure_distribution(
            basis_state(square, basis01), invariant_observable(length, basis01)
        )
        assert dist[4.0] == pytest.approx(1.0)
        assert all(p == 0.0 for lam, p in dist.items() if lam != 4.0)

    def test_measurement_invariance_random_words(self, basis01, gens01, square, rng):
        proj = orbit_projector(square, gens01, basis01)
        psi = superposition([(square, 0.6), (basis01.knots[4], 0.8j)], basis01)
        base = measure_distribution(psi, proj)
        cur = psi
        for _ in range(100):
            cur = apply_word_unitary([rng.choice(gens01) for _ in range(2)], cur)
            d = measure_distribution(cur, proj)
            for lam, p in base.items():
                assert abs(d.get(lam, 0.0) - p) < 1e-10

    def test_symmetrize(self, basis01, gens01, gens01_inext):
        sym = symmetrize_diagonal(length, gens01, basis01)
        ok, _ = is_invariant(sym, gens01)
        assert ok
        # length is already constant on inextensible orbits
        sym2 = symmetrize_diagonal(length, gens01_inext, basis01)
        assert sym2.values == invariant_observable(length, basis01).values

    def test_symmetrize_indicator_is_orbit_projector(self, basis01, gens01, square):
        indicator = lambda k: 1.0 if k == square else 0.0
        sym = symmetrize_diagonal(indicator, gens01, basis01)
        proj = orbit_projector(square, gens01, basis01)
        support = [i for i, v in enumerate(sym.values) if v > 0]
        assert support == [i for i, v in enumerate(proj.values) if v > 0]
