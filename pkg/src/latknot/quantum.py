"""Quantum states over the knot basis: move unitaries, Hamiltonians, observables.

The Hilbert space of an order has one orthonormal basis vector per knot;
group elements act by permuting basis vectors.  Every generator is an
involution, i.e. a product of disjoint transpositions, so its Hamiltonian is
block (pi/2) * (sigma_0 - sigma_1) on each transposed pair and zero on fixed
knots, giving eigenvalues {0, pi} and exp(iH) equal to the permutation matrix.

Conventions: hbar = 1 (t is time in units of hbar) and U(t) = exp(-iHt), the
Schroedinger sign; on a transposed pair
    |alpha> -> exp(-i pi t / 2) (cos(pi t / 2) |alpha> + i sin(pi t / 2) |beta>).
Measurement probabilities are <psi|P_j|psi> / <psi|psi>.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import UnknownKnot
from .lattice import LatticeKnot
from .moves import MoveId, apply
from .orbits import Basis, basis_permutation, orbit, orbit_partition

NORM_TOL = 1e-12
GROUP_TOL = 1e-9
DENSE_LIMIT = 4096


@dataclass(frozen=True)
class QuantumKnotState:
    """Normalized sparse amplitude map over a knot basis."""

    basis: Basis
    amplitudes: dict[int, complex] = field(repr=False)

    def __post_init__(self):
        cleaned = {i: complex(c) for i, c in self.amplitudes.items() if c != 0}
        norm = math.sqrt(sum(abs(c) ** 2 for c in cleaned.values()))
        if abs(norm - 1.0) > NORM_TOL:
            if norm == 0.0:
                raise ValueError("cannot normalize the zero vector")
            cleaned = {i: c / norm for i, c in cleaned.items()}
        object.__setattr__(self, "amplitudes", cleaned)

    def amplitude(self, k: LatticeKnot) -> complex:
        return self.amplitudes.get(self.basis.index(k), 0j)

    def norm(self) -> float:
        return math.sqrt(sum(abs(c) ** 2 for c in self.amplitudes.values()))

    def inner(self, other: "QuantumKnotState") -> complex:
        small, big = self.amplitudes, other.amplitudes
        if len(big) < len(small):
            return other.inner(self).conjugate()
        return sum(c.conjugate() * big[i] for i, c in small.items() if i in big)

    def fidelity(self, other: "QuantumKnotState") -> float:
        return abs(self.inner(other))

    def to_vector(self) -> np.ndarray:
        v = np.zeros(len(self.basis), dtype=complex)
        for i, c in self.amplitudes.items():
            v[i] = c
        return v


def basis_state(k: LatticeKnot, basis: Basis) -> QuantumKnotState:
    """The classical state |k> (unit amplitude on one basis knot)."""
    if k not in basis:
        raise UnknownKnot(f"knot not in the ({basis.order.ell},{basis.order.n}) basis")
    return QuantumKnotState(basis, {basis.index(k): 1.0 + 0j})


def superposition(
    pairs: Iterable[tuple[LatticeKnot, complex]], basis: Basis
) -> QuantumKnotState:
    amps: dict[int, complex] = {}
    for k, c in pairs:
        if k not in basis:
            raise UnknownKnot(f"knot not in the basis: {k}")
        i = basis.index(k)
        amps[i] = amps.get(i, 0j) + complex(c)
    return QuantumKnotState(basis, amps)


def apply_move_unitary(m: MoveId, psi: QuantumKnotState) -> QuantumKnotState:
    """Transport amplitudes along the basis permutation |K> -> |mK>."""
    basis = psi.basis
    amps = {
        basis.index(apply(m, basis.knots[i])): c for i, c in psi.amplitudes.items()
    }
    return QuantumKnotState(basis, amps)


def apply_word_unitary(
    word: Sequence[MoveId], psi: QuantumKnotState
) -> QuantumKnotState:
    for m in word:
        psi = apply_move_unitary(m, psi)
    return psi


@dataclass(frozen=True)
class Hamiltonian:
    """Pair-form generator Hamiltonian: (pi/2) sum_j (|a_j>-|b_j>)(<a_j|-<b_j|)."""

    basis: Basis
    pairs: tuple[tuple[int, int], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def partner(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for a, b in self.pairs:
            out[a], out[b] = b, a
        return out

    def dense(self) -> np.ndarray:
        h = np.zeros((self.dim, self.dim))
        for a, b in self.pairs:
            h[a, a] += math.pi / 2
            h[b, b] += math.pi / 2
            h[a, b] -= math.pi / 2
            h[b, a] -= math.pi / 2
        return h

    def permutation_matrix(self) -> np.ndarray:
        u = np.eye(self.dim)
        for a, b in self.pairs:
            u[[a, b]] = u[[b, a]]
        return u


def hamiltonian(m: MoveId, basis: Basis, verify_tol: float = 1e-10) -> Hamiltonian:
    """Hamiltonian of a generator over the basis (fixed knots excluded).

    Verifies exp(iH) against the generator's permutation matrix via an
    eigendecomposition whenever the basis is small enough to hold densely.
    """
    perm = basis_permutation(basis, m)
    for i, j in enumerate(perm):
        if perm[j] != i:
            raise ValueError(f"{m} does not act as an involution on the basis")
    pairs = tuple((i, j) for i, j in enumerate(perm) if i < j)
    ham = Hamiltonian(basis, pairs)
    if len(basis) <= DENSE_LIMIT:
        h = ham.dense()
        evals, vecs = np.linalg.eigh(h)
        exp_ih = (vecs * np.exp(1j * evals)) @ vecs.conj().T
        target = ham.permutation_matrix()
        err = np.max(np.abs(exp_ih - target))
        if err > verify_tol:
            raise AssertionError(
                f"exp(iH) deviates from the permutation of {m} by {err:.3e}"
            )
    return ham


def evolve(psi: QuantumKnotState, m: MoveId, t: float) -> QuantumKnotState:
    """Closed-form U(t) = exp(-iHt) for the generator's Hamiltonian.

    Fixed knots are untouched; each transposed pair rotates with the global
    phase exp(-i pi t / 2).
    """
    perm = basis_permutation(psi.basis, m)
    partner = {i: j for i, j in enumerate(perm) if i != j}
    phase = cmath.exp(-1j * math.pi * t / 2)
    c, s = math.cos(math.pi * t / 2), math.sin(math.pi * t / 2)
    amps: dict[int, complex] = {}
    for i, amp in psi.amplitudes.items():
        j = partner.get(i)
        if j is None:
            amps[i] = amps.get(i, 0j) + amp
        else:
            amps[i] = amps.get(i, 0j) + amp * phase * c
            amps[j] = amps.get(j, 0j) + amp * phase * 1j * s
    return QuantumKnotState(psi.basis, amps)


@dataclass(frozen=True)
class Observable:
    """Hermitian operator over the basis, diagonal or dense.

    The spectral decomposition groups eigenvalues within GROUP_TOL; diagonal
    observables carry projectors as index tuples, dense ones as matrices.
    """

    basis: Basis
    values: tuple[float, ...] | None = None
    matrix: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        if (self.values is None) == (self.matrix is None):
            raise ValueError("exactly one of values/matrix must be given")
        if self.values is not None:
            if len(self.values) != len(self.basis):
                raise ValueError("diagonal length must match the basis")
            object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        else:
            mat = np.asarray(self.matrix, dtype=complex)
            if mat.shape != (len(self.basis),) * 2:
                raise ValueError("matrix shape must match the basis")
            if len(self.basis) > DENSE_LIMIT:
                raise ValueError(f"dense observables supported up to {DENSE_LIMIT}")
            if not np.array_equal(mat, mat.conj().T):
                raise ValueError("observable must be Hermitian")
            object.__setattr__(self, "matrix", mat)

    @property
    def diagonal(self) -> bool:
        return self.values is not None

    def spectral(self):
        """List of (eigenvalue, projector); projectors are index tuples when
        diagonal and dense matrices otherwise."""
        if self.diagonal:
            groups: list[tuple[float, list[int]]] = []
            for i, v in sorted(enumerate(self.values), key=lambda t: (t[1], t[0])):
                if groups and abs(v - groups[-1][0]) <= GROUP_TOL:
                    groups[-1][1].append(i)
                else:
                    groups.append((v, [i]))
            return [(lam, tuple(idx)) for lam, idx in groups]
        evals, vecs = np.linalg.eigh(self.matrix)
        groups = []
        for pos, lam in enumerate(evals):
            if groups and abs(lam - groups[-1][0]) <= GROUP_TOL:
                groups[-1][1].append(pos)
            else:
                groups.append((lam, [pos]))
        out = []
        for lam, positions in groups:
            v = vecs[:, positions]
            out.append((float(lam), v @ v.conj().T))
        return out

    def expectation(self, psi: QuantumKnotState) -> float:
        if self.diagonal:
            return sum(
                abs(c) ** 2 * self.values[i] for i, c in psi.amplitudes.items()
            )
        vec = psi.to_vector()
        return float(np.real(vec.conj() @ self.matrix @ vec))


def invariant_observable(
    f: Callable[[LatticeKnot], float], basis: Basis
) -> Observable:
    """Diagonal observable sum_K f(K) |K><K| from any real knot map."""
    return Observable(basis, values=tuple(float(f(k)) for k in basis.knots))


def orbit_projector(
    k: LatticeKnot,
    gens: Sequence[MoveId],
    basis: Basis,
    limit: int = 10**6,
) -> Observable:
    """Projector onto the span of the knot's orbit (eigenvalues 1 and 0)."""
    if k not in basis:
        raise UnknownKnot("seed is not a basis element")
    orb = orbit(k, gens, limit=limit)
    values = [0.0] * len(basis)
    for member in orb.members:
        values[basis.index(member)] = 1.0
    return Observable(basis, values=tuple(values))


def measure_distribution(
    psi: QuantumKnotState, omega: Observable
) -> dict[float, float]:
    """Probability of each spectral value: <psi|P_j|psi> / <psi|psi>."""
    norm_sq = sum(abs(c) ** 2 for c in psi.amplitudes.values())
    out: dict[float, float] = {}
    if omega.diagonal:
        for lam, idx in omega.spectral():
            mass = sum(abs(psi.amplitudes.get(i, 0j)) ** 2 for i in idx)
            out[lam] = mass / norm_sq
        return out
    vec = psi.to_vector()
    for lam, proj in omega.spectral():
        out[lam] = float(np.real(vec.conj() @ proj @ vec)) / norm_sq
    return out


def is_invariant(
    omega: Observable, gens: Sequence[MoveId], tol: float = 1e-12
):
    """Check U Omega U^-1 = Omega for every generator.

    Diagonal observables are checked exactly: the value map must be constant
    on every transposition of every generator.  Dense ones use a norm bound.
    Returns (True, None) or (False, (generator, (knot, image_knot))).
    """
    basis = omega.basis
    for g in gens:
        perm = basis_permutation(basis, g)
        if omega.diagonal:
            for i, j in enumerate(perm):
                if i < j and omega.values[i] != omega.values[j]:
                    return False, (g, (basis.knots[i], basis.knots[j]))
        else:
            u = np.eye(len(basis))[:, perm]  # column i of U is e_{perm[i]}
            diff = np.abs(u @ omega.matrix @ u.T - omega.matrix)
            if np.max(diff) > tol:
                i, j = np.unravel_index(int(np.argmax(diff)), diff.shape)
                return False, (g, (basis.knots[int(i)], basis.knots[int(j)]))
    return True, None


def symmetrize_diagonal(
    f: Callable[[LatticeKnot], float],
    gens: Sequence[MoveId],
    basis: Basis,
) -> Observable:
    """Average a diagonal value map over each orbit; always invariant."""
    values = [float(f(k)) for k in basis.knots]
    out = list(values)
    for block in orbit_partition(basis, gens):
        mean = math.fsum(values[i] for i in block) / len(block)
        for i in block:
            out[i] = mean
    return Observable(basis, values=tuple(out))
