// Copyright 2026 The fermiswap developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "circuit.hpp"
#include "givens.hpp"
#include "hamiltonian.hpp"
#include "swap_network.hpp"

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace fermiswap {

/// Dense verification state. Bit p of an amplitude index is the occupation
/// of qubit p; qubit 0 is the least significant bit.
struct Statevector {
    int n_qubits = 0;
    Eigen::VectorXcd amplitudes;

    static Statevector basis_state(int n_qubits, std::uint64_t index);
    /// Modes 0..eta-1 occupied.
    static Statevector hartree_fock(int n_qubits, int eta);
    double norm() const { return amplitudes.norm(); }
};

/// Deterministic Haar-ish random state (normalized Gaussian amplitudes).
Statevector random_state(int n_qubits, std::uint64_t seed);

/// Applies layers in order; gates inside a layer touch disjoint qubits.
/// threads > 1 splits amplitude groups into contiguous chunks with no
/// shared writes, so results are bit-identical for any thread count.
Statevector apply_circuit(const Statevector& psi, const Circuit& c, int threads = 1);

/// Ordered product of embedded gate matrices; capped at 12 qubits.
Eigen::MatrixXcd circuit_to_dense(const Circuit& c);

/// Dense matrix of a Pauli Hamiltonian including its constant offset.
Eigen::MatrixXcd pauli_to_dense(const PauliHamiltonian& ph);

/// exp(-i H t) through a Hermitian eigendecomposition of the dense
/// Jordan-Wigner image (constant offset included). Capped at 12 qubits.
Eigen::MatrixXcd exact_evolution(const FermionHamiltonian& h, double t);

/**
 * Ordered product of exact per-term exponentials in exactly the servicing
 * order of the schedule: the single-mode potential terms first, then one
 * exp(-i t (T_pq hop_pq + (V_pq+V_qp) n_p n_q)) per service. order 2
 * mirrors the sequence symmetrically with the final layer's services at
 * doubled time, matching synthesize_trotter_step. Capped at 10 qubits.
 */
Eigen::MatrixXcd trotter_reference(const FermionHamiltonian& h, const SwapSchedule& sched,
                                   double t, int order);

/**
 * Dense basis-rotation operator exp(sum_pq [log u]_pq a+_p a_q) with the
 * principal matrix logarithm. Inputs with an eigenvalue within 1e-8 of -1
 * are rejected (branch ambiguity) rather than silently resolved.
 * Capped at 10 qubits.
 */
Eigen::MatrixXcd thouless_unitary(const Eigen::MatrixXcd& u);

/// Jordan-Wigner image of the mode permutation sending mode m to position
/// perm[m]: basis vectors map with the parity sign of the induced
/// occupation reshuffle. Used to strip the net reordering of a swap
/// network off a circuit before comparing against a term product.
Eigen::MatrixXcd mode_permutation_unitary(const std::vector<int>& perm);

/// Inverse of a permutation vector; a schedule's final_order maps position
/// to orbital, its inverse maps orbital to final position.
std::vector<int> invert_permutation(const std::vector<int>& perm);

/// Amplitudes of the Slater determinant: det(Q restricted to columns S) on
/// each occupation subset S of size eta, zero elsewhere. Capped at 16
/// qubits.
Statevector slater_amplitudes(const SlaterDeterminant& d);

/// Frobenius distance, optionally minimized over a global phase
/// (gamma = arg tr(B+ A)).
double operator_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, bool phase_aligned);

}  // namespace fermiswap
