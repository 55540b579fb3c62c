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

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fermiswap {

/**
 * Quadratic-plus-density fermionic Hamiltonian
 *
 *   H = sum_pq T_pq a+_p a_q  +  sum_p U_p n_p  +  sum_{p != q} V_pq n_p n_q
 *
 * with real symmetric T, real V (symmetric, zero diagonal) and real U.
 * Mode p lives on qubit p of a linear chain; under the Jordan-Wigner
 * convention used throughout, bit p of a basis-state index is the occupation
 * of mode p (qubit 0 = least significant bit) and annihilation operators
 * carry a Z string over qubits 0..p-1.
 */
struct FermionHamiltonian {
    int n_modes = 0;
    Eigen::MatrixXd one_body;     // T
    Eigen::VectorXd potential;    // U
    Eigen::MatrixXd interaction;  // V

    // Unordered-pair coefficients consumed by gate synthesis.
    double hopping(int p, int q) const { return one_body(p, q); }
    double pair_interaction(int p, int q) const { return interaction(p, q) + interaction(q, p); }
};

/// One Pauli string: ops[q] in {'I','X','Y','Z'} for qubit q.
struct PauliTerm {
    std::string ops;
    double coefficient = 0.0;
};

/// Qubit image of a FermionHamiltonian. Terms are canonical: sorted by
/// string, no duplicates, no all-identity entry (that lives in
/// constant_offset).
struct PauliHamiltonian {
    int n_qubits = 0;
    std::vector<PauliTerm> terms;
    double constant_offset = 0.0;
};

/**
 * A 2D Hubbard lattice mapped onto a linear chain of 2*rows*cols
 * spin-orbitals with the snake ordering that keeps both spin-orbitals of
 * every site chain-adjacent.
 *
 * Spin-orbital labels are 2*site + spin with site = r*cols + c (row major)
 * and spin 0 = up, 1 = down. chain_order[position] = label. Term lists are
 * kept in chain-mode indices (the indexing of the emitted Hamiltonian).
 */
struct HubbardInstance {
    int rows = 0, cols = 0;
    double t_hop = 0.0, u_int = 0.0;
    std::vector<int> chain_order;                  // position -> spin-orbital label
    std::vector<std::pair<int, int>> hop_edges;    // chain-mode pairs, one per (edge, spin)
    std::vector<std::pair<int, int>> onsite_pairs; // chain-mode pairs, adjacent by construction

    int n_modes() const { return 2 * rows * cols; }
    int position_of(int label) const;
};

/// Validates and symmetrizes the coefficient tables. Throws
/// std::invalid_argument on dimension mismatch, non-finite entries, or
/// symmetry violations beyond 1e-12.
FermionHamiltonian build_hamiltonian(const Eigen::MatrixXd& t, const Eigen::VectorXd& u,
                                     const Eigen::MatrixXd& v);

/// Jordan-Wigner image of h under n_p = (1 - Z_p)/2.
PauliHamiltonian jordan_wigner(const FermionHamiltonian& h);

/// Builds the snake-ordered lattice instance. Throws on a zero-sized lattice.
HubbardInstance hubbard_2d(int rows, int cols, double t_hop, double u_int);

/// Coefficient tables of the instance in chain-mode indexing: T carries
/// -t_hop on hop edges, V splits u_int across both symmetric entries of each
/// onsite pair, U = 0.
FermionHamiltonian hubbard_to_hamiltonian(const HubbardInstance& inst);

/// Deterministic test-instance generator; entries in [-1, 1].
FermionHamiltonian random_hamiltonian(int n, std::uint64_t seed);

}  // namespace fermiswap
