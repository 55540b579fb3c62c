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

#include <Eigen/Dense>
#include <vector>

namespace fermiswap {

/**
 * Nearest-neighbor phased-Givens diagonalization plan for an n x n unitary:
 * applying the rotations layer by layer to u leaves diag(e^{i phi_p}).
 * Rotations in one layer touch disjoint row pairs; rotation (row, theta,
 * phase) mixes rows (row, row+1) as
 *
 *   row'   =  cos(theta) row - e^{i phase} sin(theta) row+1
 *   row+1' =  e^{-i phase} sin(theta) row + cos(theta) row+1.
 */
struct GivensPlan {
    struct Rotation {
        int row = 0;
        double theta = 0.0;
        double phase = 0.0;
    };

    int n = 0;
    std::vector<std::vector<Rotation>> layers;
    Eigen::VectorXd diag_phases;

    std::size_t rotation_count() const;
};

/// Slater determinant given by eta orthonormal rows of mode coefficients.
struct SlaterDeterminant {
    int eta = 0;
    int n = 0;
    Eigen::MatrixXcd coeffs;  // eta x n
};

/// Validates row orthonormality (1e-10) and shape; throws otherwise.
SlaterDeterminant make_slater(const Eigen::MatrixXcd& coeffs);

/// Phased-Givens row update on rows (p, p+1) of a copy of a.
Eigen::MatrixXcd apply_phased_givens(const Eigen::MatrixXcd& a, int p, double theta, double phase);

/// In-place variant.
void apply_phased_givens_inplace(Eigen::MatrixXcd& a, int p, double theta, double phase);

/**
 * Diagonalizes a unitary with nearest-neighbor rotations eliminating
 * sub-diagonal elements in the staircase order that packs them into at most
 * 2n-3 parallel layers (column j never starts before 2j-1 layers have
 * elapsed, 1-based). Elements already below 1e-14 produce no rotation.
 * Throws if u is not unitary within 1e-10.
 */
GivensPlan givens_decompose(const Eigen::MatrixXcd& u);

/**
 * Circuit form of a plan. invert = true emits the phase layer
 * exp(i phi_p n_p) followed by the reversed, angle-negated rotations,
 * implementing the basis-rotation operator of the decomposed u; invert =
 * false emits the forward rotations followed by exp(-i phi_p n_p),
 * implementing its inverse.
 */
Circuit plan_to_circuit(const GivensPlan& plan, bool invert);

/**
 * Prepares the Slater determinant d from the computational basis state with
 * modes 0..eta-1 occupied, using at most eta*(n-eta) nearest-neighbor
 * Givens gates. For eta > n/2 the construction eliminates on the hole
 * matrix (an orthonormal basis of the row-space complement) instead of the
 * particle matrix. Rotation count and measured rotation depth land in
 * metadata.
 */
Circuit slater_prep_circuit(const SlaterDeterminant& d);

/// Runs the two sector preparations in parallel, the down sector shifted
/// onto the second half of the chain; layers are merged index-wise so the
/// depth is the max of the sector depths. The explicit chain length must
/// equal n_up + n_down.
Circuit spin_split_prep(const SlaterDeterminant& d_up, const SlaterDeterminant& d_down,
                        int n_qubits);
Circuit spin_split_prep(const SlaterDeterminant& d_up, const SlaterDeterminant& d_down);

}  // namespace fermiswap
