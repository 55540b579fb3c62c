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
#include <complex>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace fermiswap {

enum class GateKind { FSim, Givens, Phase, FSwap };

/**
 * One gate on a linear chain. Two-qubit kinds act on adjacent positions
 * (q1 = q0 + 1); Phase is single-qubit (q1 = -1).
 *
 * Matrix conventions (basis |00>,|01>,|10>,|11>, left bit = higher qubit):
 *   FSim(theta, phi)   middle block [[-i sin, cos], [cos, -i sin]],
 *                      |11> -> -exp(-i phi); equals interaction * fswap.
 *   Givens(theta, phi) middle block [[cos, -e^{i phi} sin],
 *                      [e^{-i phi} sin, cos]], |11> -> 1.
 *   Phase(alpha)       diag(1, e^{i alpha}).
 *   FSwap              swap with |11> -> -1.
 */
struct Gate {
    GateKind kind = GateKind::FSwap;
    int q0 = 0;
    int q1 = -1;
    double p0 = 0.0;
    double p1 = 0.0;

    static Gate fsim(int q, double theta, double phi) { return {GateKind::FSim, q, q + 1, theta, phi}; }
    static Gate givens(int q, double theta, double phase) { return {GateKind::Givens, q, q + 1, theta, phase}; }
    static Gate phase(int q, double angle) { return {GateKind::Phase, q, -1, angle, 0.0}; }
    static Gate fswap(int q) { return {GateKind::FSwap, q, q + 1, 0.0, 0.0}; }

    bool two_qubit() const { return kind != GateKind::Phase; }
};

bool operator==(const Gate& a, const Gate& b);

/// Layered gate list. Gates within a layer have disjoint qubit support.
struct Circuit {
    int n_qubits = 0;
    std::vector<std::vector<Gate>> layers;
    nlohmann::json metadata = nlohmann::json::object();

    /// Appends gate to the last layer if its support is free there,
    /// otherwise opens a new layer.
    void push(const Gate& g);
    void push_layer(std::vector<Gate> layer);
    std::size_t gate_count() const;
};

struct CircuitStats {
    std::size_t two_qubit_count = 0;
    std::size_t depth = 0;
    std::map<std::string, std::size_t> per_kind_counts;
};

CircuitStats circuit_stats(const Circuit& c);

std::string gate_kind_name(GateKind k);

// Dense gate blocks, in the basis convention documented on Gate.
Eigen::Matrix4cd fsim_matrix(double theta, double phi);
Eigen::Matrix4cd givens_matrix(double theta, double phase);
Eigen::Matrix4cd fswap_matrix();
Eigen::Matrix2cd phase_matrix(double alpha);

/// 4x4 (or 2x2 for Phase) block of a gate. Throws on non-finite angles.
Eigen::MatrixXcd gate_matrix(const Gate& g);

/// Checks layer-disjointness and qubit ranges; throws std::invalid_argument.
void validate_circuit(const Circuit& c);

}  // namespace fermiswap
