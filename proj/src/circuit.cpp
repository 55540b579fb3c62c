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

#include "fermiswap/circuit.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace fermiswap {

using namespace std::complex_literals;

bool operator==(const Gate& a, const Gate& b) {
    return a.kind == b.kind && a.q0 == b.q0 && a.q1 == b.q1 && a.p0 == b.p0 && a.p1 == b.p1;
}

void Circuit::push(const Gate& g) {
    auto overlaps = [&](const std::vector<Gate>& layer) {
        for (const auto& other : layer) {
            if (other.q0 == g.q0 || other.q1 == g.q0) return true;
            if (g.q1 >= 0 && (other.q0 == g.q1 || other.q1 == g.q1)) return true;
        }
        return false;
    };
    if (layers.empty() || overlaps(layers.back())) layers.emplace_back();
    layers.back().push_back(g);
}

void Circuit::push_layer(std::vector<Gate> layer) {
    if (!layer.empty()) layers.push_back(std::move(layer));
}

std::size_t Circuit::gate_count() const {
    std::size_t total = 0;
    for (const auto& layer : layers) total += layer.size();
    return total;
}

std::string gate_kind_name(GateKind k) {
    switch (k) {
        case GateKind::FSim: return "fsim";
        case GateKind::Givens: return "givens";
        case GateKind::Phase: return "phase";
        case GateKind::FSwap: return "fswap";
    }
    throw std::logic_error("unreachable gate kind");
}

CircuitStats circuit_stats(const Circuit& c) {
    CircuitStats s;
    s.depth = c.layers.size();
    for (const auto& layer : c.layers) {
        for (const auto& g : layer) {
            s.per_kind_counts[gate_kind_name(g.kind)]++;
            if (g.two_qubit()) s.two_qubit_count++;
        }
    }
    return s;
}

Eigen::Matrix4cd fsim_matrix(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi))
        throw std::invalid_argument("non-finite fsim angle");
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 0) = 1.0;
    m(1, 1) = -1i * std::sin(theta);
    m(1, 2) = std::cos(theta);
    m(2, 1) = std::cos(theta);
    m(2, 2) = -1i * std::sin(theta);
    m(3, 3) = -std::exp(-1i * phi);
    return m;
}

Eigen::Matrix4cd givens_matrix(double theta, double phase) {
    if (!std::isfinite(theta) || !std::isfinite(phase))
        throw std::invalid_argument("non-finite givens angle");
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
    m(1, 1) = std::cos(theta);
    m(1, 2) = -std::exp(1i * phase) * std::sin(theta);
    m(2, 1) = std::exp(-1i * phase) * std::sin(theta);
    m(2, 2) = std::cos(theta);
    return m;
}

Eigen::Matrix4cd fswap_matrix() {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 0) = 1.0;
    m(1, 2) = 1.0;
    m(2, 1) = 1.0;
    m(3, 3) = -1.0;
    return m;
}

Eigen::Matrix2cd phase_matrix(double alpha) {
    if (!std::isfinite(alpha)) throw std::invalid_argument("non-finite phase angle");
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
    m(1, 1) = std::exp(1i * alpha);
    return m;
}

Eigen::MatrixXcd gate_matrix(const Gate& g) {
    switch (g.kind) {
        case GateKind::FSim: return fsim_matrix(g.p0, g.p1);
        case GateKind::Givens: return givens_matrix(g.p0, g.p1);
        case GateKind::Phase: return phase_matrix(g.p0);
        case GateKind::FSwap: return fswap_matrix();
    }
    throw std::logic_error("unreachable gate kind");
}

void validate_circuit(const Circuit& c) {
    if (c.n_qubits < 1) throw std::invalid_argument("circuit needs at least one qubit");
    for (const auto& layer : c.layers) {
        std::set<int> used;
        for (const auto& g : layer) {
            if (g.q0 < 0 || g.q0 >= c.n_qubits) throw std::invalid_argument("gate qubit out of range");
            if (!used.insert(g.q0).second) throw std::invalid_argument("overlapping gates in layer");
            if (g.two_qubit()) {
                if (g.q1 != g.q0 + 1) throw std::invalid_argument("two-qubit gate must be adjacent");
                if (g.q1 >= c.n_qubits) throw std::invalid_argument("gate qubit out of range");
                if (!used.insert(g.q1).second)
                    throw std::invalid_argument("overlapping gates in layer");
            }
            if (!std::isfinite(g.p0) || !std::isfinite(g.p1))
                throw std::invalid_argument("non-finite gate parameter");
        }
    }
}

}  // namespace fermiswap
