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

#include "fermiswap/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace fermiswap {

namespace {

constexpr double kSymmetryTol = 1e-12;

void require(bool cond, const std::string& message) {
    if (!cond) throw std::invalid_argument(message);
}

bool all_finite(const Eigen::MatrixXd& m) { return m.allFinite(); }

// Deterministic uniform double in [-1, 1) from a raw 64-bit stream.
double symmetric_unit(std::mt19937_64& eng) {
    const double u = static_cast<double>(eng() >> 11) * 0x1p-53;
    return 2.0 * u - 1.0;
}

}  // namespace

int HubbardInstance::position_of(int label) const {
    for (int i = 0; i < static_cast<int>(chain_order.size()); ++i)
        if (chain_order[i] == label) return i;
    throw std::invalid_argument("unknown spin-orbital label");
}

FermionHamiltonian build_hamiltonian(const Eigen::MatrixXd& t, const Eigen::VectorXd& u,
                                     const Eigen::MatrixXd& v) {
    const int n = static_cast<int>(t.rows());
    require(n >= 1, "hamiltonian needs at least one mode");
    require(t.cols() == n, "T must be square");
    require(u.size() == n, "U length must match T");
    require(v.rows() == n && v.cols() == n, "V must be n x n");
    require(all_finite(t) && u.allFinite() && all_finite(v), "non-finite coefficient");
    require((t - t.transpose()).cwiseAbs().maxCoeff() <= kSymmetryTol, "T must be symmetric");
    require((v - v.transpose()).cwiseAbs().maxCoeff() <= kSymmetryTol, "V must be symmetric");
    require(v.diagonal().cwiseAbs().maxCoeff() <= kSymmetryTol, "V must have zero diagonal");

    FermionHamiltonian h;
    h.n_modes = n;
    h.one_body = 0.5 * (t + t.transpose());
    h.potential = u;
    h.interaction = 0.5 * (v + v.transpose());
    h.interaction.diagonal().setZero();
    return h;
}

PauliHamiltonian jordan_wigner(const FermionHamiltonian& h) {
    const int n = h.n_modes;
    std::map<std::string, double> terms;
    double constant = 0.0;
    const std::string identity(n, 'I');

    auto add = [&](const std::string& ops, double coeff) {
        if (ops == identity) {
            constant += coeff;
            return;
        }
        terms[ops] += coeff;
    };

    // Diagonal pieces: (T_pp + U_p) n_p and the unordered-pair total
    // (V_pq + V_qp) n_p n_q, with n = (1 - Z)/2.
    for (int p = 0; p < n; ++p) {
        const double c = h.one_body(p, p) + h.potential(p);
        constant += 0.5 * c;
        std::string z = identity;
        z[p] = 'Z';
        add(z, -0.5 * c);
    }
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const double w = h.pair_interaction(p, q);
            if (w == 0.0) continue;
            constant += 0.25 * w;
            std::string zz = identity;
            zz[p] = 'Z';
            zz[q] = 'Z';
            add(zz, 0.25 * w);
            std::string zp = identity;
            zp[p] = 'Z';
            add(zp, -0.25 * w);
            std::string zq = identity;
            zq[q] = 'Z';
            add(zq, -0.25 * w);
        }
    }
    // Hopping: T_pq (a+_p a_q + a+_q a_p) = T_pq (X Z..Z X + Y Z..Z Y)/2.
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const double c = h.one_body(p, q);
            if (c == 0.0) continue;
            std::string xs = identity, ys = identity;
            for (int k = p + 1; k < q; ++k) {
                xs[k] = 'Z';
                ys[k] = 'Z';
            }
            xs[p] = xs[q] = 'X';
            ys[p] = ys[q] = 'Y';
            add(xs, 0.5 * c);
            add(ys, 0.5 * c);
        }
    }

    PauliHamiltonian ph;
    ph.n_qubits = n;
    ph.constant_offset = constant;
    for (const auto& [ops, coeff] : terms) {
        if (coeff != 0.0) ph.terms.push_back({ops, coeff});
    }
    return ph;
}

HubbardInstance hubbard_2d(int rows, int cols, double t_hop, double u_int) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("lattice must have rows, cols >= 1");
    require(std::isfinite(t_hop) && std::isfinite(u_int), "non-finite coefficient");

    HubbardInstance inst;
    inst.rows = rows;
    inst.cols = cols;
    inst.t_hop = t_hop;
    inst.u_int = u_int;

    // Snake: rows traversed alternately left-to-right and right-to-left;
    // the spin that comes first alternates with the visit index, which
    // keeps the orbital touching the previous site of the same spin as it.
    std::vector<int> position(2 * rows * cols, -1);  // label -> chain position
    int visit = 0;
    for (int r = 0; r < rows; ++r) {
        for (int i = 0; i < cols; ++i) {
            const int c = (r % 2 == 0) ? i : cols - 1 - i;
            const int site = r * cols + c;
            const int up = 2 * site, down = 2 * site + 1;
            if (visit % 2 == 0) {
                inst.chain_order.push_back(up);
                inst.chain_order.push_back(down);
            } else {
                inst.chain_order.push_back(down);
                inst.chain_order.push_back(up);
            }
            ++visit;
        }
    }
    for (int pos = 0; pos < static_cast<int>(inst.chain_order.size()); ++pos)
        position[inst.chain_order[pos]] = pos;

    for (int site = 0; site < rows * cols; ++site) {
        int a = position[2 * site], b = position[2 * site + 1];
        inst.onsite_pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
    auto add_edge = [&](int s1, int s2) {
        for (int spin = 0; spin < 2; ++spin) {
            int a = position[2 * s1 + spin], b = position[2 * s2 + spin];
            inst.hop_edges.emplace_back(std::min(a, b), std::max(a, b));
        }
    };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) add_edge(r * cols + c, r * cols + c + 1);
            if (r + 1 < rows) add_edge(r * cols + c, (r + 1) * cols + c);
        }
    }
    std::sort(inst.hop_edges.begin(), inst.hop_edges.end());
    std::sort(inst.onsite_pairs.begin(), inst.onsite_pairs.end());
    return inst;
}

FermionHamiltonian hubbard_to_hamiltonian(const HubbardInstance& inst) {
    const int n = inst.n_modes();
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [a, b] : inst.hop_edges) {
        t(a, b) = -inst.t_hop;
        t(b, a) = -inst.t_hop;
    }
    for (const auto& [a, b] : inst.onsite_pairs) {
        v(a, b) = 0.5 * inst.u_int;
        v(b, a) = 0.5 * inst.u_int;
    }
    return build_hamiltonian(t, Eigen::VectorXd::Zero(n), v);
}

FermionHamiltonian random_hamiltonian(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::mt19937_64 eng(seed);
    Eigen::MatrixXd t(n, n), v(n, n);
    Eigen::VectorXd u(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t(i, j) = symmetric_unit(eng);
    for (int i = 0; i < n; ++i) u(i) = symmetric_unit(eng);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) v(i, j) = symmetric_unit(eng);
    t = 0.5 * (t + t.transpose()).eval();
    v = 0.5 * (v + v.transpose()).eval();
    v.diagonal().setZero();
    return build_hamiltonian(t, u, v);
}

}  // namespace fermiswap
