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

#include "fermiswap/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

namespace fermiswap {

using namespace std::complex_literals;
using Complex = std::complex<double>;

namespace {

constexpr int kDenseCap = 12;
constexpr int kReferenceCap = 10;
constexpr int kSlaterCap = 16;

void require(bool cond, const std::string& message) {
    if (!cond) throw std::invalid_argument(message);
}

std::uint64_t dim_of(int n_qubits) { return std::uint64_t{1} << n_qubits; }

// Parity of occupied modes strictly between a and b in basis index k.
int string_sign(std::uint64_t k, int a, int b) {
    const int lo = std::min(a, b), hi = std::max(a, b);
    std::uint64_t mask = ((std::uint64_t{1} << hi) - 1) & ~((std::uint64_t{1} << (lo + 1)) - 1);
    return (std::popcount(k & mask) % 2 == 0) ? 1 : -1;
}

void apply_two_qubit_vec(Eigen::VectorXcd& amps, const Eigen::Matrix4cd& m, int lo, int hi,
                         int threads) {
    const std::uint64_t dim = amps.size();
    const std::uint64_t bl = std::uint64_t{1} << lo, bh = std::uint64_t{1} << hi;
    auto work = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t k = begin; k < end; ++k) {
            if (k & (bl | bh)) continue;
            const std::uint64_t i01 = k | bl, i10 = k | bh, i11 = k | bl | bh;
            const Complex a00 = amps[k], a01 = amps[i01], a10 = amps[i10], a11 = amps[i11];
            amps[k] = m(0, 0) * a00 + m(0, 1) * a01 + m(0, 2) * a10 + m(0, 3) * a11;
            amps[i01] = m(1, 0) * a00 + m(1, 1) * a01 + m(1, 2) * a10 + m(1, 3) * a11;
            amps[i10] = m(2, 0) * a00 + m(2, 1) * a01 + m(2, 2) * a10 + m(2, 3) * a11;
            amps[i11] = m(3, 0) * a00 + m(3, 1) * a01 + m(3, 2) * a10 + m(3, 3) * a11;
        }
    };
    if (threads <= 1 || dim < 4096) {
        work(0, dim);
        return;
    }
    // Contiguous index chunks never share a 4-амplitude group when the chunk
    // boundary is aligned above the high bit, so writes stay disjoint and
    // results are bit-identical for any thread count.
    const std::uint64_t align = bh << 1;
    std::vector<std::thread> pool;
    const std::uint64_t raw = (dim + threads - 1) / threads;
    const std::uint64_t chunk = ((raw + align - 1) / align) * align;
    for (int tix = 0; tix < threads; ++tix) {
        const std::uint64_t begin = std::min(dim, tix * chunk);
        const std::uint64_t end = std::min(dim, begin + chunk);
        if (begin < end) pool.emplace_back(work, begin, end);
    }
    for (auto& th : pool) th.join();
}

void apply_phase_vec(Eigen::VectorXcd& amps, double alpha, int q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    const Complex ph = std::exp(1i * alpha);
    for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(amps.size()); ++k)
        if (k & bit) amps[k] *= ph;
}

void apply_two_qubit_rows(Eigen::MatrixXcd& u, const Eigen::Matrix4cd& m, int lo, int hi) {
    const std::uint64_t dim = u.rows();
    const std::uint64_t bl = std::uint64_t{1} << lo, bh = std::uint64_t{1} << hi;
    Eigen::RowVectorXcd r00, r01, r10;
    for (std::uint64_t k = 0; k < dim; ++k) {
        if (k & (bl | bh)) continue;
        const std::uint64_t i01 = k | bl, i10 = k | bh, i11 = k | bl | bh;
        r00 = u.row(k);
        r01 = u.row(i01);
        r10 = u.row(i10);
        u.row(k) = m(0, 0) * r00 + m(0, 1) * r01 + m(0, 2) * r10 + m(0, 3) * u.row(i11);
        u.row(i01) = m(1, 0) * r00 + m(1, 1) * r01 + m(1, 2) * r10 + m(1, 3) * u.row(i11);
        u.row(i10) = m(2, 0) * r00 + m(2, 1) * r01 + m(2, 2) * r10 + m(2, 3) * u.row(i11);
        u.row(i11) = m(3, 0) * r00 + m(3, 1) * r01 + m(3, 2) * r10 + m(3, 3) * u.row(i11);
    }
}

// Left-multiplies u by exp(-i dt (T hop_ab + w n_a n_b)); the two factors
// commute, the hop block mixes index pairs related by moving one particle
// between a and b with the Jordan-Wigner string sign.
void apply_pair_term_rows(Eigen::MatrixXcd& u, int a, int b, double hop, double w, double dt) {
    const std::uint64_t dim = u.rows();
    const std::uint64_t ba = std::uint64_t{1} << a, bb = std::uint64_t{1} << b;
    if (w != 0.0) {
        const Complex ph = std::exp(-1i * w * dt);
        for (std::uint64_t k = 0; k < dim; ++k)
            if ((k & ba) && (k & bb)) u.row(k) *= ph;
    }
    if (hop != 0.0) {
        const double cth = std::cos(hop * dt), sth = std::sin(hop * dt);
        Eigen::RowVectorXcd tmp;
        for (std::uint64_t k = 0; k < dim; ++k) {
            if ((k & ba) || !(k & bb)) continue;  // visit each pair once via (a empty, b filled)
            const std::uint64_t kp = (k | ba) & ~bb;
            const double sg = string_sign(k, a, b);
            tmp = u.row(k);
            u.row(k) = cth * tmp - 1i * sth * sg * u.row(kp);
            u.row(kp) = -1i * sth * sg * tmp + cth * u.row(kp);
        }
    }
}

void apply_mode_phase_rows(Eigen::MatrixXcd& u, int p, double angle) {
    if (angle == 0.0) return;
    const std::uint64_t bp = std::uint64_t{1} << p;
    const Complex ph = std::exp(1i * angle);
    for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(u.rows()); ++k)
        if (k & bp) u.row(k) *= ph;
}

}  // namespace

Statevector Statevector::basis_state(int n_qubits, std::uint64_t index) {
    require(n_qubits >= 1 && n_qubits <= 24, "unsupported qubit count");
    require(index < dim_of(n_qubits), "basis index out of range");
    Statevector psi;
    psi.n_qubits = n_qubits;
    psi.amplitudes = Eigen::VectorXcd::Zero(dim_of(n_qubits));
    psi.amplitudes[index] = 1.0;
    return psi;
}

Statevector Statevector::hartree_fock(int n_qubits, int eta) {
    require(eta >= 0 && eta <= n_qubits, "bad particle count");
    return basis_state(n_qubits, (std::uint64_t{1} << eta) - 1);
}

Statevector random_state(int n_qubits, std::uint64_t seed) {
    require(n_qubits >= 1 && n_qubits <= 24, "unsupported qubit count");
    std::mt19937_64 eng(seed);
    auto uniform = [&] { return static_cast<double>(eng() >> 11) * 0x1p-53; };
    Statevector psi;
    psi.n_qubits = n_qubits;
    psi.amplitudes.resize(dim_of(n_qubits));
    for (auto& amp : psi.amplitudes) {
        const double u1 = std::max(uniform(), 1e-300), u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        amp = Complex(r * std::cos(2 * EIGEN_PI * u2), r * std::sin(2 * EIGEN_PI * u2));
    }
    psi.amplitudes.normalize();
    return psi;
}

Statevector apply_circuit(const Statevector& psi, const Circuit& c, int threads) {
    require(psi.n_qubits == c.n_qubits, "statevector/circuit size mismatch");
    require(threads >= 1, "thread count must be positive");
    validate_circuit(c);
    Statevector out = psi;
    for (const auto& layer : c.layers) {
        for (const auto& g : layer) {
            if (g.kind == GateKind::Phase)
                apply_phase_vec(out.amplitudes, g.p0, g.q0);
            else
                apply_two_qubit_vec(out.amplitudes, gate_matrix(g), g.q0, g.q1, threads);
        }
    }
    return out;
}

Eigen::MatrixXcd circuit_to_dense(const Circuit& c) {
    require(c.n_qubits <= kDenseCap, "dense circuit cap is 12 qubits");
    validate_circuit(c);
    const std::uint64_t dim = dim_of(c.n_qubits);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto& layer : c.layers) {
        for (const auto& g : layer) {
            if (g.kind == GateKind::Phase)
                apply_mode_phase_rows(u, g.q0, g.p0);
            else
                apply_two_qubit_rows(u, gate_matrix(g), g.q0, g.q1);
        }
    }
    return u;
}

Eigen::MatrixXcd pauli_to_dense(const PauliHamiltonian& ph) {
    require(ph.n_qubits <= kDenseCap, "dense Hamiltonian cap is 12 qubits");
    const std::uint64_t dim = dim_of(ph.n_qubits);
    Eigen::MatrixXcd h = ph.constant_offset * Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto& term : ph.terms) {
        for (std::uint64_t col = 0; col < dim; ++col) {
            std::uint64_t row = col;
            Complex phase = term.coefficient;
            for (int q = 0; q < ph.n_qubits; ++q) {
                const bool bit = (col >> q) & 1;
                switch (term.ops[q]) {
                    case 'I': break;
                    case 'X': row ^= std::uint64_t{1} << q; break;
                    case 'Y':
                        row ^= std::uint64_t{1} << q;
                        phase *= bit ? -1i : 1i;
                        break;
                    case 'Z':
                        if (bit) phase = -phase;
                        break;
                    default: throw std::invalid_argument("bad pauli label");
                }
            }
            h(row, col) += phase;
        }
    }
    return h;
}

Eigen::MatrixXcd exact_evolution(const FermionHamiltonian& h, double t) {
    require(h.n_modes <= kDenseCap, "exact evolution cap is 12 qubits");
    require(std::isfinite(t), "non-finite time");
    const Eigen::MatrixXcd hd = pauli_to_dense(jordan_wigner(h));
    if ((hd - hd.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::runtime_error("dense Hamiltonian is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hd);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    const Eigen::VectorXcd phases =
        (-1i * t * es.eigenvalues().cast<Complex>().array()).exp().matrix();
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Eigen::MatrixXcd trotter_reference(const FermionHamiltonian& h, const SwapSchedule& sched,
                                   double t, int order) {
    require(h.n_modes <= kReferenceCap, "trotter reference cap is 10 qubits");
    require(order == 1 || order == 2, "unsupported Trotter order");
    const std::uint64_t dim = dim_of(h.n_modes);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);

    auto potential = [&](double dt) {
        for (int p = 0; p < h.n_modes; ++p)
            apply_mode_phase_rows(u, p, -(h.potential(p) + h.one_body(p, p)) * dt);
    };
    auto service = [&](const SwapSchedule::Service& sv, double dt) {
        apply_pair_term_rows(u, sv.orb_a, sv.orb_b, h.hopping(sv.orb_a, sv.orb_b),
                             h.pair_interaction(sv.orb_a, sv.orb_b), dt);
    };

    if (order == 1) {
        potential(t);
        for (const auto& sv : sched.services) service(sv, t);
        return u;
    }
    const int last_config = static_cast<int>(sched.layers.size()) - 1;
    potential(t);
    for (const auto& sv : sched.services)
        if (sv.config < last_config) service(sv, t);
    for (const auto& sv : sched.services)
        if (sv.config == last_config) service(sv, 2.0 * t);
    for (auto it = sched.services.rbegin(); it != sched.services.rend(); ++it)
        if (it->config < last_config) service(*it, t);
    potential(t);
    return u;
}

Eigen::MatrixXcd thouless_unitary(const Eigen::MatrixXcd& u) {
    const int n = static_cast<int>(u.rows());
    require(u.cols() == n, "u must be square");
    require(n <= kReferenceCap, "thouless cap is 10 qubits");
    require((u * u.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-10,
            "u is not unitary");

    // Principal log of a unitary via its Schur form (diagonal up to noise).
    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(u);
    if (schur.info() != Eigen::Success) throw std::runtime_error("schur decomposition failed");
    Eigen::VectorXcd logs(n);
    for (int i = 0; i < n; ++i) {
        const Complex lambda = schur.matrixT()(i, i);
        if (std::abs(lambda + 1.0) < 1e-8)
            throw std::domain_error("matrix log branch ambiguity: eigenvalue at -1");
        logs[i] = std::log(lambda);
    }
    const Eigen::MatrixXcd kappa =
        schur.matrixU() * logs.asDiagonal() * schur.matrixU().adjoint();

    // Dense generator sum_pq kappa_pq a+_p a_q, then exponentiate.
    const std::uint64_t dim = dim_of(n);
    Eigen::MatrixXcd gen = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::uint64_t k = 0; k < dim; ++k) {
        for (int p = 0; p < n; ++p)
            if ((k >> p) & 1) gen(k, k) += kappa(p, p);
        for (int q = 0; q < n; ++q) {
            if (!((k >> q) & 1)) continue;
            for (int p = 0; p < n; ++p) {
                if (p == q || ((k >> p) & 1)) continue;
                const std::uint64_t kp = (k | (std::uint64_t{1} << p)) & ~(std::uint64_t{1} << q);
                gen(kp, k) += kappa(p, q) * static_cast<double>(string_sign(k, p, q));
            }
        }
    }
    // gen is anti-Hermitian; exponentiate through the Hermitian -i*gen.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(-1i * gen);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    const Eigen::VectorXcd phases = (1i * es.eigenvalues().cast<Complex>().array()).exp().matrix();
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Eigen::MatrixXcd mode_permutation_unitary(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    require(n >= 1 && n <= kDenseCap, "permutation cap is 12 qubits");
    std::vector<bool> hit(n, false);
    for (int v : perm) {
        require(v >= 0 && v < n && !hit[v], "not a permutation");
        hit[v] = true;
    }
    const std::uint64_t dim = dim_of(n);
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(dim, dim);
    std::vector<int> images;
    for (std::uint64_t k = 0; k < dim; ++k) {
        images.clear();
        std::uint64_t target = 0;
        for (int m = 0; m < n; ++m) {
            if ((k >> m) & 1) {
                images.push_back(perm[m]);
                target |= std::uint64_t{1} << perm[m];
            }
        }
        int inversions = 0;
        for (std::size_t i = 0; i < images.size(); ++i)
            for (std::size_t j = i + 1; j < images.size(); ++j)
                if (images[i] > images[j]) ++inversions;
        r(target, k) = (inversions % 2 == 0) ? 1.0 : -1.0;
    }
    return r;
}

std::vector<int> invert_permutation(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size(), -1);
    for (int i = 0; i < static_cast<int>(perm.size()); ++i) {
        require(perm[i] >= 0 && perm[i] < static_cast<int>(perm.size()) && inv[perm[i]] == -1,
                "not a permutation");
        inv[perm[i]] = i;
    }
    return inv;
}

Statevector slater_amplitudes(const SlaterDeterminant& d) {
    require(d.n <= kSlaterCap, "slater amplitude cap is 16 modes");
    Statevector psi;
    psi.n_qubits = d.n;
    psi.amplitudes = Eigen::VectorXcd::Zero(dim_of(d.n));
    Eigen::MatrixXcd sub(d.eta, d.eta);
    for (std::uint64_t mask = 0; mask < dim_of(d.n); ++mask) {
        if (std::popcount(mask) != d.eta) continue;
        int col = 0;
        for (int j = 0; j < d.n; ++j)
            if ((mask >> j) & 1) sub.col(col++) = d.coeffs.col(j);
        psi.amplitudes[mask] = (d.eta == 1) ? sub(0, 0) : Complex(sub.determinant());
    }
    return psi;
}

double operator_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                         bool phase_aligned) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "dimension mismatch");
    if (!phase_aligned) return (a - b).norm();
    const Complex overlap = (b.adjoint() * a).trace();
    const Complex phase = std::exp(1i * std::arg(overlap));
    return (a - phase * b).norm();
}

}  // namespace fermiswap
