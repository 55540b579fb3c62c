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
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "fermiswap/hamiltonian.hpp"

namespace testsupport {

using Complex = std::complex<double>;

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1p-53; }
    double symmetric() { return 2.0 * uniform() - 1.0; }
    double gaussian() {
        const double u1 = std::max(uniform(), 1e-300);
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * EIGEN_PI * u2);
    }
    Complex cgaussian() { return {gaussian(), gaussian()}; }

  private:
    std::mt19937_64 eng_;
};

// Haar-distributed unitary: QR of a complex Gaussian matrix with the R
// diagonal phases normalized away.
inline Eigen::MatrixXcd random_unitary(int n, std::uint64_t seed) {
    Rng rng(seed);
    Eigen::MatrixXcd g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.cgaussian();
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        q.col(j) *= (std::abs(d) > 0) ? d / std::abs(d) : Complex(1.0);
    }
    return q;
}

inline Eigen::MatrixXd random_orthogonal(int n, std::uint64_t seed) {
    Rng rng(seed);
    Eigen::MatrixXd g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.gaussian();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j)
        if (r(j, j) < 0) q.col(j) = -q.col(j);
    return q;
}

// eta orthonormal rows over n modes.
inline Eigen::MatrixXcd random_slater_rows(int eta, int n, std::uint64_t seed) {
    return random_unitary(n, seed).topRows(eta);
}

// Independent Jordan-Wigner operator oracle built from explicit 2x2 factors:
// a_p = Z x ... x Z x [[0,1],[0,0]] x I x ... with qubit 0 the least
// significant tensor slot.
inline Eigen::MatrixXcd annihilation_dense(int n, int p) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::uint64_t k = 0; k < dim; ++k) {
        if (!((k >> p) & 1)) continue;
        const std::uint64_t low = k & ((std::uint64_t{1} << p) - 1);
        const int sign = (std::popcount(low) % 2 == 0) ? 1 : -1;
        a(k ^ (std::uint64_t{1} << p), k) = sign;
    }
    return a;
}

// Dense Eq.-style Hamiltonian assembled straight from operator products.
inline Eigen::MatrixXcd fermion_operator_dense(const fermiswap::FermionHamiltonian& h) {
    const int n = h.n_modes;
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<Eigen::MatrixXcd> a;
    for (int p = 0; p < n; ++p) a.push_back(annihilation_dense(n, p));
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            if (h.one_body(p, q) != 0.0) out += h.one_body(p, q) * a[p].adjoint() * a[q];
    for (int p = 0; p < n; ++p)
        if (h.potential(p) != 0.0) out += h.potential(p) * a[p].adjoint() * a[p];
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            if (p != q && h.interaction(p, q) != 0.0)
                out += h.interaction(p, q) * (a[p].adjoint() * a[p]) * (a[q].adjoint() * a[q]);
    return out;
}

}  // namespace testsupport
