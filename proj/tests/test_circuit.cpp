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

#include <doctest.h>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "fermiswap/circuit.hpp"
#include "test_support.hpp"

using namespace fermiswap;
using Complex = std::complex<double>;
using namespace std::complex_literals;

TEST_CASE("fsim at zero angles is the fermionic swap") {
    const Eigen::Matrix4cd m = fsim_matrix(0.0, 0.0);
    CHECK((m - fswap_matrix()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(fswap_matrix()(3, 3) == Complex(-1.0));
}

TEST_CASE("fsim at theta = pi/2 is diagonal") {
    const Eigen::Matrix4cd m = fsim_matrix(EIGEN_PI / 2, 0.0);
    Eigen::Vector4cd diag;
    diag << 1.0, -1i, -1i, -1.0;
    CHECK((m - Eigen::Matrix4cd(diag.asDiagonal())).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("fsim equals the assembled interaction-times-swap exponentials") {
    // Oracle route: dense 4x4 exponentials of the number-number coupling and
    // the hopping block, composed with the bare swap.
    testsupport::Rng rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        const double theta = 3.0 * rng.symmetric();
        const double phi = 3.0 * rng.symmetric();
        Eigen::Matrix4cd nn = Eigen::Matrix4cd::Zero();
        nn(3, 3) = 1.0;
        Eigen::Matrix4cd hop = Eigen::Matrix4cd::Zero();
        hop(1, 2) = hop(2, 1) = 1.0;
        const Eigen::Matrix4cd expected = (-1i * phi * nn).exp() * (-1i * theta * hop).exp() *
                                          fswap_matrix();
        CHECK((fsim_matrix(theta, phi) - expected).cwiseAbs().maxCoeff() <= 1e-14);
    }
}

TEST_CASE("fsim is unitary for 1000 random angle pairs") {
    testsupport::Rng rng(17);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Eigen::Matrix4cd m = fsim_matrix(10 * rng.symmetric(), 10 * rng.symmetric());
        worst = std::max(worst,
                         (m * m.adjoint() - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff());
    }
    CHECK(worst <= 1e-14);
}

TEST_CASE("givens gate matrix matches its defining block") {
    const double theta = 0.7, phase = -1.2;
    const Eigen::Matrix4cd m = givens_matrix(theta, phase);
    CHECK(m(0, 0) == Complex(1.0));
    CHECK(m(3, 3) == Complex(1.0));
    CHECK(std::abs(m(1, 1) - std::cos(theta)) <= 1e-15);
    CHECK(std::abs(m(1, 2) + std::exp(1i * phase) * std::sin(theta)) <= 1e-15);
    CHECK(std::abs(m(2, 1) - std::exp(-1i * phase) * std::sin(theta)) <= 1e-15);
    CHECK((m * m.adjoint() - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("gate matrices reject non-finite angles") {
    const double bad = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(fsim_matrix(bad, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(givens_matrix(0.0, bad), std::invalid_argument);
    CHECK_THROWS_AS(phase_matrix(bad), std::invalid_argument);
}

TEST_CASE("circuit stats") {
    SUBCASE("empty circuit") {
        Circuit c;
        c.n_qubits = 2;
        const auto s = circuit_stats(c);
        CHECK(s.two_qubit_count == 0);
        CHECK(s.depth == 0);
        CHECK(s.per_kind_counts.empty());
    }
    SUBCASE("mixed layers") {
        Circuit c;
        c.n_qubits = 4;
        c.push_layer({Gate::phase(0, 0.1), Gate::fsim(1, 0.2, 0.3)});
        c.push_layer({Gate::fswap(0), Gate::givens(2, 0.4, 0.0)});
        const auto s = circuit_stats(c);
        CHECK(s.depth == 2);
        CHECK(s.two_qubit_count == 3);
        CHECK(s.per_kind_counts.at("phase") == 1);
        CHECK(s.per_kind_counts.at("fsim") == 1);
        CHECK(s.per_kind_counts.at("fswap") == 1);
        CHECK(s.per_kind_counts.at("givens") == 1);
    }
}

TEST_CASE("validate_circuit rejects malformed circuits") {
    Circuit c;
    c.n_qubits = 3;
    SUBCASE("overlapping gates in a layer") {
        c.push_layer({Gate::fsim(0, 0.1, 0.1), Gate::fsim(1, 0.1, 0.1)});
        CHECK_THROWS_AS(validate_circuit(c), std::invalid_argument);
    }
    SUBCASE("out-of-range qubit") {
        c.push_layer({Gate::fswap(2)});
        CHECK_THROWS_AS(validate_circuit(c), std::invalid_argument);
    }
    SUBCASE("valid circuit passes") {
        c.push_layer({Gate::fswap(0), Gate::phase(2, 0.5)});
        CHECK_NOTHROW(validate_circuit(c));
    }
}
