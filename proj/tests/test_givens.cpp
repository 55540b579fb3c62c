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

#include <set>

#include "fermiswap/givens.hpp"
#include "fermiswap/simulator.hpp"
#include "test_support.hpp"

using namespace fermiswap;
using Complex = std::complex<double>;
using namespace std::complex_literals;

namespace {

Eigen::MatrixXcd replay(const GivensPlan& plan, const Eigen::MatrixXcd& u) {
    Eigen::MatrixXcd a = u;
    for (const auto& layer : plan.layers)
        for (const auto& r : layer) apply_phased_givens_inplace(a, r.row, r.theta, r.phase);
    return a;
}

double offdiag_max(const Eigen::MatrixXcd& a) {
    double worst = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) worst = std::max(worst, std::abs(a(i, j)));
    return worst;
}

}  // namespace

TEST_CASE("apply_phased_givens") {
    SUBCASE("zero angle leaves the matrix unchanged") {
        const Eigen::MatrixXcd a = testsupport::random_unitary(3, 1);
        CHECK((apply_phased_givens(a, 0, 0.0, 0.4) - a).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("quarter turn on the identity exchanges rows with a sign") {
        const Eigen::MatrixXcd out =
            apply_phased_givens(Eigen::MatrixXcd::Identity(2, 2), 0, EIGEN_PI / 2, 0.0);
        Eigen::MatrixXcd expected(2, 2);
        expected << 0, -1, 1, 0;
        CHECK((out - expected).cwiseAbs().maxCoeff() <= 1e-15);
    }
    SUBCASE("touched rows keep their joint norm, others are untouched bitwise") {
        const Eigen::MatrixXcd a = testsupport::random_unitary(4, 2);
        const Eigen::MatrixXcd out = apply_phased_givens(a, 1, 0.7, -0.3);
        const double before = a.row(1).norm() + a.row(2).norm();
        const double after = out.row(1).norm() + out.row(2).norm();
        CHECK(std::abs(after - before) <= 1e-12);
        CHECK(out.row(0) == a.row(0));
        CHECK(out.row(3) == a.row(3));
    }
    SUBCASE("row index out of range") {
        const Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(2, 2);
        CHECK_THROWS_AS(apply_phased_givens(a, 1, 0.1, 0.0), std::invalid_argument);
    }
}

TEST_CASE("givens_decompose trivial inputs") {
    SUBCASE("identity needs no rotations") {
        const auto plan = givens_decompose(Eigen::MatrixXcd::Identity(4, 4));
        CHECK(plan.rotation_count() == 0);
        CHECK(plan.layers.empty());
        CHECK(plan.diag_phases.cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("diagonal unitary only yields phases") {
        Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
        d(0, 0) = std::exp(1i * 0.6);
        d(1, 1) = std::exp(1i * -1.1);
        const auto plan = givens_decompose(d);
        CHECK(plan.rotation_count() == 0);
        CHECK(plan.diag_phases(0) == doctest::Approx(0.6));
        CHECK(plan.diag_phases(1) == doctest::Approx(-1.1));
    }
    SUBCASE("non-unitary input rejected") {
        CHECK_THROWS_AS(givens_decompose(2.0 * Eigen::MatrixXcd::Identity(3, 3)),
                        std::invalid_argument);
    }
}

TEST_CASE("9x9 orthogonal decomposition fills the staircase pattern exactly") {
    const int n = 9;
    const Eigen::MatrixXcd u = testsupport::random_orthogonal(n, 5).cast<Complex>();
    const auto plan = givens_decompose(u);
    CHECK(plan.rotation_count() == 36);
    REQUIRE(plan.layers.size() == 15);
    // Layer l (1-based) must hold exactly the rotations on row pairs
    // (i-1, i) for subdiagonal targets (i, j) with n - i + 2j = l.
    for (int l = 1; l <= 15; ++l) {
        std::set<int> expected;
        for (int j = 0; j < n - 1; ++j) {
            const int i = n - l + 2 * j;
            if (i > j && i <= n - 1) expected.insert(i - 1);
        }
        std::set<int> got;
        for (const auto& r : plan.layers[l - 1]) got.insert(r.row);
        CAPTURE(l);
        CHECK(got == expected);
    }
}

TEST_CASE("replaying a plan diagonalizes its source") {
    // 50 random unitaries spread over sizes up to 16
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 15;
        const Eigen::MatrixXcd u = testsupport::random_unitary(n, 60 + trial);
        const auto plan = givens_decompose(u);
        CHECK(plan.rotation_count() <= static_cast<std::size_t>(n) * (n - 1) / 2);
        CHECK(plan.layers.size() <= static_cast<std::size_t>(std::max(1, 2 * n - 3)));
        const Eigen::MatrixXcd a = replay(plan, u);
        CHECK(offdiag_max(a) <= 1e-10);
        for (int p = 0; p < n; ++p) {
            CHECK(std::abs(std::abs(a(p, p)) - 1.0) <= 1e-10);
            CHECK(std::abs(std::arg(a(p, p)) - plan.diag_phases(p)) <= 1e-10);
        }
    }
}

TEST_CASE("decomposing a permutation matrix exercises the zero-pivot paths") {
    const int n = 5;
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) p((i + 1) % n, i) = 1.0;
    const auto plan = givens_decompose(p);
    CHECK(plan.rotation_count() <= static_cast<std::size_t>(n) * (n - 1) / 2);
    const Eigen::MatrixXcd a = replay(plan, p);
    CHECK(offdiag_max(a) <= 1e-12);
    for (int i = 0; i < n; ++i) CHECK(std::abs(std::abs(a(i, i)) - 1.0) <= 1e-12);

    // and the circuit route still matches the dense operator
    const auto c = plan_to_circuit(plan, true);
    CHECK(operator_distance(circuit_to_dense(c), thouless_unitary(p), true) <= 1e-9);
}

TEST_CASE("depth bound holds through n = 32") {
    for (int n : {2, 3, 5, 9, 16, 24, 32}) {
        const Eigen::MatrixXcd u = testsupport::random_unitary(n, 777 + n);
        const auto plan = givens_decompose(u);
        CHECK(plan.layers.size() <= static_cast<std::size_t>(std::max(1, 2 * n - 3)));
        CHECK(plan.rotation_count() <= static_cast<std::size_t>(n) * (n - 1) / 2);
    }
}

TEST_CASE("right-multiplying by diagonal phases changes only diag_phases") {
    const int n = 5;
    const Eigen::MatrixXcd u = testsupport::random_unitary(n, 8);
    Eigen::VectorXcd phases(n);
    testsupport::Rng rng(9);
    for (int i = 0; i < n; ++i) phases(i) = std::exp(1i * (2.0 * rng.symmetric()));
    const auto base = givens_decompose(u);
    const auto shifted = givens_decompose(u * phases.asDiagonal());
    REQUIRE(base.layers.size() == shifted.layers.size());
    for (std::size_t l = 0; l < base.layers.size(); ++l) {
        REQUIRE(base.layers[l].size() == shifted.layers[l].size());
        for (std::size_t k = 0; k < base.layers[l].size(); ++k) {
            CHECK(base.layers[l][k].row == shifted.layers[l][k].row);
            CHECK(base.layers[l][k].theta == doctest::Approx(shifted.layers[l][k].theta));
            CHECK(base.layers[l][k].phase == doctest::Approx(shifted.layers[l][k].phase));
        }
    }
}

TEST_CASE("plan_to_circuit implements the basis rotation and its inverse") {
    SUBCASE("empty plan gives phase gates only") {
        const auto plan = givens_decompose(Eigen::MatrixXcd::Identity(3, 3));
        const auto c = plan_to_circuit(plan, true);
        for (const auto& layer : c.layers)
            for (const auto& g : layer) CHECK(g.kind == GateKind::Phase);
    }
    SUBCASE("single rotation plan solves the two-mode problem") {
        const double alpha = 0.9;
        Eigen::MatrixXcd r(2, 2);
        r << std::cos(alpha), -std::sin(alpha), std::sin(alpha), std::cos(alpha);
        const auto c = plan_to_circuit(givens_decompose(r), true);
        const auto psi = apply_circuit(Statevector::hartree_fock(2, 1), c);
        // U(r)|mode 0> carries amplitudes (r00, r10) on modes (0, 1)
        CHECK(std::abs(psi.amplitudes[0b01] - r(0, 0)) <= 1e-12);
        CHECK(std::abs(psi.amplitudes[0b10] - r(1, 0)) <= 1e-12);
    }
    SUBCASE("circuit matches the dense Thouless operator") {
        for (int n = 2; n <= 6; ++n) {
            Eigen::MatrixXcd u = testsupport::random_unitary(n, 500 + n);
            const auto c = plan_to_circuit(givens_decompose(u), true);
            CHECK(operator_distance(circuit_to_dense(c), thouless_unitary(u), true) <= 1e-9);
        }
    }
    SUBCASE("invert false composes to the inverse") {
        const int n = 4;
        const Eigen::MatrixXcd u = testsupport::random_unitary(n, 21);
        const auto plan = givens_decompose(u);
        const Eigen::MatrixXcd fwd = circuit_to_dense(plan_to_circuit(plan, true));
        const Eigen::MatrixXcd bwd = circuit_to_dense(plan_to_circuit(plan, false));
        CHECK((fwd * bwd - Eigen::MatrixXcd::Identity(1 << n, 1 << n)).cwiseAbs().maxCoeff() <=
              1e-9);
    }
}

TEST_CASE("rotation-operator correspondence R(theta) U(u) = U(r(theta) u)") {
    const int n = 3;
    const Eigen::MatrixXcd u = testsupport::random_unitary(n, 33);
    const double theta = 0.62, phase = -0.44;
    // qubit side: the Givens gate on modes (1, 2)
    Circuit rc;
    rc.n_qubits = n;
    rc.push_layer({Gate::givens(1, theta, phase)});
    const Eigen::MatrixXcd lhs = circuit_to_dense(rc) * thouless_unitary(u);
    const Eigen::MatrixXcd rhs = thouless_unitary(apply_phased_givens(u, 1, theta, phase));
    CHECK((lhs - rhs).norm() <= 1e-9);
}
