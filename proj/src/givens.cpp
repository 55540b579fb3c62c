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

#include "fermiswap/givens.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fermiswap {

using namespace std::complex_literals;
using Complex = std::complex<double>;

namespace {

constexpr double kPivotTol = 1e-14;
constexpr double kUnitaryTol = 1e-10;

void require(bool cond, const std::string& message) {
    if (!cond) throw std::invalid_argument(message);
}

double wrap_angle(double a) {
    while (a > std::numbers::pi) a -= 2 * std::numbers::pi;
    while (a <= -std::numbers::pi) a += 2 * std::numbers::pi;
    return a;
}

// Angles of the row rotation that zeroes the (q, col) element against the
// row above it: row_q' = e^{-i phase} sin(theta) row_p + cos(theta) row_q.
std::pair<double, double> zeroing_angles(Complex above, Complex target) {
    const double theta = std::atan2(std::abs(target), std::abs(above));
    const double phase = wrap_angle(std::arg(above) - std::arg(target) - std::numbers::pi);
    return {theta, phase};
}

// Column pair update of the right-multiplied phased Givens on (col, col+1):
// col'   =  cos(theta) col + e^{-i phase} sin(theta) col+1
// col+1' = -e^{i phase} sin(theta) col + cos(theta) col+1
void apply_column_rotation(Eigen::MatrixXcd& a, int col, double theta, double phase) {
    const Complex c = std::cos(theta);
    const Complex s_fwd = std::exp(-1i * phase) * std::sin(theta);
    const Complex s_bwd = -std::exp(1i * phase) * std::sin(theta);
    const Eigen::VectorXcd left = a.col(col);
    a.col(col) = c * left + s_fwd * a.col(col + 1);
    a.col(col + 1) = s_bwd * left + c * a.col(col + 1);
}

// Angles zeroing entry (row, col+1) of a under apply_column_rotation.
std::pair<double, double> column_zeroing_angles(const Eigen::MatrixXcd& a, int row, int col) {
    const double theta = std::atan2(std::abs(a(row, col + 1)), std::abs(a(row, col)));
    const double phase = wrap_angle(std::arg(a(row, col + 1)) - std::arg(a(row, col)));
    return {theta, phase};
}

struct ColumnRotation {
    int col = 0;  // acts on columns (col, col+1)
    double theta = 0.0;
    double phase = 0.0;
};

// Row pre-reduction (free of gates: it only changes the state's global
// phase, and phased Givens row updates have unit determinant): confine row
// i to columns 0..width-1+i.
void row_reduce_staircase(Eigen::MatrixXcd& q, int width) {
    const int eta = static_cast<int>(q.rows());
    const int n = static_cast<int>(q.cols());
    for (int j = n - 1; j >= width; --j) {
        for (int i = 0; i <= j - width && i + 1 < eta; ++i) {
            if (std::abs(q(i, j)) < kPivotTol) continue;
            const double theta = std::atan2(std::abs(q(i, j)), std::abs(q(i + 1, j)));
            const double phase = wrap_angle(std::arg(q(i, j)) - std::arg(q(i + 1, j)));
            const Complex c = std::cos(theta);
            const Complex s = std::sin(theta);
            const Eigen::RowVectorXcd top = q.row(i);
            q.row(i) = c * top - std::exp(1i * phase) * s * q.row(i + 1);
            q.row(i + 1) = std::exp(-1i * phase) * s * top + c * q.row(i + 1);
        }
    }
}

// Eliminates the virtual-column block of an orthonormal eta x n matrix with
// adjacent-column rotations: row i ends supported on column i alone. The
// collected rotations satisfy q * g_1 * ... * g_m = [diag | 0].
std::vector<ColumnRotation> eliminate_to_corner(Eigen::MatrixXcd& q) {
    const int eta = static_cast<int>(q.rows());
    const int n = static_cast<int>(q.cols());
    const int width = n - eta + 1;  // row i may span columns 0..width-1+i
    row_reduce_staircase(q, width);
    std::vector<ColumnRotation> rotations;
    for (int i = 0; i < eta; ++i) {
        for (int j = width - 1 + i; j > i; --j) {
            if (std::abs(q(i, j)) < kPivotTol) continue;
            auto [theta, phase] = column_zeroing_angles(q, i, j - 1);
            apply_column_rotation(q, j - 1, theta, phase);
            rotations.push_back({j - 1, theta, phase});
        }
    }
    return rotations;
}

// ASAP layering of a gate sequence: each gate lands in the first layer after
// every earlier gate touching one of its qubits.
std::vector<std::vector<Gate>> schedule_asap(const std::vector<Gate>& seq, int n_qubits) {
    std::vector<int> last(n_qubits, -1);
    std::vector<std::vector<Gate>> layers;
    for (const Gate& g : seq) {
        int layer = last[g.q0] + 1;
        if (g.two_qubit()) layer = std::max(layer, last[g.q1] + 1);
        if (layer == static_cast<int>(layers.size())) layers.emplace_back();
        layers[layer].push_back(g);
        last[g.q0] = layer;
        if (g.two_qubit()) last[g.q1] = layer;
    }
    return layers;
}

std::size_t rotation_depth(const Circuit& c) {
    std::size_t depth = 0;
    for (const auto& layer : c.layers)
        for (const auto& g : layer)
            if (g.kind == GateKind::Givens) {
                ++depth;
                break;
            }
    return depth;
}

}  // namespace

std::size_t GivensPlan::rotation_count() const {
    std::size_t total = 0;
    for (const auto& layer : layers) total += layer.size();
    return total;
}

SlaterDeterminant make_slater(const Eigen::MatrixXcd& coeffs) {
    SlaterDeterminant d;
    d.eta = static_cast<int>(coeffs.rows());
    d.n = static_cast<int>(coeffs.cols());
    d.coeffs = coeffs;
    require(d.eta >= 1 && d.eta <= d.n, "need 1 <= eta <= n");
    const Eigen::MatrixXcd gram = coeffs * coeffs.adjoint();
    require((gram - Eigen::MatrixXcd::Identity(d.eta, d.eta)).cwiseAbs().maxCoeff() <= kUnitaryTol,
            "slater rows must be orthonormal");
    return d;
}

Eigen::MatrixXcd apply_phased_givens(const Eigen::MatrixXcd& a, int p, double theta, double phase) {
    Eigen::MatrixXcd out = a;
    apply_phased_givens_inplace(out, p, theta, phase);
    return out;
}

void apply_phased_givens_inplace(Eigen::MatrixXcd& a, int p, double theta, double phase) {
    require(p >= 0 && p + 1 < a.rows(), "row index out of range");
    const Complex c = std::cos(theta);
    const Complex s = std::sin(theta);
    const Eigen::RowVectorXcd top = a.row(p);
    a.row(p) = c * top - std::exp(1i * phase) * s * a.row(p + 1);
    a.row(p + 1) = std::exp(-1i * phase) * s * top + c * a.row(p + 1);
}

GivensPlan givens_decompose(const Eigen::MatrixXcd& u) {
    const int n = static_cast<int>(u.rows());
    require(n >= 1 && u.cols() == n, "u must be square");
    require((u * u.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() <=
                kUnitaryTol,
            "u is not unitary");

    GivensPlan plan;
    plan.n = n;
    Eigen::MatrixXcd a = u;
    // Staircase order: the subdiagonal element (i, j) belongs to parallel
    // layer n - i + 2j (0-based indices, layers 1-based); each is zeroed
    // against the row above.
    for (int layer = 1; layer <= 2 * n - 3; ++layer) {
        std::vector<GivensPlan::Rotation> rotations;
        for (int j = 0; j < n - 1; ++j) {
            const int i = n - layer + 2 * j;
            if (i <= j || i > n - 1) continue;
            if (std::abs(a(i, j)) < kPivotTol) continue;
            auto [theta, phase] = zeroing_angles(a(i - 1, j), a(i, j));
            apply_phased_givens_inplace(a, i - 1, theta, phase);
            rotations.push_back({i - 1, theta, phase});
        }
        if (!rotations.empty()) plan.layers.push_back(std::move(rotations));
    }
    plan.diag_phases.resize(n);
    for (int p = 0; p < n; ++p) plan.diag_phases[p] = std::arg(a(p, p));
    return plan;
}

Circuit plan_to_circuit(const GivensPlan& plan, bool invert) {
    Circuit c;
    c.n_qubits = plan.n;
    auto phase_layer = [&](double sign) {
        std::vector<Gate> layer;
        for (int p = 0; p < plan.n; ++p) layer.push_back(Gate::phase(p, sign * plan.diag_phases[p]));
        return layer;
    };
    if (invert) {
        // U(u) = (prod_k R_k)^+ U(diag): phases exp(i phi_p n_p) first, then
        // the rotation sequence reversed with negated angles.
        c.push_layer(phase_layer(+1.0));
        for (auto it = plan.layers.rbegin(); it != plan.layers.rend(); ++it) {
            std::vector<Gate> layer;
            for (const auto& r : *it) layer.push_back(Gate::givens(r.row, -r.theta, r.phase));
            c.push_layer(std::move(layer));
        }
    } else {
        for (const auto& plan_layer : plan.layers) {
            std::vector<Gate> layer;
            for (const auto& r : plan_layer) layer.push_back(Gate::givens(r.row, r.theta, r.phase));
            c.push_layer(std::move(layer));
        }
        c.push_layer(phase_layer(-1.0));
    }
    c.metadata["kind"] = "basis_rotation";
    c.metadata["inverse"] = !invert;
    return c;
}

Circuit slater_prep_circuit(const SlaterDeterminant& d) {
    const int n = d.n, eta = d.eta;
    const bool holes = eta > n / 2;

    std::vector<ColumnRotation> rotations;
    Eigen::MatrixXcd reduced;
    if (!holes) {
        reduced = d.coeffs;
        rotations = eliminate_to_corner(reduced);
    } else {
        // Rotate the holes: eliminate on an orthonormal basis of the
        // row-space complement with the column order mirrored, then map the
        // rotations back through that mirror. Column rotations carry the
        // complement along with the particle matrix (Q g (H g)+ = Q H+), so
        // the particle matrix follows the same rotations.
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(d.coeffs, Eigen::ComputeFullV);
        Eigen::MatrixXcd hole = svd.matrixV().rightCols(n - eta).adjoint();
        Eigen::MatrixXcd mirrored = hole.rowwise().reverse();
        std::vector<ColumnRotation> raw = eliminate_to_corner(mirrored);
        reduced = d.coeffs;
        for (const auto& r : raw) {
            const ColumnRotation mapped{n - 2 - r.col, -r.theta, -r.phase};
            rotations.push_back(mapped);
            apply_column_rotation(reduced, mapped.col, mapped.theta, mapped.phase);
        }
    }

    // reduced = [W | 0]; the leading block's determinant is the leftover
    // phase, applied up front where the start state is still an eigenstate.
    const Complex det = reduced.leftCols(eta).determinant();
    const double gamma = std::arg(det);

    std::vector<Gate> seq;
    if (std::abs(gamma) > 1e-15) seq.push_back(Gate::phase(0, gamma));
    for (auto it = rotations.rbegin(); it != rotations.rend(); ++it)
        seq.push_back(Gate::givens(it->col, it->theta, -it->phase));

    Circuit c;
    c.n_qubits = n;
    for (auto& layer : schedule_asap(seq, n)) c.push_layer(std::move(layer));
    c.metadata["kind"] = "slater_prep";
    c.metadata["eta"] = eta;
    c.metadata["rotation_count"] = rotations.size();
    c.metadata["rotation_depth"] = rotation_depth(c);
    c.metadata["path"] = holes ? "holes" : "particles";
    return c;
}

Circuit spin_split_prep(const SlaterDeterminant& d_up, const SlaterDeterminant& d_down,
                        int n_qubits) {
    require(n_qubits == d_up.n + d_down.n, "sector sizes do not add up to the chain length");
    return spin_split_prep(d_up, d_down);
}

Circuit spin_split_prep(const SlaterDeterminant& d_up, const SlaterDeterminant& d_down) {
    const Circuit up = slater_prep_circuit(d_up);
    const Circuit down = slater_prep_circuit(d_down);

    Circuit c;
    c.n_qubits = d_up.n + d_down.n;
    const std::size_t depth = std::max(up.layers.size(), down.layers.size());
    for (std::size_t l = 0; l < depth; ++l) {
        std::vector<Gate> layer;
        if (l < up.layers.size()) layer = up.layers[l];
        if (l < down.layers.size()) {
            for (Gate g : down.layers[l]) {
                g.q0 += d_up.n;
                if (g.q1 >= 0) g.q1 += d_up.n;
                layer.push_back(g);
            }
        }
        c.push_layer(std::move(layer));
    }
    c.metadata["kind"] = "spin_split_prep";
    c.metadata["eta_up"] = d_up.eta;
    c.metadata["eta_down"] = d_down.eta;
    c.metadata["n_up"] = d_up.n;
    c.metadata["rotation_count"] = static_cast<std::size_t>(up.metadata["rotation_count"]) +
                                   static_cast<std::size_t>(down.metadata["rotation_count"]);
    c.metadata["rotation_depth"] = rotation_depth(c);
    return c;
}

}  // namespace fermiswap
