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

#include "fermiswap/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fermiswap {

namespace {

using nlohmann::json;

void fail(const std::string& message) { throw std::invalid_argument(message); }

void check_fields(const json& j, const std::string& what,
                  const std::vector<std::string>& required,
                  const std::vector<std::string>& optional = {}) {
    if (!j.is_object()) fail(what + ": expected a JSON object");
    for (const auto& key : required)
        if (!j.contains(key)) fail(what + ": missing field \"" + key + "\"");
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const auto& k : required) known = known || k == key;
        for (const auto& k : optional) known = known || k == key;
        if (!known) fail(what + ": unknown field \"" + key + "\"");
    }
}

std::vector<double> reals(const json& j, const std::string& what, std::size_t expected) {
    if (!j.is_array() || j.size() != expected)
        fail(what + ": expected an array of " + std::to_string(expected) + " reals");
    std::vector<double> out;
    out.reserve(expected);
    for (const auto& v : j) {
        if (!v.is_number()) fail(what + ": expected a real number");
        out.push_back(v.get<double>());
    }
    return out;
}

void escape_string(const std::string& s, std::string& out) {
    out += '"';
    for (unsigned char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (ch < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += static_cast<char>(ch);
                }
        }
    }
    out += '"';
}

void emit(const json& j, std::string& out) {
    switch (j.type()) {
        case json::value_t::null: out += "null"; break;
        case json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
        case json::value_t::number_integer:
            out += std::to_string(j.get<std::int64_t>());
            break;
        case json::value_t::number_unsigned:
            out += std::to_string(j.get<std::uint64_t>());
            break;
        case json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) fail("cannot serialize a non-finite number");
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            out += buf;
            break;
        }
        case json::value_t::string: escape_string(j.get<std::string>(), out); break;
        case json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ',';
                first = false;
                emit(v, out);
            }
            out += ']';
            break;
        }
        case json::value_t::object: {
            out += '{';
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ',';
                first = false;
                escape_string(key, out);
                out += ':';
                emit(value, out);
            }
            out += '}';
            break;
        }
        default: fail("cannot serialize this JSON value");
    }
}

}  // namespace

std::string to_stable_json(const json& j) {
    std::string out;
    emit(j, out);
    out += '\n';
    return out;
}

json hamiltonian_to_json(const FermionHamiltonian& h) {
    json j;
    j["n_modes"] = h.n_modes;
    std::vector<double> t, v, u;
    for (int i = 0; i < h.n_modes; ++i)
        for (int k = 0; k < h.n_modes; ++k) t.push_back(h.one_body(i, k));
    for (int i = 0; i < h.n_modes; ++i) u.push_back(h.potential(i));
    for (int i = 0; i < h.n_modes; ++i)
        for (int k = 0; k < h.n_modes; ++k) v.push_back(h.interaction(i, k));
    j["T"] = t;
    j["U"] = u;
    j["V"] = v;
    return j;
}

FermionHamiltonian hamiltonian_from_json(const json& j) {
    check_fields(j, "hamiltonian", {"n_modes", "T", "U", "V"});
    if (!j["n_modes"].is_number_integer()) fail("hamiltonian: n_modes must be an integer");
    const int n = j["n_modes"].get<int>();
    if (n < 1) fail("hamiltonian: n_modes must be positive");
    const auto t = reals(j["T"], "hamiltonian T", static_cast<std::size_t>(n) * n);
    const auto u = reals(j["U"], "hamiltonian U", n);
    const auto v = reals(j["V"], "hamiltonian V", static_cast<std::size_t>(n) * n);
    Eigen::MatrixXd tm(n, n), vm(n, n);
    Eigen::VectorXd uv(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) tm(i, k) = t[i * n + k];
    for (int i = 0; i < n; ++i) uv(i) = u[i];
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) vm(i, k) = v[i * n + k];
    return build_hamiltonian(tm, uv, vm);
}

json hubbard_to_json(const HubbardParams& p) {
    json j;
    j["rows"] = p.rows;
    j["cols"] = p.cols;
    j["t"] = p.t_hop;
    j["U"] = p.u_int;
    return j;
}

HubbardParams hubbard_from_json(const json& j) {
    check_fields(j, "hubbard", {"rows", "cols", "t", "U"});
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
        fail("hubbard: rows and cols must be integers");
    if (!j["t"].is_number() || !j["U"].is_number()) fail("hubbard: t and U must be numbers");
    HubbardParams p;
    p.rows = j["rows"].get<int>();
    p.cols = j["cols"].get<int>();
    p.t_hop = j["t"].get<double>();
    p.u_int = j["U"].get<double>();
    if (p.rows < 1 || p.cols < 1) fail("hubbard: rows and cols must be positive");
    return p;
}

json rotation_to_json(const RotationSpec& spec) {
    json j;
    j["n"] = spec.n;
    if (spec.eta) j["eta"] = *spec.eta;
    std::vector<double> re, im;
    for (int i = 0; i < spec.matrix.rows(); ++i) {
        for (int k = 0; k < spec.matrix.cols(); ++k) {
            re.push_back(spec.matrix(i, k).real());
            im.push_back(spec.matrix(i, k).imag());
        }
    }
    j["re"] = re;
    j["im"] = im;
    return j;
}

RotationSpec rotation_from_json(const json& j) {
    check_fields(j, "rotation", {"n", "re"}, {"eta", "im"});
    if (!j["n"].is_number_integer()) fail("rotation: n must be an integer");
    RotationSpec spec;
    spec.n = j["n"].get<int>();
    if (spec.n < 1) fail("rotation: n must be positive");
    int rows = spec.n;
    if (j.contains("eta")) {
        if (!j["eta"].is_number_integer()) fail("rotation: eta must be an integer");
        spec.eta = j["eta"].get<int>();
        if (*spec.eta < 1 || *spec.eta > spec.n) fail("rotation: need 1 <= eta <= n");
        rows = *spec.eta;
    }
    const std::size_t count = static_cast<std::size_t>(rows) * spec.n;
    const auto re = reals(j["re"], "rotation re", count);
    std::vector<double> im(count, 0.0);
    if (j.contains("im")) im = reals(j["im"], "rotation im", count);
    spec.matrix.resize(rows, spec.n);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < spec.n; ++k)
            spec.matrix(i, k) = {re[i * spec.n + k], im[i * spec.n + k]};
    return spec;
}

json circuit_to_json(const Circuit& c) {
    json layers = json::array();
    for (const auto& layer : c.layers) {
        json jl = json::array();
        for (const auto& g : layer) {
            json jg;
            jg["kind"] = gate_kind_name(g.kind);
            jg["qubits"] = g.two_qubit() ? json::array({g.q0, g.q1}) : json::array({g.q0});
            switch (g.kind) {
                case GateKind::FSim:
                case GateKind::Givens: jg["params"] = json::array({g.p0, g.p1}); break;
                case GateKind::Phase: jg["params"] = json::array({g.p0}); break;
                case GateKind::FSwap: jg["params"] = json::array(); break;
            }
            jl.push_back(jg);
        }
        layers.push_back(jl);
    }
    json j;
    j["n_qubits"] = c.n_qubits;
    j["layers"] = layers;
    j["metadata"] = c.metadata;
    return j;
}

Circuit circuit_from_json(const json& j) {
    check_fields(j, "circuit", {"n_qubits", "layers", "metadata"});
    if (!j["n_qubits"].is_number_integer()) fail("circuit: n_qubits must be an integer");
    if (!j["layers"].is_array()) fail("circuit: layers must be an array");
    Circuit c;
    c.n_qubits = j["n_qubits"].get<int>();
    for (const auto& jl : j["layers"]) {
        if (!jl.is_array()) fail("circuit: each layer must be an array");
        std::vector<Gate> layer;
        for (const auto& jg : jl) {
            check_fields(jg, "gate", {"kind", "qubits", "params"});
            const std::string kind = jg["kind"].get<std::string>();
            const auto& q = jg["qubits"];
            const auto& p = jg["params"];
            if (!q.is_array() || !p.is_array()) fail("gate: qubits and params must be arrays");
            Gate g;
            if (kind == "fsim" || kind == "givens") {
                if (q.size() != 2 || p.size() != 2) fail("gate: " + kind + " takes 2 qubits, 2 params");
                g.kind = kind == "fsim" ? GateKind::FSim : GateKind::Givens;
                g.q0 = q[0].get<int>();
                g.q1 = q[1].get<int>();
                g.p0 = p[0].get<double>();
                g.p1 = p[1].get<double>();
            } else if (kind == "phase") {
                if (q.size() != 1 || p.size() != 1) fail("gate: phase takes 1 qubit, 1 param");
                g.kind = GateKind::Phase;
                g.q0 = q[0].get<int>();
                g.p0 = p[0].get<double>();
            } else if (kind == "fswap") {
                if (q.size() != 2 || !p.empty()) fail("gate: fswap takes 2 qubits, 0 params");
                g.kind = GateKind::FSwap;
                g.q0 = q[0].get<int>();
                g.q1 = q[1].get<int>();
            } else {
                fail("gate: unknown kind \"" + kind + "\"");
            }
            layer.push_back(g);
        }
        c.layers.push_back(std::move(layer));
    }
    if (!j["metadata"].is_object()) fail("circuit: metadata must be an object");
    c.metadata = j["metadata"];
    validate_circuit(c);
    return c;
}

json report_entry(const std::string& check, int n, double metric, double tolerance, bool pass,
                  double seconds) {
    json j;
    j["check"] = check;
    j["n"] = n;
    j["metric"] = metric;
    j["tolerance"] = tolerance;
    j["pass"] = pass;
    j["seconds"] = seconds;
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << contents;
    if (!out) throw std::invalid_argument("write failed for " + path);
}

}  // namespace fermiswap
