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
#include "givens.hpp"
#include "hamiltonian.hpp"

#include <json.hpp>
#include <optional>
#include <string>

namespace fermiswap {

// File schemas. Field names are fixed; parsers reject unknown fields.
//
//   Hamiltonian  {"n_modes": int, "T": [n*n], "U": [n], "V": [n*n]}
//   Hubbard      {"rows": int, "cols": int, "t": real, "U": real}
//   Rotation     {"n": int, "eta": int (optional), "re": [...], "im": [...]}
//   Circuit      {"n_qubits": int, "layers": [[gate...]], "metadata": {...}}
//     gate       {"kind": "fsim"|"givens"|"phase"|"fswap",
//                 "qubits": [q] or [q, q+1], "params": [reals]}

/// Deterministic emitter: sorted object keys, doubles at 17 significant
/// digits ("%.17g"), so identical values give identical bytes and parsing
/// recovers every double exactly.
std::string to_stable_json(const nlohmann::json& j);

nlohmann::json hamiltonian_to_json(const FermionHamiltonian& h);
FermionHamiltonian hamiltonian_from_json(const nlohmann::json& j);

struct HubbardParams {
    int rows = 0, cols = 0;
    double t_hop = 0.0, u_int = 0.0;
};
nlohmann::json hubbard_to_json(const HubbardParams& p);
HubbardParams hubbard_from_json(const nlohmann::json& j);

/// Rotation input: a full n x n unitary (no "eta") or an eta x n Slater
/// coefficient matrix ("eta" present). "im" may be omitted for real input.
struct RotationSpec {
    int n = 0;
    std::optional<int> eta;
    Eigen::MatrixXcd matrix;  // eta x n when eta is set, else n x n
};
nlohmann::json rotation_to_json(const RotationSpec& spec);
RotationSpec rotation_from_json(const nlohmann::json& j);

nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

/// One verification line: {"check", "n", "metric", "tolerance", "pass",
/// "seconds"}.
nlohmann::json report_entry(const std::string& check, int n, double metric, double tolerance,
                            bool pass, double seconds);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace fermiswap
