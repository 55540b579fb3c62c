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

#include "fermiswap/cli.hpp"

#include "fermiswap/givens.hpp"
#include "fermiswap/hamiltonian.hpp"
#include "fermiswap/serialize.hpp"
#include "fermiswap/simulator.hpp"
#include "fermiswap/swap_network.hpp"

#include <CLI11.hpp>

#include <bit>
#include <chrono>
#include <cstdlib>
#include <map>
#include <set>

namespace fermiswap {

namespace {

using nlohmann::json;

constexpr int kDenseVerifyCap = 10;
constexpr int kConservationCap = 8;
constexpr int kStateVerifyCap = 20;

json stats_json(const Circuit& c) {
    const CircuitStats s = circuit_stats(c);
    json counts = json::object();
    for (const auto& [kind, count] : s.per_kind_counts) counts[kind] = count;
    json j;
    j["two_qubit_count"] = s.two_qubit_count;
    j["depth"] = s.depth;
    j["per_kind_counts"] = counts;
    return j;
}

struct Reporter {
    json entries = json::array();
    bool all_pass = true;
    std::chrono::steady_clock::time_point mark = std::chrono::steady_clock::now();

    void add(const std::string& check, int n, double metric, double tolerance) {
        const auto now = std::chrono::steady_clock::now();
        const double seconds = std::chrono::duration<double>(now - mark).count();
        mark = now;
        const bool pass = metric <= tolerance;
        all_pass = all_pass && pass;
        entries.push_back(report_entry(check, n, metric, tolerance, pass, seconds));
    }
};

double coverage_defect(const SwapSchedule& sched, const std::set<std::pair<int, int>>& wanted) {
    std::map<std::pair<int, int>, int> hits;
    for (const auto& sv : sched.services) {
        hits[{std::min(sv.orb_a, sv.orb_b), std::max(sv.orb_a, sv.orb_b)}]++;
    }
    double defect = 0;
    for (const auto& pair : wanted) {
        auto it = hits.find(pair);
        const int count = it == hits.end() ? 0 : it->second;
        defect += std::abs(count - 1);
        if (it != hits.end()) hits.erase(it);
    }
    defect += static_cast<double>(hits.size());  // services outside the term set
    return defect;
}

// Replays the schedule and accumulates how far any serviced pair sits from
// chain adjacency when serviced (0 when the schedule is honest).
double adjacency_defect(const SwapSchedule& sched) {
    std::vector<int> order(sched.n);
    for (int i = 0; i < sched.n; ++i) order[i] = i;
    std::map<int, std::vector<const SwapSchedule::Service*>> by_config;
    for (const auto& sv : sched.services) by_config[sv.config].push_back(&sv);
    double defect = 0;
    auto check_config = [&](int config) {
        auto it = by_config.find(config);
        if (it == by_config.end()) return;
        for (const auto* sv : it->second) {
            if (sv->pos + 1 >= sched.n || order[sv->pos] != sv->orb_a ||
                order[sv->pos + 1] != sv->orb_b)
                defect += 1;
        }
    };
    check_config(0);
    for (int l = 0; l < static_cast<int>(sched.layers.size()); ++l) {
        for (const auto& sw : sched.layers[l]) std::swap(order[sw.pos], order[sw.pos + 1]);
        check_config(l + 1);
    }
    return defect;
}

double number_conservation_defect(const Eigen::MatrixXcd& u) {
    Eigen::MatrixXcd num = Eigen::MatrixXcd::Zero(u.rows(), u.cols());
    for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(u.rows()); ++k)
        num(k, k) = static_cast<double>(std::popcount(k));
    return (u * num - num * u).cwiseAbs().maxCoeff();
}

void verify_trotter(const Circuit& c, const RunConfig& cfg, Reporter& rep) {
    const FermionHamiltonian h = hamiltonian_from_json(c.metadata.at("source"));
    const int n = h.n_modes;
    const int order = c.metadata.at("order").get<int>();
    const double t = c.metadata.at("time").get<double>();
    const SwapSchedule sched = swap_network_schedule(n);

    const CircuitStats stats = circuit_stats(c);
    const double expected =
        order == 1 ? n * (n - 1) / 2.0 : static_cast<double>(n) * (n - 1);
    rep.add("two_qubit_count", n, std::abs(static_cast<double>(stats.two_qubit_count) - expected),
            0.0);

    std::set<std::pair<int, int>> wanted;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) wanted.insert({p, q});
    rep.add("pair_coverage", n, coverage_defect(sched, wanted), 0.0);

    const std::vector<int> final_order = c.metadata.at("final_order").get<std::vector<int>>();
    double order_defect = 0;
    for (int i = 0; i < n; ++i) {
        const int expect = order == 1 ? n - 1 - i : i;
        if (final_order[i] != expect) order_defect += 1;
    }
    rep.add("final_order", n, order_defect, 0.0);

    if (n <= kDenseVerifyCap) {
        const Eigen::MatrixXcd uc = circuit_to_dense(c);
        const Eigen::MatrixXcd relabel = mode_permutation_unitary(invert_permutation(final_order));
        const Eigen::MatrixXcd ref = trotter_reference(h, sched, t, order);
        rep.add("trotter_reference", n,
                operator_distance(relabel.adjoint() * uc, ref, true), cfg.tolerance);
        if (n <= kConservationCap)
            rep.add("number_conservation", n, number_conservation_defect(uc), cfg.tolerance);
    }
    if (n <= kStateVerifyCap) {
        const Statevector psi = apply_circuit(random_state(n, cfg.seed), c, cfg.threads);
        rep.add("norm_preservation", n, std::abs(psi.norm() - 1.0), cfg.tolerance);
    }
}

void verify_hubbard(const Circuit& c, const RunConfig& cfg, Reporter& rep) {
    const HubbardInstance inst =
        hubbard_2d(c.metadata.at("rows").get<int>(), c.metadata.at("cols").get<int>(),
                   c.metadata.at("t_hop").get<double>(), c.metadata.at("u_int").get<double>());
    const int n = inst.n_modes();
    const double t = c.metadata.at("time").get<double>();
    const SwapSchedule sched = hubbard_swap_schedule(inst);

    std::set<std::pair<int, int>> wanted(inst.hop_edges.begin(), inst.hop_edges.end());
    wanted.insert(inst.onsite_pairs.begin(), inst.onsite_pairs.end());
    rep.add("term_coverage", n, coverage_defect(sched, wanted), 0.0);
    rep.add("service_adjacency", n, adjacency_defect(sched), 0.0);

    if (n <= kDenseVerifyCap) {
        const FermionHamiltonian h = hubbard_to_hamiltonian(inst);
        const Eigen::MatrixXcd uc = circuit_to_dense(c);
        const std::vector<int> final_order = c.metadata.at("final_order").get<std::vector<int>>();
        const Eigen::MatrixXcd relabel = mode_permutation_unitary(invert_permutation(final_order));
        const Eigen::MatrixXcd ref = trotter_reference(h, sched, t, 1);
        rep.add("trotter_reference", n,
                operator_distance(relabel.adjoint() * uc, ref, true), cfg.tolerance);
        if (n <= kConservationCap)
            rep.add("number_conservation", n, number_conservation_defect(uc), cfg.tolerance);
    }
    if (n <= kStateVerifyCap) {
        const Statevector psi = apply_circuit(random_state(n, cfg.seed), c, cfg.threads);
        rep.add("norm_preservation", n, std::abs(psi.norm() - 1.0), cfg.tolerance);
    }
}

void verify_slater(const Circuit& c, const RunConfig& cfg, Reporter& rep) {
    const RotationSpec spec = rotation_from_json(c.metadata.at("source"));
    const int n = spec.n;
    if (spec.eta && n <= 16) {
        const SlaterDeterminant d = make_slater(spec.matrix);
        const Statevector oracle = slater_amplitudes(d);
        const Statevector prepared =
            apply_circuit(Statevector::hartree_fock(n, d.eta), c, cfg.threads);
        const double overlap = std::abs(oracle.amplitudes.dot(prepared.amplitudes));
        rep.add("slater_fidelity", n, 1.0 - overlap, cfg.tolerance);
        const double count = static_cast<double>(c.metadata.at("rotation_count").get<std::size_t>());
        rep.add("rotation_count_bound", n,
                std::max(0.0, count - static_cast<double>(d.eta) * (n - d.eta)), 0.0);
    } else if (n <= kDenseVerifyCap) {
        rep.add("basis_rotation", n,
                operator_distance(circuit_to_dense(c), thouless_unitary(spec.matrix), true),
                cfg.tolerance);
    }
    if (n <= kStateVerifyCap) {
        const Statevector psi = apply_circuit(random_state(n, cfg.seed), c, cfg.threads);
        rep.add("norm_preservation", n, std::abs(psi.norm() - 1.0), cfg.tolerance);
    }
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Circuit c = circuit_from_json(json::parse(read_file(cfg.input_path)));
    if (!c.metadata.contains("kind")) throw std::invalid_argument("circuit metadata lacks kind");
    const std::string kind = c.metadata.at("kind").get<std::string>();

    Reporter rep;
    if (kind == "trotter_step")
        verify_trotter(c, cfg, rep);
    else if (kind == "hubbard_trotter")
        verify_hubbard(c, cfg, rep);
    else if (kind == "slater_prep" || kind == "basis_rotation")
        verify_slater(c, cfg, rep);
    else
        throw std::invalid_argument("cannot verify circuits of kind \"" + kind + "\"");

    const std::string text = to_stable_json(rep.entries);
    if (!cfg.output_path.empty()) write_file(cfg.output_path, text);
    out << text;
    if (!rep.all_pass) {
        err << to_stable_json(json{{"error", "verification failed"}, {"input", cfg.input_path}});
        return kExitVerifyFailed;
    }
    return kExitOk;
}

int run_synth(const RunConfig& cfg, std::ostream& out) {
    if (cfg.input_path.empty()) throw std::invalid_argument("--in is required");
    if (cfg.output_path.empty()) throw std::invalid_argument("--out is required");
    const json input = json::parse(read_file(cfg.input_path));

    Circuit c;
    switch (cfg.command) {
        case Command::SynthTrotter: {
            if (!cfg.t_given) throw std::invalid_argument("--t is required for synth-trotter");
            c = synthesize_trotter_step(hamiltonian_from_json(input), cfg.t, cfg.order);
            break;
        }
        case Command::SynthHubbard: {
            if (!cfg.t_given) throw std::invalid_argument("--t is required for synth-hubbard");
            const HubbardParams p = hubbard_from_json(input);
            c = synthesize_hubbard_trotter(hubbard_2d(p.rows, p.cols, p.t_hop, p.u_int), cfg.t);
            break;
        }
        case Command::SynthSlater: {
            const RotationSpec spec = rotation_from_json(input);
            if (spec.eta) {
                c = slater_prep_circuit(make_slater(spec.matrix));
            } else {
                c = plan_to_circuit(givens_decompose(spec.matrix), true);
                c.metadata["kind"] = "basis_rotation";
            }
            break;
        }
        default: throw std::logic_error("not a synth command");
    }
    c.metadata["source"] = input;
    c.metadata["stats"] = stats_json(c);
    write_file(cfg.output_path, to_stable_json(circuit_to_json(c)));
    out << to_stable_json(c.metadata["stats"]);
    return kExitOk;
}

int run_stats(const RunConfig& cfg, std::ostream& out) {
    if (cfg.input_path.empty()) throw std::invalid_argument("--in is required");
    const Circuit c = circuit_from_json(json::parse(read_file(cfg.input_path)));
    const std::string text = to_stable_json(stats_json(c));
    if (!cfg.output_path.empty()) write_file(cfg.output_path, text);
    out << text;
    return kExitOk;
}

}  // namespace

std::string usage_text() {
    return "usage: fermiswap <synth-trotter|synth-slater|synth-hubbard|verify|stats>\n"
           "  --in PATH --out PATH [--t TIME] [--order 1|2] [--seed N]\n"
           "  [--tol REAL] [--threads N]\n";
}

RunConfig parse_args(const std::vector<std::string>& argv) {
    CLI::App app{"fermionic swap network circuit synthesis"};
    app.require_subcommand(1);

    RunConfig cfg;
    static const std::map<std::string, Command> names = {
        {"synth-trotter", Command::SynthTrotter}, {"synth-slater", Command::SynthSlater},
        {"synth-hubbard", Command::SynthHubbard}, {"verify", Command::Verify},
        {"stats", Command::Stats}};
    for (const auto& [name, command] : names) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--in", cfg.input_path);
        sub->add_option("--out", cfg.output_path);
        sub->add_option("--t", cfg.t)->check(CLI::Number);
        sub->add_option("--order", cfg.order)->check(CLI::Range(1, 2));
        sub->add_option("--seed", cfg.seed);
        sub->add_option("--tol", cfg.tolerance)->check(CLI::PositiveNumber);
        sub->add_option("--threads", cfg.threads)->check(CLI::PositiveNumber);
    }

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        throw UsageError{std::string(e.what()) + "\n" + usage_text()};
    }
    for (const auto& [name, command] : names) {
        auto* sub = app.get_subcommand(name);
        if (sub->parsed()) {
            cfg.command = command;
            cfg.t_given = sub->count("--t") > 0;
        }
    }
    if (const char* env = std::getenv("FERMISWAP_SEED")) {
        try {
            cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError{"FERMISWAP_SEED must be an integer\n" + usage_text()};
        }
    }
    return cfg;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case Command::SynthTrotter:
            case Command::SynthHubbard:
            case Command::SynthSlater: return run_synth(config, out);
            case Command::Verify: return run_verify(config, out, err);
            case Command::Stats: return run_stats(config, out);
        }
        throw std::logic_error("unreachable command");
    } catch (const nlohmann::json::exception& e) {
        err << to_stable_json(json{{"error", e.what()}, {"input", config.input_path}});
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        err << to_stable_json(json{{"error", e.what()}, {"input", config.input_path}});
        return kExitBadInput;
    } catch (const std::domain_error& e) {
        err << to_stable_json(json{{"error", e.what()}, {"input", config.input_path}});
        return kExitBadInput;
    }
}

}  // namespace fermiswap
