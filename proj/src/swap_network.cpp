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

#include "fermiswap/swap_network.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fermiswap {

namespace {

nlohmann::json order_to_json(const std::vector<int>& order) {
    return nlohmann::json(order);
}

}  // namespace

std::size_t SwapSchedule::swap_count() const {
    std::size_t total = 0;
    for (const auto& layer : layers) total += layer.size();
    return total;
}

SwapSchedule swap_network_schedule(int n) {
    if (n < 2) throw std::invalid_argument("swap network needs n >= 2");
    SwapSchedule s;
    s.n = n;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);

    const int n_layers = (n == 2) ? 1 : n;
    for (int l = 1; l <= n_layers; ++l) {
        std::vector<SwapSchedule::Swap> layer;
        for (int i = (l % 2 == 1) ? 0 : 1; i + 1 < n; i += 2) {
            layer.push_back({i, order[i], order[i + 1]});
            std::swap(order[i], order[i + 1]);
        }
        s.layers.push_back(std::move(layer));
    }
    s.final_order = order;
    for (int l = 0; l < static_cast<int>(s.layers.size()); ++l)
        for (const auto& sw : s.layers[l]) s.services.push_back({l, sw.pos, sw.orb_a, sw.orb_b, true});
    return s;
}

Circuit synthesize_trotter_step(const FermionHamiltonian& h, double t, int order) {
    if (order != 1 && order != 2) throw std::invalid_argument("unsupported Trotter order");
    if (h.n_modes < 2) throw std::invalid_argument("need at least two modes");
    if (!std::isfinite(t)) throw std::invalid_argument("non-finite time step");

    const int n = h.n_modes;
    const SwapSchedule sched = swap_network_schedule(n);

    Circuit c;
    c.n_qubits = n;

    auto phase_layer = [&](double dt) {
        std::vector<Gate> layer;
        for (int p = 0; p < n; ++p)
            layer.push_back(Gate::phase(p, -(h.potential(p) + h.one_body(p, p)) * dt));
        return layer;
    };
    auto fsim_layer = [&](const std::vector<SwapSchedule::Swap>& swaps, double dt) {
        std::vector<Gate> layer;
        for (const auto& sw : swaps)
            layer.push_back(Gate::fsim(sw.pos, h.hopping(sw.orb_a, sw.orb_b) * dt,
                                       h.pair_interaction(sw.orb_a, sw.orb_b) * dt));
        return layer;
    };

    if (order == 1) {
        c.push_layer(phase_layer(t));
        for (const auto& layer : sched.layers) c.push_layer(fsim_layer(layer, t));
        c.metadata["final_order"] = order_to_json(sched.final_order);
    } else {
        const int last = static_cast<int>(sched.layers.size()) - 1;
        c.push_layer(phase_layer(t));
        for (int l = 0; l < last; ++l) c.push_layer(fsim_layer(sched.layers[l], t));
        // Doubled interaction at the temporal midpoint with the swap
        // cancelled: an fswap layer followed by fsim at twice the angles.
        std::vector<Gate> cancel;
        for (const auto& sw : sched.layers[last]) cancel.push_back(Gate::fswap(sw.pos));
        c.push_layer(std::move(cancel));
        c.push_layer(fsim_layer(sched.layers[last], 2.0 * t));
        for (int l = last - 1; l >= 0; --l) c.push_layer(fsim_layer(sched.layers[l], t));
        c.push_layer(phase_layer(t));
        std::vector<int> identity(n);
        std::iota(identity.begin(), identity.end(), 0);
        c.metadata["final_order"] = order_to_json(identity);
    }

    c.metadata["kind"] = "trotter_step";
    c.metadata["order"] = order;
    c.metadata["time"] = t;
    c.metadata["constant_offset"] = jordan_wigner(h).constant_offset;
    return c;
}

namespace {

enum class Stagger { Left, Right };

// U_L swaps (0,1),(2,3),...; U_R swaps (1,2),(3,4),....
int stagger_start(Stagger s) { return s == Stagger::Left ? 0 : 1; }

// One U_L, k circulation blocks U_R U_L, the whole series reversed back to
// the identity ordering, then k blocks circulating the other way.
std::vector<Stagger> stagger_sequence(int k) {
    std::vector<Stagger> fwd{Stagger::Left};
    for (int i = 0; i < k; ++i) {
        fwd.push_back(Stagger::Right);
        fwd.push_back(Stagger::Left);
    }
    std::vector<Stagger> seq = fwd;
    seq.insert(seq.end(), fwd.rbegin(), fwd.rend());
    for (int i = 0; i < k; ++i) {
        seq.push_back(Stagger::Right);
        seq.push_back(Stagger::Left);
    }
    return seq;
}

struct Replay {
    std::vector<std::vector<SwapSchedule::Swap>> layers;
    std::vector<SwapSchedule::Service> services;
    std::vector<int> final_order;
    bool complete = false;
};

Replay replay_stagger(const HubbardInstance& inst, int k) {
    const int n = inst.n_modes();
    std::set<std::pair<int, int>> wanted(inst.hop_edges.begin(), inst.hop_edges.end());
    wanted.insert(inst.onsite_pairs.begin(), inst.onsite_pairs.end());

    Replay rep;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::set<std::pair<int, int>> serviced;
    const std::vector<Stagger> seq = stagger_sequence(k);

    auto scan = [&](int config) {
        for (int i = 0; i + 1 < n; ++i) {
            std::pair<int, int> key{std::min(order[i], order[i + 1]),
                                    std::max(order[i], order[i + 1])};
            if (!wanted.count(key) || serviced.count(key)) continue;
            serviced.insert(key);
            const bool next_swaps_pair =
                config < static_cast<int>(seq.size()) && (i % 2 == stagger_start(seq[config]) % 2);
            rep.services.push_back({config, i, order[i], order[i + 1], next_swaps_pair});
        }
    };

    scan(0);
    for (int l = 0; l < static_cast<int>(seq.size()); ++l) {
        std::vector<SwapSchedule::Swap> layer;
        for (int i = stagger_start(seq[l]); i + 1 < n; i += 2) {
            layer.push_back({i, order[i], order[i + 1]});
            std::swap(order[i], order[i + 1]);
        }
        rep.layers.push_back(std::move(layer));
        scan(l + 1);
    }
    rep.final_order = order;
    rep.complete = serviced.size() == wanted.size();
    return rep;
}

}  // namespace

SwapSchedule hubbard_swap_schedule(const HubbardInstance& inst) {
    const int n = inst.n_modes();
    const int seed = std::max(0, static_cast<int>(std::ceil(std::sqrt(n / 8.0))) - 1);

    Replay rep;
    for (int k = seed;; ++k) {
        rep = replay_stagger(inst, k);
        if (rep.complete) break;
        if (k > 2 * n) throw std::logic_error("hubbard schedule failed to converge");
    }

    // Drop trailing layers no service needs to reach; a fused service on a
    // dropped layer falls back to a standalone interaction.
    int keep = 0;
    for (const auto& sv : rep.services) keep = std::max(keep, sv.config);

    SwapSchedule s;
    s.n = n;
    s.layers.assign(rep.layers.begin(), rep.layers.begin() + keep);
    s.services = rep.services;
    for (auto& sv : s.services)
        if (sv.config >= keep) sv.fused = false;
    std::stable_sort(s.services.begin(), s.services.end(),
                     [](const SwapSchedule::Service& a, const SwapSchedule::Service& b) {
                         if (a.config != b.config) return a.config < b.config;
                         if (a.fused != b.fused) return !a.fused;  // standalone first
                         return a.pos < b.pos;
                     });
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (const auto& layer : s.layers)
        for (const auto& sw : layer) std::swap(order[sw.pos], order[sw.pos + 1]);
    s.final_order = order;
    return s;
}

Circuit synthesize_hubbard_trotter(const HubbardInstance& inst, double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("non-finite time step");
    const FermionHamiltonian h = hubbard_to_hamiltonian(inst);
    const SwapSchedule sched = hubbard_swap_schedule(inst);
    const int n = inst.n_modes();

    std::map<std::pair<int, int>, const SwapSchedule::Service*> fused_at;
    std::map<int, std::vector<const SwapSchedule::Service*>> standalone_at;
    for (const auto& sv : sched.services) {
        if (sv.fused)
            fused_at[{sv.config, sv.pos}] = &sv;
        else
            standalone_at[sv.config].push_back(&sv);
    }
    const std::set<std::pair<int, int>> onsite(inst.onsite_pairs.begin(), inst.onsite_pairs.end());

    Circuit c;
    c.n_qubits = n;
    const int n_layers = static_cast<int>(sched.layers.size());
    for (int config = 0; config <= n_layers; ++config) {
        if (auto it = standalone_at.find(config); it != standalone_at.end()) {
            for (const SwapSchedule::Service* sv : it->second) {
                const std::pair<int, int> key{std::min(sv->orb_a, sv->orb_b),
                                              std::max(sv->orb_a, sv->orb_b)};
                if (!onsite.count(key)) {
                    // Hopping term without a swap: a plain Givens rotation.
                    c.push(Gate::givens(sv->pos, h.hopping(sv->orb_a, sv->orb_b) * t,
                                        std::numbers::pi / 2));
                } else {
                    // Onsite term without a swap: fswap then fsim(0, w)
                    // compose to the bare density-density interaction.
                    c.push(Gate::fswap(sv->pos));
                    c.push(Gate::fsim(sv->pos, 0.0, h.pair_interaction(sv->orb_a, sv->orb_b) * t));
                }
            }
        }
        if (config == n_layers) break;
        std::vector<Gate> layer;
        for (const auto& sw : sched.layers[config]) {
            if (auto it = fused_at.find({config, sw.pos}); it != fused_at.end()) {
                const auto* sv = it->second;
                layer.push_back(Gate::fsim(sw.pos, h.hopping(sv->orb_a, sv->orb_b) * t,
                                           h.pair_interaction(sv->orb_a, sv->orb_b) * t));
            } else {
                layer.push_back(Gate::fswap(sw.pos));
            }
        }
        c.push_layer(std::move(layer));
    }

    c.metadata["kind"] = "hubbard_trotter";
    c.metadata["rows"] = inst.rows;
    c.metadata["cols"] = inst.cols;
    c.metadata["t_hop"] = inst.t_hop;
    c.metadata["u_int"] = inst.u_int;
    c.metadata["time"] = t;
    c.metadata["swap_layers"] = n_layers;
    c.metadata["final_order"] = order_to_json(sched.final_order);
    return c;
}

}  // namespace fermiswap
