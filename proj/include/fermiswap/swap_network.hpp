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
#include "hamiltonian.hpp"

namespace fermiswap {

/**
 * A layered plan of adjacent fermionic swaps plus the record of which
 * Hamiltonian term is serviced where.
 *
 * layers[l] holds the transpositions of swap layer l+1 together with the
 * orbitals resident when the layer executes. Configuration c is the orbital
 * ordering after c layers (configuration 0 = identity). services lists, in
 * execution order, every interaction applied by a circuit built from this
 * schedule: at configuration `config`, orbitals (orb_a, orb_b) sit on chain
 * positions (pos, pos+1); `fused` means layer config+1 swaps that pair and
 * the interaction rides along in a single fsim gate.
 */
struct SwapSchedule {
    struct Swap {
        int pos = 0;       // left position of the transposition (pos, pos+1)
        int orb_a = 0;     // orbital at pos before the swap
        int orb_b = 0;     // orbital at pos+1 before the swap
    };
    struct Service {
        int config = 0;
        int pos = 0;
        int orb_a = 0;
        int orb_b = 0;
        bool fused = true;
    };

    int n = 0;
    std::vector<std::vector<Swap>> layers;
    std::vector<int> final_order;  // position -> orbital after all layers
    std::vector<Service> services;

    std::size_t swap_count() const;
};

/// Odd-even transposition network reversing n orbitals; every unordered
/// pair is serviced exactly once. Throws for n < 2.
SwapSchedule swap_network_schedule(int n);

/**
 * One Trotter step for a generic quadratic-plus-density Hamiltonian on a
 * linear chain.
 *
 * order 1 (time t): a Phase layer applying exp(-i (U_p + T_pp) t n_p),
 * then the swap network with each transposition realised as
 * FSim(T_pq t, (V_pq + V_qp) t). The qubit<->orbital assignment ends
 * reversed; metadata carries the final order.
 *
 * order 2 (total time 2t): half-angle Phase layers at both ends, forward
 * network layers at t, the chronologically final layer replaced by its
 * doubled interaction with the swap cancelled (an FSwap layer followed by
 * FSim(2 theta, 2 phi) on the same pairs), then the remaining layers
 * mirrored at t. Final ordering equals the initial ordering.
 */
Circuit synthesize_trotter_step(const FermionHamiltonian& h, double t, int order);

/**
 * Stagger schedule for a Hubbard instance: U_L once, then alternating
 * U_R U_L blocks circulating orbitals outward, the whole series reversed
 * back to the initial ordering, then the same number of blocks circulating
 * the opposite way. The circulation count starts at the closed-form seed
 * ceil(sqrt(n/8)) - 1 and is extended until replay shows every hop edge and
 * onsite pair chain-adjacent at some configuration; trailing layers that
 * service nothing are dropped. Each term is serviced exactly once, at its
 * first adjacency.
 */
SwapSchedule hubbard_swap_schedule(const HubbardInstance& inst);

/// First-order Trotter step for a Hubbard instance built on
/// hubbard_swap_schedule: fused fsim gates where a serviced pair is swapped
/// anyway, standalone Givens (hopping) or FSwap+FSim (onsite) gates where it
/// is not, plain fswaps elsewhere.
Circuit synthesize_hubbard_trotter(const HubbardInstance& inst, double t);

}  // namespace fermiswap
