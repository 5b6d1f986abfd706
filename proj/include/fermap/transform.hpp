// Copyright 2026 The fermap Authors.

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <iterator>
#include <vector>

#include "fermap/error.hpp"
#include "fermap/fermion.hpp"
#include "fermap/framework.hpp"
#include "fermap/pauli.hpp"

namespace fermap {

/// Qubit image of a single a_j or a_j†.
struct LadderImage {
    std::uint32_t mode = 0;
    bool dagger = false;
    QubitOperator op;
};

/**
 * a_j  ↦ ½ (Z_{P(j)} X_j + i Z_{P(j)−F(j)} Y_j) X_{U(j)}
 * a_j† ↦ ½ (Z_{P(j)} X_j − i Z_{P(j)−F(j)} Y_j) X_{U(j)}
 *
 * P(j), F(j) hold indices below j and U(j) indices above j, so both strings are plain tensor
 * products with no phase.
 */
inline LadderImage map_ladder(std::uint32_t j, bool dagger, const MappingSets &sets) {
    if (j >= sets.n_modes)
        throw ValidationError("mode " + std::to_string(j) + " out of range for " + std::to_string(sets.n_modes) +
                              " modes");
    using Factor = PauliString::Factor;
    const auto &p = sets.P(j);
    const auto &f = sets.F(j);
    const auto &u = sets.U(j);

    ModeSet p_minus_f;
    std::set_difference(p.begin(), p.end(), f.begin(), f.end(), std::back_inserter(p_minus_f));

    auto build = [&](const ModeSet &zs, Axis centre) {
        std::vector<Factor> factors;
        factors.reserve(zs.size() + 1 + u.size());
        for (auto k : zs) factors.emplace_back(k, Axis::Z);
        factors.emplace_back(j, centre);
        for (auto k : u) factors.emplace_back(k, Axis::X);
        return PauliString(std::move(factors));
    };

    QubitOperator op(build(p, Axis::X), 0.5);
    op.accumulate(build(p_minus_f, Axis::Y), Complex{0.0, dagger ? -0.5 : 0.5});
    return {j, dagger, std::move(op)};
}

/// Every ladder image of a mapping, indexed [mode][dagger].
inline std::vector<std::array<QubitOperator, 2>> map_all_ladders(const MappingSets &sets) {
    std::vector<std::array<QubitOperator, 2>> out(sets.n_modes);
    for (std::uint32_t j = 0; j < sets.n_modes; ++j) {
        out[j][0] = map_ladder(j, false, sets).op;
        out[j][1] = map_ladder(j, true, sets).op;
    }
    return out;
}

/// Substitutes every ladder factor and expands the products; result is collected and pruned.
inline QubitOperator map_hamiltonian(const FermionOperator &h, const MappingSets &sets) {
    if (h.n_modes() != sets.n_modes)
        throw ValidationError("Hamiltonian has " + std::to_string(h.n_modes()) + " modes but the mapping has " +
                              std::to_string(sets.n_modes));
    const auto ladders = map_all_ladders(sets);
    QubitOperator out;
    for (const auto &term : h.terms()) {
        QubitOperator product = QubitOperator::identity(term.coefficient);
        for (const auto &f : term.factors) product *= ladders[f.mode][f.dagger ? 1 : 0];
        out += product;
    }
    return out;
}

/// Widest Pauli string over all mapped ladder operators.
inline std::size_t mapping_pauli_weight(const MappingSets &sets) {
    std::size_t w = 0;
    for (std::uint32_t j = 0; j < sets.n_modes; ++j)
        for (bool dagger : {false, true}) w = std::max(w, map_ladder(j, dagger, sets).op.max_weight());
    return w;
}

} // namespace fermap
