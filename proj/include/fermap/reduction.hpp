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
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fermap/error.hpp"
#include "fermap/fermion.hpp"
#include "fermap/framework.hpp"
#include "fermap/pauli.hpp"

namespace fermap {

/// Qubits whose Z value is fixed by a conserved quantity, with the eigenvalue to substitute.
class SymmetryAssignment {
  public:
    SymmetryAssignment() = default;

    SymmetryAssignment(std::vector<std::pair<std::uint32_t, int>> fixed, std::string provenance = "user")
        : fixed_(std::move(fixed)), provenance_(std::move(provenance)) {
        std::sort(fixed_.begin(), fixed_.end());
        for (std::size_t i = 0; i < fixed_.size(); ++i) {
            if (fixed_[i].second != 1 && fixed_[i].second != -1)
                throw ValidationError("eigenvalue for qubit " + std::to_string(fixed_[i].first) + " must be +1 or -1");
            if (i && fixed_[i].first == fixed_[i - 1].first)
                throw ValidationError("qubit " + std::to_string(fixed_[i].first) + " assigned twice");
        }
    }

    const std::vector<std::pair<std::uint32_t, int>> &fixed() const noexcept { return fixed_; }
    const std::string &provenance() const noexcept { return provenance_; }
    bool empty() const noexcept { return fixed_.empty(); }

    std::optional<int> eigenvalue(std::uint32_t q) const {
        auto it = std::lower_bound(fixed_.begin(), fixed_.end(), std::pair<std::uint32_t, int>{q, -2});
        if (it != fixed_.end() && it->first == q) return it->second;
        return std::nullopt;
    }

  private:
    std::vector<std::pair<std::uint32_t, int>> fixed_;
    std::string provenance_ = "user";
};

/// Z eigenvalue of a qubit holding the parity of `particles` particles: (-1)^particles.
inline int parity_eigenvalue(std::uint32_t particles) { return particles % 2 == 0 ? 1 : -1; }

/// The qubit storing the parity of all modes (S(k) ∪ {k} = every mode, U(k) = ∅), if any.
inline std::optional<std::uint32_t> find_total_parity_qubit(const MappingSets &sets) {
    for (std::uint32_t k = 0; k < sets.n_modes; ++k)
        if (sets.U(k).empty() && sets.S(k).size() + 1 == sets.n_modes) return k;
    return std::nullopt;
}

/// Qubit k whose stored bit is the parity of the contiguous mode range [first, k].
struct SegmentParityQubit {
    std::uint32_t qubit;
    std::uint32_t first;

    friend bool operator==(const SegmentParityQubit &, const SegmentParityQubit &) = default;
};

/// Every qubit k with S(k) = {a, ..., k-1} for some a < k.
inline std::vector<SegmentParityQubit> find_segment_parity_qubits(const MappingSets &sets) {
    std::vector<SegmentParityQubit> out;
    for (std::uint32_t k = 0; k < sets.n_modes; ++k) {
        const auto &s = sets.S(k);
        if (s.empty() || s.back() + 1 != k || s.back() - s.front() + 1 != s.size()) continue;
        out.push_back({k, s.front()});
    }
    return out;
}

/// Renumbers qubits so that the `removed` indices leave no gaps.
inline QubitOperator compact_qubits(const QubitOperator &op, const std::vector<std::uint32_t> &removed) {
    auto sorted = removed;
    std::sort(sorted.begin(), sorted.end());
    QubitOperator out;
    for (const auto &[p, c] : op.terms()) {
        std::vector<PauliString::Factor> f;
        for (auto [q, a] : p.factors()) {
            if (std::binary_search(sorted.begin(), sorted.end(), q))
                throw ValidationError("cannot compact: qubit " + std::to_string(q) + " is still in use");
            auto shift = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), q) - sorted.begin());
            f.emplace_back(q - shift, a);
        }
        out.accumulate(PauliString(std::move(f)), c);
    }
    return out;
}

/**
 * Replaces Z on every assigned qubit by its eigenvalue and drops the qubit. Remaining qubits keep
 * their indices unless `compact` is set. Throws SymmetryViolation on any X or Y touching an
 * assigned qubit.
 */
inline QubitOperator taper(const QubitOperator &op, const SymmetryAssignment &assign, bool compact = false) {
    QubitOperator out;
    for (const auto &[p, c] : op.terms()) {
        std::vector<PauliString::Factor> kept;
        Complex coeff = c;
        for (auto [q, a] : p.factors()) {
            auto ev = assign.eigenvalue(q);
            if (!ev) {
                kept.emplace_back(q, a);
                continue;
            }
            if (a != Axis::Z)
                throw SymmetryViolation("term '" + format_term(p, c) + "' acts with " + axis_char(a) +
                                        " on symmetry qubit " + std::to_string(q));
            coeff *= *ev;
        }
        out.accumulate(PauliString(std::move(kept)), coeff);
    }
    if (!compact) return out;
    std::vector<std::uint32_t> removed;
    for (auto [q, ev] : assign.fixed()) removed.push_back(q);
    return compact_qubits(out, removed);
}

/// Interleaved (even = spin up, odd = spin down) to blocked order: 2t → t, 2t+1 → M/2 + t.
inline ModePermutation spin_block_permutation(std::uint32_t n_modes) {
    if (n_modes % 2 != 0) throw ValidationError("spin-block permutation needs an even mode count");
    ModePermutation perm(n_modes);
    for (std::uint32_t t = 0; t < n_modes / 2; ++t) {
        perm[2 * t] = t;
        perm[2 * t + 1] = n_modes / 2 + t;
    }
    return perm;
}

} // namespace fermap
