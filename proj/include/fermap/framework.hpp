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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fermap/error.hpp"

namespace fermap {

/// Sorted, duplicate-free list of mode (or qubit) indices.
using ModeSet = std::vector<std::uint32_t>;

/// Occupation or qubit bit vector; entries are 0 or 1.
using BitVector = std::vector<std::uint8_t>;

inline bool set_contains(const ModeSet &s, std::uint32_t x) { return std::binary_search(s.begin(), s.end(), x); }

inline std::string format_set(const ModeSet &s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out + "}";
}

/**
 * The summation sets S(0..M-1) of a state encoding: qubit j stores n_j XOR the occupations of
 * the modes in S(j). Every element of S(j) is smaller than j.
 */
class SummationFamily {
  public:
    explicit SummationFamily(std::vector<ModeSet> sets) : sets_(std::move(sets)) {
        if (sets_.empty()) throw ValidationError("summation family needs at least one mode");
        for (std::uint32_t j = 0; j < sets_.size(); ++j) {
            auto &s = sets_[j];
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw ValidationError("S(" + std::to_string(j) + ") has a repeated element");
            if (!s.empty() && s.back() >= j)
                throw ValidationError("S(" + std::to_string(j) + ") contains " + std::to_string(s.back()) +
                                      ", elements must be < " + std::to_string(j));
        }
    }

    /// All sets empty (the identity encoding).
    static SummationFamily empty(std::uint32_t n_modes) {
        if (n_modes == 0) throw ValidationError("summation family needs at least one mode");
        return SummationFamily(std::vector<ModeSet>(n_modes));
    }

    std::uint32_t n_modes() const noexcept { return static_cast<std::uint32_t>(sets_.size()); }
    const ModeSet &operator[](std::uint32_t j) const { return sets_.at(j); }
    const std::vector<ModeSet> &sets() const noexcept { return sets_; }
    bool contains(std::uint32_t j, std::uint32_t k) const { return set_contains(sets_.at(j), k); }

    friend bool operator==(const SummationFamily &, const SummationFamily &) = default;

  private:
    std::vector<ModeSet> sets_;
};

struct ConstraintViolation {
    enum class Rule { Transitive, Exclusive };
    Rule rule;
    std::uint32_t i, j, k;

    std::string str() const {
        auto ijk = "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
        return rule == Rule::Transitive ? "constraint i at " + ijk + ": i in S(j), j in S(k), i not in S(k)"
                                        : "constraint ii at " + ijk + ": i in S(j), j not in S(k), i in S(k)";
    }

    friend bool operator==(const ConstraintViolation &, const ConstraintViolation &) = default;
};

/// Every triple i<j<k with i ∈ S(j) must satisfy (i ∈ S(k)) == (j ∈ S(k)).
inline std::vector<ConstraintViolation> check_constraints(const SummationFamily &fam) {
    const auto m = fam.n_modes();
    std::vector<std::uint8_t> member(std::size_t{m} * m, 0);
    for (std::uint32_t j = 0; j < m; ++j)
        for (auto k : fam[j]) member[std::size_t{j} * m + k] = 1;
    auto in = [&](std::uint32_t x, std::uint32_t set) { return member[std::size_t{set} * m + x] != 0; };

    std::vector<ConstraintViolation> out;
    for (std::uint32_t j = 1; j < m; ++j)
        for (auto i : fam[j])
            for (std::uint32_t k = j + 1; k < m; ++k) {
                bool jk = in(j, k), ik = in(i, k);
                if (jk && !ik) out.push_back({ConstraintViolation::Rule::Transitive, i, j, k});
                if (!jk && ik) out.push_back({ConstraintViolation::Rule::Exclusive, i, j, k});
            }
    return out;
}

/// S, F, P and U sets of one mapping, all sorted ascending.
struct MappingSets {
    std::uint32_t n_modes = 0;
    std::vector<ModeSet> summation;
    std::vector<ModeSet> flip;
    std::vector<ModeSet> parity;
    std::vector<ModeSet> update;

    const ModeSet &S(std::uint32_t j) const { return summation.at(j); }
    const ModeSet &F(std::uint32_t j) const { return flip.at(j); }
    const ModeSet &P(std::uint32_t j) const { return parity.at(j); }
    const ModeSet &U(std::uint32_t j) const { return update.at(j); }

    SummationFamily family() const { return SummationFamily(summation); }

    friend bool operator==(const MappingSets &, const MappingSets &) = default;
};

/// Structural problems with a MappingSets value (F ⊄ P, overlap with U, out-of-order elements).
inline std::vector<std::string> check_set_invariants(const MappingSets &s) {
    std::vector<std::string> out;
    auto tag = [](const char *name, std::uint32_t j) { return std::string(name) + "(" + std::to_string(j) + ")"; };
    if (s.summation.size() != s.n_modes || s.flip.size() != s.n_modes || s.parity.size() != s.n_modes ||
        s.update.size() != s.n_modes) {
        out.push_back("set lists do not have n_modes entries");
        return out;
    }
    for (std::uint32_t j = 0; j < s.n_modes; ++j) {
        for (auto k : s.F(j))
            if (!set_contains(s.P(j), k)) out.push_back(tag("F", j) + " is not a subset of " + tag("P", j));
        for (auto k : s.U(j)) {
            if (k <= j || k >= s.n_modes) out.push_back(tag("U", j) + " has element " + std::to_string(k));
            if (set_contains(s.P(j), k)) out.push_back(tag("U", j) + " intersects " + tag("P", j));
        }
        for (auto k : s.P(j))
            if (k >= j) out.push_back(tag("P", j) + " has element " + std::to_string(k));
    }
    return out;
}

/**
 * Literal set definitions:
 *   U(j) = {k | j ∈ S(k)}
 *   P(j) = {k < j | k ∉ S(i) for every i < j}
 *   F(j) = {k ∈ S(j) | k ∉ S(i) for every i < j}
 * Quadratic-to-cubic; kept as the reference for derive_sets.
 */
inline MappingSets derive_sets_by_definition(const SummationFamily &fam) {
    const auto m = fam.n_modes();
    MappingSets out{m, fam.sets(), std::vector<ModeSet>(m), std::vector<ModeSet>(m), std::vector<ModeSet>(m)};
    auto covered_before = [&](std::uint32_t k, std::uint32_t j) {
        for (std::uint32_t i = 0; i < j; ++i)
            if (fam.contains(i, k)) return true;
        return false;
    };
    for (std::uint32_t j = 0; j < m; ++j) {
        for (std::uint32_t k = 0; k < m; ++k)
            if (fam.contains(k, j)) out.update[j].push_back(k);
        for (std::uint32_t k = 0; k < j; ++k)
            if (!covered_before(k, j)) out.parity[j].push_back(k);
        for (auto k : fam[j])
            if (!covered_before(k, j)) out.flip[j].push_back(k);
    }
    return out;
}

/**
 * Builds U, P and F from the summation sets in three passes:
 *   U(j): every k > j whose S(k) contains j;
 *   P(j): every k < j whose update set is empty or starts at or after j;
 *   F(j): the members k of P(j) whose first update is exactly j.
 * Rejects families that violate either summation-set constraint.
 */
inline MappingSets derive_sets(const SummationFamily &fam) {
    if (auto v = check_constraints(fam); !v.empty())
        throw ValidationError("summation sets violate " + v.front().str());

    const auto m = fam.n_modes();
    MappingSets out{m, fam.sets(), std::vector<ModeSet>(m), std::vector<ModeSet>(m), std::vector<ModeSet>(m)};
    for (std::uint32_t j = 0; j < m; ++j)
        for (std::uint32_t k = j + 1; k < m; ++k)
            if (fam.contains(k, j)) out.update[j].push_back(k);

    for (std::uint32_t j = 0; j < m; ++j)
        for (std::uint32_t k = 0; k < j; ++k)
            if (out.update[k].empty() || out.update[k].front() >= j) out.parity[j].push_back(k);

    for (std::uint32_t j = 0; j < m; ++j)
        for (auto k : out.parity[j])
            if (!out.update[k].empty() && out.update[k].front() == j) out.flip[j].push_back(k);
    return out;
}

/// M×M matrix over GF(2), row-major.
class BinaryMatrix {
  public:
    explicit BinaryMatrix(std::uint32_t n) : n_(n), bits_(std::size_t{n} * n, 0) {}

    std::uint32_t size() const noexcept { return n_; }
    bool operator()(std::uint32_t r, std::uint32_t c) const { return bits_.at(std::size_t{r} * n_ + c) != 0; }
    void set(std::uint32_t r, std::uint32_t c, bool v) { bits_.at(std::size_t{r} * n_ + c) = v ? 1 : 0; }

    /// Row r as a string of '0'/'1', column 0 first.
    std::string row_string(std::uint32_t r) const {
        std::string s;
        for (std::uint32_t c = 0; c < n_; ++c) s += (*this)(r, c) ? '1' : '0';
        return s;
    }

    BitVector apply(std::span<const std::uint8_t> v) const {
        if (v.size() != n_) throw ValidationError("vector length does not match matrix size");
        BitVector out(n_, 0);
        for (std::uint32_t r = 0; r < n_; ++r) {
            std::uint8_t acc = 0;
            for (std::uint32_t c = 0; c < n_; ++c) acc ^= static_cast<std::uint8_t>((*this)(r, c) & (v[c] & 1));
            out[r] = acc;
        }
        return out;
    }

    friend bool operator==(const BinaryMatrix &, const BinaryMatrix &) = default;

  private:
    std::uint32_t n_;
    std::vector<std::uint8_t> bits_;
};

/// A_jk = 1 iff k ∈ S(j) or k = j.
inline BinaryMatrix family_to_matrix(const SummationFamily &fam) {
    BinaryMatrix a(fam.n_modes());
    for (std::uint32_t j = 0; j < fam.n_modes(); ++j) {
        a.set(j, j, true);
        for (auto k : fam[j]) a.set(j, k, true);
    }
    return a;
}

/// S(j) = {k < j | A_jk = 1}; A must be lower triangular with unit diagonal.
inline SummationFamily matrix_to_family(const BinaryMatrix &a) {
    const auto m = a.size();
    std::vector<ModeSet> sets(m);
    for (std::uint32_t j = 0; j < m; ++j) {
        if (!a(j, j)) throw ValidationError("transform matrix has zero diagonal at row " + std::to_string(j));
        for (std::uint32_t k = j + 1; k < m; ++k)
            if (a(j, k)) throw ValidationError("transform matrix is not lower triangular at row " + std::to_string(j));
        for (std::uint32_t k = 0; k < j; ++k)
            if (a(j, k)) sets[j].push_back(k);
    }
    return SummationFamily(std::move(sets));
}

/// x_j = n_j + Σ_{k∈S(j)} n_k (mod 2).
inline BitVector encode_state(const SummationFamily &fam, std::span<const std::uint8_t> occupation) {
    if (occupation.size() != fam.n_modes())
        throw ValidationError("occupation vector has length " + std::to_string(occupation.size()) + ", expected " +
                              std::to_string(fam.n_modes()));
    BitVector x(fam.n_modes());
    for (std::uint32_t j = 0; j < fam.n_modes(); ++j) {
        std::uint8_t acc = occupation[j] & 1;
        for (auto k : fam[j]) acc ^= occupation[k] & 1;
        x[j] = acc;
    }
    return x;
}

/// Inverse of encode_state by forward substitution (the transform matrix is unit lower triangular).
inline BitVector decode_state(const SummationFamily &fam, std::span<const std::uint8_t> stored) {
    if (stored.size() != fam.n_modes())
        throw ValidationError("qubit vector has length " + std::to_string(stored.size()) + ", expected " +
                              std::to_string(fam.n_modes()));
    BitVector n(fam.n_modes());
    for (std::uint32_t j = 0; j < fam.n_modes(); ++j) {
        std::uint8_t acc = stored[j] & 1;
        for (auto k : fam[j]) acc ^= n[k];
        n[j] = acc;
    }
    return n;
}

/// Forest over modes: the parent of j is min U(j); children(j) = F(j); descendants(j) = S(j).
class MappingTree {
  public:
    explicit MappingTree(std::vector<std::optional<std::uint32_t>> parent) : parent_(std::move(parent)) {
        children_.resize(parent_.size());
        for (std::uint32_t j = 0; j < parent_.size(); ++j) {
            if (!parent_[j]) continue;
            auto p = *parent_[j];
            if (p <= j || p >= parent_.size())
                throw ValidationError("node " + std::to_string(j) + " has parent " + std::to_string(p) +
                                      "; parents must have larger indices");
            children_[p].push_back(j);
        }
    }

    std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(parent_.size()); }
    std::optional<std::uint32_t> parent(std::uint32_t j) const { return parent_.at(j); }
    const ModeSet &children(std::uint32_t j) const { return children_.at(j); }

    ModeSet roots() const {
        ModeSet r;
        for (std::uint32_t j = 0; j < size(); ++j)
            if (!parent_[j]) r.push_back(j);
        return r;
    }

    ModeSet descendants(std::uint32_t j) const {
        ModeSet out;
        std::vector<std::uint32_t> stack(children_.at(j).begin(), children_.at(j).end());
        while (!stack.empty()) {
            auto n = stack.back();
            stack.pop_back();
            out.push_back(n);
            stack.insert(stack.end(), children_[n].begin(), children_[n].end());
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    ModeSet ancestors(std::uint32_t j) const {
        ModeSet out;
        for (auto p = parent_.at(j); p; p = parent_[*p]) out.push_back(*p);
        return out;
    }

    /// (parent, child) pairs, sorted.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
        for (std::uint32_t j = 0; j < size(); ++j)
            for (auto c : children_[j]) e.emplace_back(j, c);
        return e;
    }

    /// Roots in ascending order, each subtree indented two spaces per level, children ascending.
    std::string ascii() const {
        std::string out;
        std::function<void(std::uint32_t, std::size_t)> walk = [&](std::uint32_t n, std::size_t depth) {
            out.append(2 * depth, ' ');
            out += std::to_string(n) + '\n';
            for (auto c : children_[n]) walk(c, depth + 1);
        };
        for (auto r : roots()) walk(r, 0);
        return out;
    }

    std::string dot() const {
        std::string out = "digraph mapping_tree {\n";
        for (std::uint32_t j = 0; j < size(); ++j) out += "  " + std::to_string(j) + ";\n";
        for (auto [p, c] : edges()) out += "  " + std::to_string(p) + " -> " + std::to_string(c) + ";\n";
        return out + "}\n";
    }

    friend bool operator==(const MappingTree &, const MappingTree &) = default;

  private:
    std::vector<std::optional<std::uint32_t>> parent_;
    std::vector<ModeSet> children_;
};

inline MappingTree build_tree(const MappingSets &sets) {
    std::vector<std::optional<std::uint32_t>> parent(sets.n_modes);
    for (std::uint32_t j = 0; j < sets.n_modes; ++j)
        if (!sets.U(j).empty()) parent[j] = sets.U(j).front();
    return MappingTree(std::move(parent));
}

inline SummationFamily tree_to_family(const MappingTree &tree) {
    std::vector<ModeSet> sets(tree.size());
    for (std::uint32_t j = 0; j < tree.size(); ++j) sets[j] = tree.descendants(j);
    return SummationFamily(std::move(sets));
}

} // namespace fermap
