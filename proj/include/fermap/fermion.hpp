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
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fermap/error.hpp"
#include "fermap/text.hpp"

namespace fermap {

/// One creation (dagger) or annihilation operator on a fermionic mode.
struct LadderFactor {
    std::uint32_t mode = 0;
    bool dagger = false;

    friend bool operator==(const LadderFactor &, const LadderFactor &) = default;
};

/// coefficient · f_0 f_1 ... f_{n-1}, written and multiplied left to right as a†_i a_j reads.
struct FermionTerm {
    std::complex<double> coefficient;
    std::vector<LadderFactor> factors;

    friend bool operator==(const FermionTerm &, const FermionTerm &) = default;
};

/**
 * Second-quantized operator on a fixed number of modes.
 *
 * Terms keep their insertion order; nothing is normal-ordered or merged. Empty factor lists are
 * scalar (identity) terms.
 */
class FermionOperator {
  public:
    explicit FermionOperator(std::uint32_t n_modes) : n_modes_(n_modes) {
        if (n_modes == 0) throw ValidationError("fermion operator needs at least one mode");
    }

    std::uint32_t n_modes() const noexcept { return n_modes_; }
    const std::vector<FermionTerm> &terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }

    FermionOperator &add_term(std::complex<double> coefficient, std::vector<LadderFactor> factors) {
        for (const auto &f : factors)
            if (f.mode >= n_modes_)
                throw ValidationError("mode " + std::to_string(f.mode) + " out of range for " +
                                      std::to_string(n_modes_) + " modes");
        terms_.push_back({coefficient, std::move(factors)});
        return *this;
    }

    friend bool operator==(const FermionOperator &, const FermionOperator &) = default;

  private:
    std::uint32_t n_modes_;
    std::vector<FermionTerm> terms_;
};

/// Conjugate transpose, term by term: (c·f_0…f_n)† = c*·f_n†…f_0†.
inline FermionOperator hermitian_conjugate(const FermionOperator &op) {
    FermionOperator out(op.n_modes());
    for (const auto &t : op.terms()) {
        std::vector<LadderFactor> f(t.factors.rbegin(), t.factors.rend());
        for (auto &x : f) x.dagger = !x.dagger;
        out.add_term(std::conj(t.coefficient), std::move(f));
    }
    return out;
}

/// Concatenates the term lists of two operators on the same modes.
inline FermionOperator operator+(FermionOperator a, const FermionOperator &b) {
    if (a.n_modes() != b.n_modes()) throw ValidationError("mode count mismatch in fermion sum");
    for (const auto &t : b.terms()) a.add_term(t.coefficient, t.factors);
    return a;
}

// File grammar:
//   modes <M>
//   <re>[,<im>] <factor> <factor> ...      factor = <mode> | <mode>^
// '#' starts a comment; blank lines are ignored.

inline FermionOperator parse_fermion_file(std::string_view body) {
    std::optional<FermionOperator> op;
    text::for_each_line(body, [&](std::size_t lineno, std::string_view line) {
        auto tokens = text::split_ws(line);
        if (!op) {
            if (tokens.size() != 2 || tokens[0] != "modes")
                throw ParseError(lineno, "expected 'modes <M>' header");
            auto m = text::parse_index(tokens[1]);
            if (!m || *m == 0) throw ParseError(lineno, "bad mode count '" + std::string(tokens[1]) + "'");
            op.emplace(*m);
            return;
        }
        auto coeff = text::parse_coefficient(tokens[0]);
        if (!coeff) throw ParseError(lineno, "bad coefficient '" + std::string(tokens[0]) + "'");
        std::vector<LadderFactor> factors;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            auto tok = tokens[i];
            bool dagger = !tok.empty() && tok.back() == '^';
            if (dagger) tok.remove_suffix(1);
            auto mode = text::parse_index(tok);
            if (!mode) throw ParseError(lineno, "bad ladder factor '" + std::string(tokens[i]) + "'");
            if (*mode >= op->n_modes())
                throw ValidationError("line " + std::to_string(lineno) + ": mode " + std::to_string(*mode) +
                                      " >= declared " + std::to_string(op->n_modes()));
            factors.push_back({*mode, dagger});
        }
        op->add_term(*coeff, std::move(factors));
    });
    if (!op) throw ParseError(0, "missing 'modes <M>' header");
    return std::move(*op);
}

inline std::string format_fermion_operator(const FermionOperator &op, std::optional<int> decimals = std::nullopt) {
    std::string out = "modes " + std::to_string(op.n_modes()) + "\n";
    for (const auto &t : op.terms()) {
        out += text::format_coefficient(t.coefficient, decimals);
        for (const auto &f : t.factors) {
            out += ' ';
            out += std::to_string(f.mode);
            if (f.dagger) out += '^';
        }
        out += '\n';
    }
    return out;
}

/// Mode relabeling; `perm[j]` is the new index of mode j.
using ModePermutation = std::vector<std::uint32_t>;

inline void check_permutation(const ModePermutation &perm, std::uint32_t n) {
    if (perm.size() != n)
        throw ValidationError("permutation has " + std::to_string(perm.size()) + " entries, expected " +
                              std::to_string(n));
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
        if (p >= n || seen[p]) throw ValidationError("mode map is not a bijection");
        seen[p] = true;
    }
}

inline ModePermutation inverse_permutation(const ModePermutation &perm) {
    check_permutation(perm, static_cast<std::uint32_t>(perm.size()));
    ModePermutation inv(perm.size());
    for (std::uint32_t j = 0; j < perm.size(); ++j) inv[perm[j]] = j;
    return inv;
}

/// Relabels every factor j → perm[j]. Factor order and coefficients are untouched.
inline FermionOperator permute_modes(const FermionOperator &op, const ModePermutation &perm) {
    check_permutation(perm, op.n_modes());
    FermionOperator out(op.n_modes());
    for (const auto &t : op.terms()) {
        auto f = t.factors;
        for (auto &x : f) x.mode = perm[x.mode];
        out.add_term(t.coefficient, std::move(f));
    }
    return out;
}

} // namespace fermap
