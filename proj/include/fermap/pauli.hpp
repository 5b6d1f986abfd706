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
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fermap/error.hpp"
#include "fermap/text.hpp"

namespace fermap {

using Complex = std::complex<double>;

/// Terms whose coefficient magnitude falls below this are dropped after every add/multiply.
inline constexpr double kCollectTolerance = 1e-12;

enum class Axis : std::uint8_t { X = 1, Y = 2, Z = 3 };

inline char axis_char(Axis a) {
    switch (a) {
    case Axis::X: return 'X';
    case Axis::Y: return 'Y';
    case Axis::Z: return 'Z';
    }
    return '?';
}

/**
 * Tensor product of single-qubit Pauli operators, stored sparsely.
 *
 * Factors are kept sorted by qubit index with no repeats; qubits that are not listed carry the
 * identity. The empty string is the identity operator.
 *
 * Ordering is the canonical report order: by weight first, then lexicographically by the
 * (qubit, axis) factor list.
 */
class PauliString {
  public:
    using Factor = std::pair<std::uint32_t, Axis>;

    PauliString() = default;

    PauliString(std::initializer_list<Factor> factors) : PauliString(std::vector<Factor>(factors)) {}

    explicit PauliString(std::vector<Factor> factors) : factors_(std::move(factors)) {
        std::sort(factors_.begin(), factors_.end());
        auto dup = std::adjacent_find(factors_.begin(), factors_.end(),
                                      [](const Factor &a, const Factor &b) { return a.first == b.first; });
        if (dup != factors_.end())
            throw ValidationError("Pauli string lists qubit " + std::to_string(dup->first) + " twice");
    }

    /// The same axis on every qubit of `qubits` (which must be distinct).
    static PauliString uniform(Axis axis, std::span<const std::uint32_t> qubits) {
        std::vector<Factor> f;
        f.reserve(qubits.size());
        for (auto q : qubits) f.emplace_back(q, axis);
        return PauliString(std::move(f));
    }

    const std::vector<Factor> &factors() const noexcept { return factors_; }
    std::size_t weight() const noexcept { return factors_.size(); }
    bool is_identity() const noexcept { return factors_.empty(); }

    std::optional<Axis> at(std::uint32_t qubit) const {
        auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{qubit, Axis::X});
        if (it != factors_.end() && it->first == qubit) return it->second;
        return std::nullopt;
    }

    /// One past the largest qubit index acted on; 0 for the identity.
    std::uint32_t span_qubits() const noexcept { return factors_.empty() ? 0 : factors_.back().first + 1; }

    std::size_t count(Axis a) const {
        return static_cast<std::size_t>(
            std::count_if(factors_.begin(), factors_.end(), [a](const Factor &f) { return f.second == a; }));
    }

    std::string str() const {
        if (factors_.empty()) return "I";
        std::string out;
        for (const auto &[q, a] : factors_) {
            if (!out.empty()) out += ' ';
            out += axis_char(a);
            out += std::to_string(q);
        }
        return out;
    }

    friend bool operator==(const PauliString &, const PauliString &) = default;

    friend std::strong_ordering operator<=>(const PauliString &a, const PauliString &b) {
        if (auto c = a.weight() <=> b.weight(); c != 0) return c;
        return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(), b.factors_.begin(),
                                                      b.factors_.end());
    }

  private:
    std::vector<Factor> factors_;
};

/// Result of multiplying two Pauli strings: a·b = phase · product, phase ∈ {1, i, -1, -i}.
struct PauliProduct {
    Complex phase;
    PauliString product;
};

namespace detail {

// Power of i picked up by the single-qubit product a·b (a != b): XY = iZ, YZ = iX, ZX = iY.
inline int single_phase_power(Axis a, Axis b) {
    int da = static_cast<int>(a), db = static_cast<int>(b);
    return ((db - da + 3) % 3 == 1) ? 1 : 3;
}

inline Complex i_power(int k) {
    switch (k & 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
    }
}

} // namespace detail

inline PauliProduct multiply(const PauliString &a, const PauliString &b) {
    using Factor = PauliString::Factor;
    const auto &fa = a.factors();
    const auto &fb = b.factors();
    std::vector<Factor> out;
    out.reserve(fa.size() + fb.size());
    int power = 0;
    std::size_t i = 0, j = 0;
    while (i < fa.size() || j < fb.size()) {
        if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) {
            out.push_back(fa[i++]);
        } else if (i == fa.size() || fb[j].first < fa[i].first) {
            out.push_back(fb[j++]);
        } else {
            Axis x = fa[i].second, y = fb[j].second;
            if (x != y) {
                power += detail::single_phase_power(x, y);
                out.emplace_back(fa[i].first, static_cast<Axis>(static_cast<int>(x) ^ static_cast<int>(y)));
            }
            ++i;
            ++j;
        }
    }
    return {detail::i_power(power), PauliString(std::move(out))};
}

inline std::size_t weight(const PauliString &p) noexcept { return p.weight(); }

/// Two strings commute iff they anticommute on an even number of qubits.
inline bool commutes(const PauliString &a, const PauliString &b) {
    std::size_t clashes = 0;
    for (const auto &[q, axis] : a.factors())
        if (auto other = b.at(q); other && *other != axis) ++clashes;
    return clashes % 2 == 0;
}

/**
 * Weighted sum of Pauli strings in collected form.
 *
 * Every string appears at most once and no stored coefficient is smaller in magnitude than
 * kCollectTolerance. Iteration follows the canonical PauliString ordering.
 */
class QubitOperator {
  public:
    using Terms = std::map<PauliString, Complex>;

    QubitOperator() = default;
    QubitOperator(const PauliString &p, Complex c = 1.0) { accumulate(p, c); }

    static QubitOperator identity(Complex c = 1.0) { return QubitOperator(PauliString{}, c); }

    const Terms &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    Complex coefficient(const PauliString &p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? Complex{} : it->second;
    }

    /// One past the largest qubit index appearing in any term.
    std::uint32_t span_qubits() const {
        std::uint32_t n = 0;
        for (const auto &[p, c] : terms_) n = std::max(n, p.span_qubits());
        return n;
    }

    /// Largest string weight across terms.
    std::size_t max_weight() const {
        std::size_t w = 0;
        for (const auto &[p, c] : terms_) w = std::max(w, p.weight());
        return w;
    }

    /// Pauli strings are Hermitian, so the operator is Hermitian iff every coefficient is real.
    bool has_real_coefficients(double tol = kCollectTolerance) const {
        return std::all_of(terms_.begin(), terms_.end(), [tol](const auto &t) { return std::abs(t.second.imag()) <= tol; });
    }

    QubitOperator &accumulate(const PauliString &p, Complex c) {
        auto [it, inserted] = terms_.try_emplace(p, c);
        if (!inserted) it->second += c;
        if (std::abs(it->second) < kCollectTolerance) terms_.erase(it);
        return *this;
    }

    QubitOperator &operator+=(const QubitOperator &o) {
        for (const auto &[p, c] : o.terms_) accumulate(p, c);
        return *this;
    }

    QubitOperator &operator-=(const QubitOperator &o) {
        for (const auto &[p, c] : o.terms_) accumulate(p, -c);
        return *this;
    }

    QubitOperator &operator*=(Complex s) {
        for (auto &[p, c] : terms_) c *= s;
        prune();
        return *this;
    }

    friend QubitOperator operator+(QubitOperator a, const QubitOperator &b) { return a += b; }
    friend QubitOperator operator-(QubitOperator a, const QubitOperator &b) { return a -= b; }
    friend QubitOperator operator*(QubitOperator a, Complex s) { return a *= s; }
    friend QubitOperator operator*(Complex s, QubitOperator a) { return a *= s; }

    friend QubitOperator operator*(const QubitOperator &a, const QubitOperator &b) {
        QubitOperator out;
        for (const auto &[pa, ca] : a.terms_)
            for (const auto &[pb, cb] : b.terms_) {
                auto [phase, prod] = multiply(pa, pb);
                out.terms_[prod] += phase * ca * cb;
            }
        out.prune();
        return out;
    }

    QubitOperator &operator*=(const QubitOperator &o) { return *this = *this * o; }

    friend bool operator==(const QubitOperator &, const QubitOperator &) = default;

    /// Largest coefficient-wise deviation between two operators.
    friend double max_abs_difference(const QubitOperator &a, const QubitOperator &b) {
        double d = 0.0;
        for (const auto &[p, c] : (a - b).terms_) d = std::max(d, std::abs(c));
        return d;
    }

  private:
    void prune() {
        std::erase_if(terms_, [](const auto &t) { return std::abs(t.second) < kCollectTolerance; });
    }

    Terms terms_;
};

inline QubitOperator add(const QubitOperator &a, const QubitOperator &b) { return a + b; }
inline QubitOperator operator_multiply(const QubitOperator &a, const QubitOperator &b) { return a * b; }
inline QubitOperator scalar_multiply(const QubitOperator &a, Complex s) { return a * s; }

// Text form: one term per line, `<re>[,<im>] <AXIS><index> ...`, identity written `<re> I`.

inline std::string format_term(const PauliString &p, Complex c, std::optional<int> decimals = std::nullopt) {
    return text::format_coefficient(c, decimals) + " " + p.str();
}

inline std::string format_qubit_operator(const QubitOperator &op, std::optional<int> decimals = std::nullopt) {
    std::string out;
    for (const auto &[p, c] : op.terms()) {
        out += format_term(p, c, decimals);
        out += '\n';
    }
    return out;
}

inline PauliString parse_pauli_string(std::span<const std::string_view> tokens, std::size_t lineno = 0) {
    std::vector<PauliString::Factor> factors;
    for (auto tok : tokens) {
        if (tok == "I") continue;
        Axis axis;
        switch (tok.front()) {
        case 'X': axis = Axis::X; break;
        case 'Y': axis = Axis::Y; break;
        case 'Z': axis = Axis::Z; break;
        default: throw ParseError(lineno, "bad Pauli factor '" + std::string(tok) + "'");
        }
        auto q = text::parse_index(tok.substr(1));
        if (!q) throw ParseError(lineno, "bad qubit index in '" + std::string(tok) + "'");
        factors.emplace_back(*q, axis);
    }
    try {
        return PauliString(std::move(factors));
    } catch (const ValidationError &e) {
        throw ParseError(lineno, e.what());
    }
}

inline PauliString parse_pauli_string(std::string_view s) {
    auto tokens = text::split_ws(s);
    return parse_pauli_string(tokens);
}

inline QubitOperator parse_qubit_operator(std::string_view body) {
    QubitOperator op;
    text::for_each_line(body, [&](std::size_t lineno, std::string_view line) {
        auto tokens = text::split_ws(line);
        auto coeff = text::parse_coefficient(tokens.front());
        if (!coeff) throw ParseError(lineno, "bad coefficient '" + std::string(tokens.front()) + "'");
        auto rest = std::span<const std::string_view>(tokens).subspan(1);
        op.accumulate(parse_pauli_string(rest, lineno), *coeff);
    });
    return op;
}

} // namespace fermap
