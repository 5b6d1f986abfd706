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
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "fermap/catalog.hpp"
#include "fermap/error.hpp"
#include "fermap/fermion.hpp"
#include "fermap/pauli.hpp"
#include "fermap/text.hpp"
#include "fermap/transform.hpp"

namespace fermap {

/// RX(θ) = exp(-iθX/2), RZ(θ) = exp(-iθZ/2).
struct Gate {
    enum class Kind { H, RX, RZ, CNOT };

    Kind kind = Kind::H;
    std::uint32_t target = 0;
    std::uint32_t control = 0; // CNOT only
    double angle = 0.0;        // RX/RZ only

    static Gate h(std::uint32_t q) { return {Kind::H, q, 0, 0.0}; }
    static Gate rx(std::uint32_t q, double a) { return {Kind::RX, q, 0, a}; }
    static Gate rz(std::uint32_t q, double a) { return {Kind::RZ, q, 0, a}; }
    static Gate cnot(std::uint32_t c, std::uint32_t t) { return {Kind::CNOT, t, c, 0.0}; }

    bool two_qubit() const noexcept { return kind == Kind::CNOT; }

    friend bool operator==(const Gate &, const Gate &) = default;
};

class Circuit {
  public:
    explicit Circuit(std::uint32_t n_qubits) : n_qubits_(n_qubits) {}

    std::uint32_t n_qubits() const noexcept { return n_qubits_; }
    const std::vector<Gate> &gates() const noexcept { return gates_; }

    void add(const Gate &g) {
        if (g.target >= n_qubits_ || (g.two_qubit() && g.control >= n_qubits_))
            throw ValidationError("gate operand outside the " + std::to_string(n_qubits_) + "-qubit register");
        if (g.two_qubit() && g.control == g.target) throw ValidationError("CNOT control equals target");
        gates_.push_back(g);
    }

    void append(const Circuit &other) {
        for (const auto &g : other.gates_) add(g);
    }

    // Metadata describing how the circuit was produced.
    double time = 0.0;
    std::uint32_t steps = 1;
    std::vector<PauliString> term_order;

  private:
    std::uint32_t n_qubits_;
    std::vector<Gate> gates_;
};

/// Pauli-factor and gate totals for one Trotter step of a qubit Hamiltonian.
struct CountReport {
    std::string label;
    std::size_t n_x = 0, n_y = 0, n_z = 0;
    std::size_t cnot = 0;
    std::size_t single_qubit = 0;

    std::size_t total_pauli() const noexcept { return n_x + n_y + n_z; }
    std::size_t total_gates() const noexcept { return cnot + single_qubit; }

    friend bool operator==(const CountReport &, const CountReport &) = default;
};

/// Imaginary parts above this reject an operator as non-Hermitian for synthesis.
inline constexpr double kHermitianTolerance = 1e-10;

/**
 * exp(-i h t P) for one Pauli string: basis change (H on X, RX(π/2) on Y), a CNOT chain over the
 * involved qubits in ascending order, RZ(2ht) on the last one, then the mirror image.
 */
inline void append_term_evolution(Circuit &c, const PauliString &p, double h, double t) {
    if (p.is_identity()) return;
    const auto &f = p.factors();
    const double half_pi = std::numbers::pi / 2;
    for (auto [q, a] : f) {
        if (a == Axis::X) c.add(Gate::h(q));
        if (a == Axis::Y) c.add(Gate::rx(q, half_pi));
    }
    for (std::size_t i = 0; i + 1 < f.size(); ++i) c.add(Gate::cnot(f[i].first, f[i + 1].first));
    c.add(Gate::rz(f.back().first, 2.0 * h * t));
    for (std::size_t i = f.size() - 1; i-- > 0;) c.add(Gate::cnot(f[i].first, f[i + 1].first));
    for (auto [q, a] : f) {
        if (a == Axis::X) c.add(Gate::h(q));
        if (a == Axis::Y) c.add(Gate::rx(q, -half_pi));
    }
}

/// One first-order Trotter step over all non-identity terms, in canonical term order. The
/// identity coefficient is a global phase and emits nothing.
inline Circuit trotter_step(const QubitOperator &op, double t, std::uint32_t n_qubits = 0) {
    Circuit c(std::max(n_qubits, op.span_qubits()));
    c.time = t;
    for (const auto &[p, coeff] : op.terms()) {
        if (std::abs(coeff.imag()) > kHermitianTolerance)
            throw ValidationError("non-Hermitian operator: term '" + format_term(p, coeff) +
                                  "' has a complex coefficient");
        if (p.is_identity()) continue;
        c.term_order.push_back(p);
        append_term_evolution(c, p, coeff.real(), t);
    }
    return c;
}

/// `steps` repetitions of trotter_step(op, t / steps).
inline Circuit trotter_circuit(const QubitOperator &op, double t, std::uint32_t steps, std::uint32_t n_qubits = 0) {
    if (steps == 0) throw ValidationError("Trotter step count must be positive");
    auto one = trotter_step(op, t / steps, n_qubits);
    Circuit c(one.n_qubits());
    c.time = t;
    c.steps = steps;
    c.term_order = one.term_order;
    for (std::uint32_t s = 0; s < steps; ++s) c.append(one);
    return c;
}

/// Per non-identity term with n_x, n_y, n_z factors: 2(n_x+n_y+n_z-1) CNOTs and 1+2(n_x+n_y)
/// single-qubit gates.
inline CountReport gate_counts(const QubitOperator &op, std::string label = {}) {
    CountReport r;
    r.label = std::move(label);
    for (const auto &[p, c] : op.terms()) {
        if (p.is_identity()) continue;
        auto nx = p.count(Axis::X), ny = p.count(Axis::Y), nz = p.count(Axis::Z);
        r.n_x += nx;
        r.n_y += ny;
        r.n_z += nz;
        r.cnot += 2 * (p.weight() - 1);
        r.single_qubit += 1 + 2 * (nx + ny);
    }
    return r;
}

/// Gate totals counted directly from an emitted circuit (Pauli fields stay zero).
inline CountReport census(const Circuit &c) {
    CountReport r;
    for (const auto &g : c.gates()) (g.two_qubit() ? r.cnot : r.single_qubit) += 1;
    return r;
}

/// Counts for one Hamiltonian under several mappings.
inline std::vector<CountReport> compare(const FermionOperator &h, const std::vector<MappingDescriptor> &mappings) {
    std::vector<CountReport> rows;
    rows.reserve(mappings.size());
    for (const auto &d : mappings) {
        auto sets = derive_sets(d.family(h.n_modes()));
        rows.push_back(gate_counts(map_hamiltonian(h, sets), d.text));
    }
    return rows;
}

namespace detail {

inline std::string qasm_angle(double a) {
    const double half_pi = std::numbers::pi / 2;
    if (a == half_pi) return "pi/2";
    if (a == -half_pi) return "-pi/2";
    return text::format_real(a);
}

} // namespace detail

/// OpenQASM 2.0 text using h, rx, rz and cx.
inline std::string emit_qasm(const Circuit &c) {
    std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    out += "qreg q[" + std::to_string(std::max<std::uint32_t>(c.n_qubits(), 1)) + "];\n";
    auto q = [](std::uint32_t i) { return "q[" + std::to_string(i) + "]"; };
    for (const auto &g : c.gates()) {
        switch (g.kind) {
        case Gate::Kind::H: out += "h " + q(g.target) + ";\n"; break;
        case Gate::Kind::RX: out += "rx(" + detail::qasm_angle(g.angle) + ") " + q(g.target) + ";\n"; break;
        case Gate::Kind::RZ: out += "rz(" + detail::qasm_angle(g.angle) + ") " + q(g.target) + ";\n"; break;
        case Gate::Kind::CNOT: out += "cx " + q(g.control) + "," + q(g.target) + ";\n"; break;
        }
    }
    return out;
}

} // namespace fermap
