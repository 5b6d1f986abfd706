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
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "fermap/error.hpp"
#include "fermap/fermion.hpp"
#include "fermap/framework.hpp"
#include "fermap/pauli.hpp"
#include "fermap/transform.hpp"

// Dense reference model. Basis index b = Σ_j n_j 2^j: mode (or qubit) 0 is the least significant
// bit, |0⟩ is empty and |1⟩ occupied. Nothing here goes through the summation-set machinery
// except where a mapping is the thing under test.

namespace fermap::oracle {

inline constexpr std::uint32_t kMaxDenseModes = 12;
inline constexpr std::uint32_t kMaxExhaustiveModes = 8;

using SparseMatrix = Eigen::SparseMatrix<Complex>;

/// Matrix on 2^M basis states together with its basis convention.
struct DenseOperator {
    std::uint32_t n_modes = 0;
    Eigen::MatrixXcd matrix;
    static constexpr const char *basis_order = "b = sum_j n_j 2^j (index 0 least significant)";
};

inline void require_dense_size(std::uint32_t m, std::uint32_t cap = kMaxDenseModes) {
    if (m > cap)
        throw UnsupportedSize(std::to_string(m) + " modes exceeds the dense oracle limit of " + std::to_string(cap));
}

inline std::uint64_t basis_index(std::span<const std::uint8_t> bits) {
    std::uint64_t b = 0;
    for (std::size_t j = 0; j < bits.size(); ++j)
        if (bits[j] & 1) b |= std::uint64_t{1} << j;
    return b;
}

inline BitVector basis_bits(std::uint64_t b, std::uint32_t m) {
    BitVector bits(m);
    for (std::uint32_t j = 0; j < m; ++j) bits[j] = static_cast<std::uint8_t>((b >> j) & 1);
    return bits;
}

/// a_j or a_j† with matrix elements taken directly from the occupation-number definition,
/// phase (-1)^(number of occupied modes below j).
inline SparseMatrix sparse_ladder(std::uint32_t j, bool dagger, std::uint32_t m) {
    require_dense_size(m);
    if (j >= m) throw ValidationError("mode " + std::to_string(j) + " out of range");
    const std::uint64_t dim = std::uint64_t{1} << m;
    const std::uint64_t bit = std::uint64_t{1} << j;
    std::vector<Eigen::Triplet<Complex>> entries;
    for (std::uint64_t b = 0; b < dim; ++b) {
        bool occupied = (b & bit) != 0;
        if (occupied == dagger) continue;
        double sign = std::popcount(b & (bit - 1)) % 2 ? -1.0 : 1.0;
        entries.emplace_back(static_cast<int>(b ^ bit), static_cast<int>(b), Complex{sign, 0.0});
    }
    SparseMatrix a(static_cast<int>(dim), static_cast<int>(dim));
    a.setFromTriplets(entries.begin(), entries.end());
    return a;
}

inline DenseOperator dense_ladder(std::uint32_t j, bool dagger, std::uint32_t m) {
    return {m, Eigen::MatrixXcd(sparse_ladder(j, dagger, m))};
}

/// Assembles a qubit operator column by column from the single-qubit actions
/// X|b⟩ = |1-b⟩, Y|0⟩ = i|1⟩, Y|1⟩ = -i|0⟩, Z|b⟩ = (-1)^b |b⟩.
inline SparseMatrix sparse_qubit(const QubitOperator &op, std::uint32_t m) {
    require_dense_size(m);
    if (op.span_qubits() > m)
        throw ValidationError("operator acts on qubit " + std::to_string(op.span_qubits() - 1) + " but only " +
                              std::to_string(m) + " qubits requested");
    const std::uint64_t dim = std::uint64_t{1} << m;
    std::vector<Eigen::Triplet<Complex>> entries;
    for (const auto &[p, c] : op.terms())
        for (std::uint64_t b = 0; b < dim; ++b) {
            std::uint64_t out = b;
            Complex phase = c;
            for (auto [q, a] : p.factors()) {
                bool one = (b >> q) & 1;
                switch (a) {
                case Axis::X: out ^= std::uint64_t{1} << q; break;
                case Axis::Y:
                    out ^= std::uint64_t{1} << q;
                    phase *= one ? Complex{0, -1} : Complex{0, 1};
                    break;
                case Axis::Z:
                    if (one) phase = -phase;
                    break;
                }
            }
            entries.emplace_back(static_cast<int>(out), static_cast<int>(b), phase);
        }
    SparseMatrix a(static_cast<int>(dim), static_cast<int>(dim));
    a.setFromTriplets(entries.begin(), entries.end());
    return a;
}

inline DenseOperator dense_qubit(const QubitOperator &op, std::uint32_t m) {
    return {m, Eigen::MatrixXcd(sparse_qubit(op, m))};
}

inline SparseMatrix sparse_fermion(const FermionOperator &op) {
    const auto m = op.n_modes();
    require_dense_size(m);
    const int dim = 1 << m;
    std::vector<std::array<SparseMatrix, 2>> ladders(m);
    for (std::uint32_t j = 0; j < m; ++j) {
        ladders[j][0] = sparse_ladder(j, false, m);
        ladders[j][1] = sparse_ladder(j, true, m);
    }
    SparseMatrix total(dim, dim);
    SparseMatrix identity(dim, dim);
    identity.setIdentity();
    for (const auto &t : op.terms()) {
        SparseMatrix product = identity * t.coefficient;
        for (const auto &f : t.factors) product = (product * ladders[f.mode][f.dagger ? 1 : 0]).pruned();
        total += product;
    }
    return total;
}

inline DenseOperator dense_fermion(const FermionOperator &op) {
    return {op.n_modes(), Eigen::MatrixXcd(sparse_fermion(op))};
}

/// Largest entry magnitude; 0 for an empty matrix.
inline double max_abs(const SparseMatrix &a) {
    double m = 0.0;
    for (int k = 0; k < a.outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(a, k); it; ++it) m = std::max(m, std::abs(it.value()));
    return m;
}

inline double max_abs(const Eigen::MatrixXcd &a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

inline constexpr double kHermiticityTolerance = 1e-10;

/// Dense check that op equals its conjugate transpose.
inline bool is_hermitian(const FermionOperator &op, double tol = kHermiticityTolerance) {
    auto a = sparse_fermion(op);
    SparseMatrix adj = a.adjoint();
    return max_abs(SparseMatrix(a - adj)) <= tol;
}

/// Π with Π|n⟩ = |encode_state(n)⟩.
inline SparseMatrix encoding_permutation(const SummationFamily &fam) {
    const auto m = fam.n_modes();
    require_dense_size(m);
    const std::uint64_t dim = std::uint64_t{1} << m;
    std::vector<Eigen::Triplet<Complex>> entries;
    for (std::uint64_t b = 0; b < dim; ++b) {
        auto x = encode_state(fam, basis_bits(b, m));
        entries.emplace_back(static_cast<int>(basis_index(x)), static_cast<int>(b), Complex{1.0, 0.0});
    }
    SparseMatrix pi(static_cast<int>(dim), static_cast<int>(dim));
    pi.setFromTriplets(entries.begin(), entries.end());
    return pi;
}

struct VerificationReport {
    std::uint32_t n_modes = 0;
    double anticommutator_residual = 0.0; // max over all {a,a}, {a†,a†}, {a,a†} - δ I
    double conjugation_residual = 0.0;    // image(a_j†) vs image(a_j)†
    double basis_permutation_residual = 0.0;
    bool encoding_bijective = true;
    bool parity_identity = true; // Σ_{k∈P(j)} x_k = Σ_{i<j} n_i (mod 2)
    bool flip_identity = true;   // x_j = n_j + Σ_{k∈F(j)} x_k (mod 2)
    std::vector<std::string> failures;

    bool passed() const noexcept { return failures.empty(); }
};

inline constexpr double kVerifyTolerance = 1e-12;

/**
 * Checks a mapping against the dense model: canonical anticommutation of the mapped ladder
 * operators, Π† image(a_j) Π = a_j, and the parity/flip identities over every basis state.
 */
inline VerificationReport verify_mapping(const MappingSets &sets, double tol = kVerifyTolerance) {
    const auto m = sets.n_modes;
    require_dense_size(m, kMaxExhaustiveModes);
    VerificationReport r;
    r.n_modes = m;
    const int dim = 1 << m;

    std::vector<std::array<SparseMatrix, 2>> image(m);
    for (std::uint32_t j = 0; j < m; ++j)
        for (int d = 0; d < 2; ++d) image[j][d] = sparse_qubit(map_ladder(j, d == 1, sets).op, m);

    SparseMatrix identity(dim, dim);
    identity.setIdentity();
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j) {
            auto anti = [&](int di, int dj) {
                SparseMatrix s = image[i][di] * image[j][dj] + image[j][dj] * image[i][di];
                return s;
            };
            r.anticommutator_residual = std::max(r.anticommutator_residual, max_abs(anti(0, 0)));
            r.anticommutator_residual = std::max(r.anticommutator_residual, max_abs(anti(1, 1)));
            SparseMatrix mixed = anti(0, 1);
            if (i == j) mixed -= identity;
            r.anticommutator_residual = std::max(r.anticommutator_residual, max_abs(mixed));
        }

    for (std::uint32_t j = 0; j < m; ++j) {
        SparseMatrix adj = image[j][0].adjoint();
        r.conjugation_residual = std::max(r.conjugation_residual, max_abs(SparseMatrix(image[j][1] - adj)));
    }

    const auto fam = sets.family();
    auto pi = encoding_permutation(fam);
    {
        std::vector<std::uint8_t> hit(static_cast<std::size_t>(dim), 0);
        for (int k = 0; k < pi.outerSize(); ++k)
            for (SparseMatrix::InnerIterator it(pi, k); it; ++it) hit[static_cast<std::size_t>(it.row())]++;
        r.encoding_bijective = std::all_of(hit.begin(), hit.end(), [](std::uint8_t h) { return h == 1; });
    }
    SparseMatrix pi_adj = pi.adjoint();
    for (std::uint32_t j = 0; j < m; ++j)
        for (int d = 0; d < 2; ++d) {
            SparseMatrix pulled = pi_adj * image[j][d] * pi;
            r.basis_permutation_residual =
                std::max(r.basis_permutation_residual, max_abs(SparseMatrix(pulled - sparse_ladder(j, d == 1, m))));
        }

    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); ++b) {
        auto n = basis_bits(b, m);
        auto x = encode_state(fam, n);
        std::uint8_t below = 0;
        for (std::uint32_t j = 0; j < m; ++j) {
            std::uint8_t p = 0, f = 0;
            for (auto k : sets.P(j)) p ^= x[k];
            for (auto k : sets.F(j)) f ^= x[k];
            if (p != below) r.parity_identity = false;
            if (x[j] != (n[j] ^ f)) r.flip_identity = false;
            below ^= n[j];
        }
    }

    auto fmt = [](double v) { return std::to_string(v); };
    if (r.anticommutator_residual >= tol) r.failures.push_back("anticommutation residual " + fmt(r.anticommutator_residual));
    if (r.conjugation_residual >= tol) r.failures.push_back("conjugation residual " + fmt(r.conjugation_residual));
    if (!r.encoding_bijective) r.failures.push_back("state encoding is not a bijection");
    if (r.basis_permutation_residual >= tol)
        r.failures.push_back("basis-permutation residual " + fmt(r.basis_permutation_residual));
    if (!r.parity_identity) r.failures.push_back("parity identity fails");
    if (!r.flip_identity) r.failures.push_back("flip identity fails");
    return r;
}

/// Ascending eigenvalues of a Hermitian matrix.
inline std::vector<double> eigenvalues(const Eigen::MatrixXcd &a) {
    if (max_abs(Eigen::MatrixXcd(a - a.adjoint())) > kHermiticityTolerance)
        throw ValidationError("eigenvalues requested for a non-Hermitian operator");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a, Eigen::EigenvaluesOnly);
    const auto &ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

struct SpectrumComparison {
    bool equal = false;
    double max_deviation = 0.0;
};

inline SpectrumComparison compare_spectra(const std::vector<double> &a, const std::vector<double> &b,
                                          double tol) {
    if (a.size() != b.size()) return {false, std::numeric_limits<double>::infinity()};
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return {d <= tol, d};
}

/// Sorted real spectra of two qubit operators on M qubits, compared elementwise.
inline SpectrumComparison spectra_equal(const QubitOperator &a, const QubitOperator &b, std::uint32_t m,
                                        double tol = 1e-9) {
    return compare_spectra(eigenvalues(dense_qubit(a, m).matrix), eigenvalues(dense_qubit(b, m).matrix), tol);
}

} // namespace fermap::oracle
