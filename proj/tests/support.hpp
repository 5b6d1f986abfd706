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

// Shared test helpers: fixture loading, random generators and an independent dense model of
// gates and Pauli strings built from explicit Kronecker products.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fermap/fermap.hpp"

namespace fermap::support {

inline std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline FermionOperator h2_fixture() {
    return parse_fermion_file(read_file(std::string(FERMAP_FIXTURE_DIR) + "/h2_sto3g_0.75.ferm"));
}

/// Seven-mode example family: S(2)={1}, S(4)={0,3}, S(5)={0,3,4}, S(6)={0..5}.
inline SummationFamily seven_mode_family() {
    return SummationFamily({{}, {}, {1}, {}, {0, 3}, {0, 3, 4}, {0, 1, 2, 3, 4, 5}});
}

/// Random forest with parents above children; descendant sets satisfy both constraints.
inline SummationFamily random_family(std::uint32_t m, std::mt19937 &rng) {
    std::vector<std::optional<std::uint32_t>> parent(m);
    std::bernoulli_distribution root(0.3);
    for (std::uint32_t j = 0; j + 1 < m; ++j) {
        if (root(rng)) continue;
        std::uniform_int_distribution<std::uint32_t> pick(j + 1, m - 1);
        parent[j] = pick(rng);
    }
    return tree_to_family(MappingTree(std::move(parent)));
}

inline PauliString random_pauli(std::uint32_t n, std::mt19937 &rng) {
    std::uniform_int_distribution<int> axis(0, 3);
    std::vector<PauliString::Factor> f;
    for (std::uint32_t q = 0; q < n; ++q)
        if (int a = axis(rng); a) f.emplace_back(q, static_cast<Axis>(a));
    return PauliString(std::move(f));
}

/// Random Hermitian operator: one- and two-body terms with their conjugates added.
inline FermionOperator random_hermitian_fermion(std::uint32_t m, std::mt19937 &rng, int n_terms = 8) {
    std::uniform_int_distribution<std::uint32_t> mode(0, m - 1);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::bernoulli_distribution two_body(0.5);
    FermionOperator op(m);
    for (int t = 0; t < n_terms; ++t) {
        std::complex<double> c{gauss(rng), gauss(rng)};
        if (two_body(rng))
            op.add_term(c, {{mode(rng), true}, {mode(rng), true}, {mode(rng), false}, {mode(rng), false}});
        else
            op.add_term(c, {{mode(rng), true}, {mode(rng), false}});
    }
    op.add_term({gauss(rng), 0.0}, {});
    return op + hermitian_conjugate(op);
}

/// Every catalog mapping that makes sense at M modes, with a readable label.
inline std::vector<std::pair<std::string, SummationFamily>> catalog_at(std::uint32_t m) {
    std::vector<std::pair<std::string, SummationFamily>> out;
    out.emplace_back("jw", jw(m));
    out.emplace_back("parity", parity(m));
    out.emplace_back("bk", fenwick(m));
    out.emplace_back("msp:binary", msp(m, binary_msp_vector(m)));
    if (m >= 2) {
        out.emplace_back("jw-variant", jw_variant(m));
        out.emplace_back("2sp:w=2", two_sp(m, 2));
        out.emplace_back("sbk:h=2", sbk(m, 2));
        out.emplace_back("msp-v1:binary", msp_v1(m, binary_msp_vector(m)));
        out.emplace_back("msp-v2:binary", msp_v2(m, binary_msp_vector(m)));
    }
    if (m >= 3) {
        out.emplace_back("msp:3-2", msp(m, pad_with_twos(m, MspVector{3})));
        out.emplace_back("msp-v1:3-2", msp_v1(m, pad_with_twos(m, MspVector{3})));
        out.emplace_back("msp-v2:3-2", msp_v2(m, pad_with_twos(m, MspVector{3})));
        out.emplace_back("2sp:w=3", two_sp(m, 3));
        out.emplace_back("sbk:h=3", sbk(m, 3));
    }
    if (m >= 5) out.emplace_back("msp:5", msp(m, MspVector{m}));
    return out;
}

// Independent dense model (qubit 0 = least significant bit of the basis index).

using Mat = Eigen::MatrixXcd;

inline Mat pauli_2x2(std::optional<Axis> a) {
    using C = std::complex<double>;
    Mat m(2, 2);
    if (!a) m << 1, 0, 0, 1;
    else if (*a == Axis::X) m << 0, 1, 1, 0;
    else if (*a == Axis::Y) m << 0, C(0, -1), C(0, 1), 0;
    else m << 1, 0, 0, -1;
    return m;
}

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// P_{n-1} ⊗ ... ⊗ P_0.
inline Mat kron_pauli(const PauliString &p, std::uint32_t n) {
    Mat out = Mat::Identity(1, 1);
    for (std::uint32_t q = n; q-- > 0;) out = kron(out, pauli_2x2(p.at(q)));
    return out;
}

inline Mat kron_operator(const QubitOperator &op, std::uint32_t n) {
    Mat out = Mat::Zero(1 << n, 1 << n);
    for (const auto &[p, c] : op.terms()) out += c * kron_pauli(p, n);
    return out;
}

/// Single-qubit gate `g` on qubit q of n.
inline Mat embed(const Mat &g, std::uint32_t q, std::uint32_t n) {
    Mat out = Mat::Identity(1, 1);
    for (std::uint32_t k = n; k-- > 0;) out = kron(out, k == q ? g : Mat(Mat::Identity(2, 2)));
    return out;
}

inline Mat gate_matrix(const Gate &g, std::uint32_t n) {
    using C = std::complex<double>;
    const double s = std::sin(g.angle / 2), c = std::cos(g.angle / 2);
    Mat m(2, 2);
    switch (g.kind) {
    case Gate::Kind::H:
        m << 1, 1, 1, -1;
        return embed(m / std::sqrt(2.0), g.target, n);
    case Gate::Kind::RX:
        m << c, C(0, -s), C(0, -s), c;
        return embed(m, g.target, n);
    case Gate::Kind::RZ:
        m << C(c, -s), 0, 0, C(c, s);
        return embed(m, g.target, n);
    case Gate::Kind::CNOT: {
        const int dim = 1 << n;
        Mat u = Mat::Zero(dim, dim);
        for (int b = 0; b < dim; ++b) {
            int out = ((b >> g.control) & 1) ? b ^ (1 << g.target) : b;
            u(out, b) = 1;
        }
        return u;
    }
    }
    return {};
}

/// a_j on the occupation basis: |n> -> (-1)^{n_0+...+n_{j-1}} |n - e_j> when n_j = 1.
inline Mat occupation_ladder(std::uint32_t j, bool dagger, std::uint32_t m) {
    const int dim = 1 << m;
    Mat a = Mat::Zero(dim, dim);
    for (int b = 0; b < dim; ++b) {
        if (((b >> j) & 1) != (dagger ? 0 : 1)) continue;
        int sign = 1;
        for (std::uint32_t i = 0; i < j; ++i)
            if ((b >> i) & 1) sign = -sign;
        a(b ^ (1 << j), b) = sign;
    }
    return a;
}

inline Mat occupation_operator(const FermionOperator &h) {
    const std::uint32_t m = h.n_modes();
    Mat out = Mat::Zero(1 << m, 1 << m);
    for (const auto &t : h.terms()) {
        Mat prod = Mat::Identity(1 << m, 1 << m);
        for (const auto &f : t.factors) prod = prod * occupation_ladder(f.mode, f.dagger, m);
        out += t.coefficient * prod;
    }
    return out;
}

/// Sorted eigenvalues of the Hermitian matrix restricted to basis states accepted by `keep`.
template <class Keep> std::vector<double> sector_spectrum(const Mat &h, Keep keep) {
    std::vector<int> idx;
    for (int b = 0; b < h.rows(); ++b)
        if (keep(b)) idx.push_back(b);
    Mat sub(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c) sub(r, c) = h(idx[r], idx[c]);
    Eigen::SelfAdjointEigenSolver<Mat> es(sub);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    return ev;
}

inline std::vector<double> spectrum(const Mat &h) {
    return sector_spectrum(h, [](int) { return true; });
}

/// Unitary of a circuit: later gates multiply on the left.
inline Mat circuit_unitary(const Circuit &c) {
    Mat u = Mat::Identity(1 << c.n_qubits(), 1 << c.n_qubits());
    for (const auto &g : c.gates()) u = gate_matrix(g, c.n_qubits()) * u;
    return u;
}

} // namespace fermap::support
