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
#include <gtest/gtest.h>

#include "fermap/catalog.hpp"
#include "fermap/transform.hpp"
#include "support.hpp"

using namespace fermap;
using support::Mat;

namespace {

constexpr double kListingTolerance = 1e-5;

const char *kJwListing = R"(
-0.81530 I
-0.04544 X0 X1 Y2 Y3
+0.04544 X0 Y1 Y2 X3
+0.04544 Y0 X1 X2 Y3
-0.04544 Y0 Y1 X2 X3
+0.16988 Z0
+0.16988 Z1
-0.21886 Z2
+0.16821 Z0 Z1
+0.12005 Z0 Z2
-0.21886 Z3
+0.16549 Z0 Z3
+0.16549 Z1 Z2
+0.12005 Z1 Z3
+0.17395 Z2 Z3
)";

const char *kBkListing = R"(
-0.81530 I
+0.04544 X0 Z1 X2
+0.04544 X0 Z1 X2 Z3
+0.04544 Y0 Z1 Y2 Z3
+0.04544 Y0 Z1 Y2
+0.16988 Z0
+0.16988 Z0 Z1
+0.16821 Z1
+0.12005 Z0 Z2
+0.16549 Z0 Z1 Z2
-0.21886 Z2
+0.17395 Z1 Z3
+0.12005 Z0 Z2 Z3
-0.21886 Z1 Z2 Z3
+0.16549 Z0 Z1 Z2 Z3
)";

const char *kTwoSpListing = R"(
-0.81530 I
+0.04544 X0 X2 Z3
+0.04544 X0 Z1 X2
+0.04544 Y0 Y2 Z3
+0.04544 Y0 Z1 Y2
+0.16988 Z0
+0.16988 Z0 Z1
+0.16821 Z1
+0.12005 Z0 Z2
-0.21886 Z2 Z3
-0.21886 Z2
+0.17395 Z3
+0.16549 Z0 Z1 Z2
+0.16549 Z0 Z2 Z3
+0.12005 Z0 Z1 Z2 Z3
)";

void expect_matches_listing(const QubitOperator &got, const char *listing) {
    auto want = parse_qubit_operator(listing);
    EXPECT_EQ(got.size(), want.size());
    for (const auto &[p, c] : want.terms()) {
        auto it = got.terms().find(p);
        ASSERT_NE(it, got.terms().end()) << "missing " << p.str();
        EXPECT_NEAR(it->second.real(), c.real(), kListingTolerance) << p.str();
        EXPECT_NEAR(it->second.imag(), 0.0, 1e-12) << p.str();
    }
    EXPECT_LE(max_abs_difference(got, want), kListingTolerance);
}

// Permutation sending |n> to |encode(n)>.
Mat encoding_matrix(const SummationFamily &fam) {
    const auto m = fam.n_modes();
    Mat pi = Mat::Zero(1 << m, 1 << m);
    for (std::uint32_t b = 0; b < (1u << m); ++b) {
        BitVector n(m);
        for (std::uint32_t j = 0; j < m; ++j) n[j] = (b >> j) & 1;
        auto x = encode_state(fam, n);
        std::uint32_t xb = 0;
        for (std::uint32_t j = 0; j < m; ++j) xb |= std::uint32_t{x[j]} << j;
        pi(xb, b) = 1;
    }
    return pi;
}

} // namespace

TEST(MapLadder, JordanWigner) {
    auto sets = derive_sets(jw(4));
    auto a2 = map_ladder(2, false, sets).op;
    QubitOperator want;
    want.accumulate(parse_pauli_string("Z0 Z1 X2"), 0.5);
    want.accumulate(parse_pauli_string("Z0 Z1 Y2"), Complex{0, 0.5});
    EXPECT_EQ(a2, want);
    auto a2d = map_ladder(2, true, sets);
    EXPECT_TRUE(a2d.dagger);
    EXPECT_EQ(a2d.mode, 2u);
    EXPECT_NEAR(std::abs(a2d.op.terms().at(parse_pauli_string("Z0 Z1 Y2")) - Complex{0, -0.5}), 0.0, 1e-15);
}

TEST(MapLadder, Parity) {
    auto sets = derive_sets(parity(4));
    auto a1 = map_ladder(1, false, sets).op;
    QubitOperator want;
    want.accumulate(parse_pauli_string("Z0 X1 X2 X3"), 0.5);
    want.accumulate(parse_pauli_string("Y1 X2 X3"), Complex{0, 0.5});
    EXPECT_EQ(a1, want);
    Mat pi = encoding_matrix(parity(4));
    EXPECT_LE((pi.adjoint() * support::kron_operator(a1, 4) * pi - support::occupation_ladder(1, false, 4)).cwiseAbs().maxCoeff(),
              1e-12);
}

TEST(MapLadder, SingleMode) {
    auto a0 = map_ladder(0, false, derive_sets(jw(1))).op;
    QubitOperator want;
    want.accumulate(parse_pauli_string("X0"), 0.5);
    want.accumulate(parse_pauli_string("Y0"), Complex{0, 0.5});
    EXPECT_EQ(a0, want);
    Mat q(2, 2);
    q << 0, 1, 0, 0;
    EXPECT_LE((support::kron_operator(a0, 1) - q).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(MapLadder, ImageHasTwoHalfTerms) {
    for (std::uint32_t m = 1; m <= 10; ++m)
        for (const auto &[label, fam] : support::catalog_at(m)) {
            auto sets = derive_sets(fam);
            for (std::uint32_t j = 0; j < m; ++j)
                for (bool d : {false, true}) {
                    auto op = map_ladder(j, d, sets).op;
                    ASSERT_EQ(op.size(), 2u) << label;
                    for (const auto &[p, c] : op.terms()) ASSERT_NEAR(std::abs(c), 0.5, 1e-15);
                }
        }
    EXPECT_THROW(map_ladder(4, false, derive_sets(jw(4))), ValidationError);
}

TEST(MapHamiltonian, HydrogenListings) {
    auto h = support::h2_fixture();
    expect_matches_listing(map_hamiltonian(h, derive_sets(jw(4))), kJwListing);
    expect_matches_listing(map_hamiltonian(h, derive_sets(fenwick(4))), kBkListing);
    expect_matches_listing(map_hamiltonian(h, derive_sets(two_sp(4, 2))), kTwoSpListing);
}

TEST(MapHamiltonian, RealCoefficientsForHermitianInput) {
    auto h = support::h2_fixture();
    for (const auto &[label, fam] : support::catalog_at(4))
        for (const auto &[p, c] : map_hamiltonian(h, derive_sets(fam)).terms())
            EXPECT_LE(std::abs(c.imag()), 1e-12) << label << " " << p.str();
}

TEST(MapHamiltonian, ModeCountMismatch) {
    EXPECT_THROW(map_hamiltonian(support::h2_fixture(), derive_sets(jw(5))), ValidationError);
}

TEST(MapHamiltonian, DenseAgreesWithOccupationBasis) {
    std::mt19937 rng(5);
    for (std::uint32_t m = 2; m <= 5; ++m) {
        auto h = support::random_hermitian_fermion(m, rng);
        Mat direct = support::occupation_operator(h);
        for (const auto &[label, fam] : support::catalog_at(m)) {
            Mat pi = encoding_matrix(fam);
            Mat mapped = support::kron_operator(map_hamiltonian(h, derive_sets(fam)), m);
            ASSERT_LE((pi.adjoint() * mapped * pi - direct).cwiseAbs().maxCoeff(), 1e-10) << label << " M=" << m;
        }
    }
}

TEST(MappingWeight, Examples) {
    EXPECT_EQ(mapping_pauli_weight(derive_sets(jw(8))), 8u);
    EXPECT_EQ(mapping_pauli_weight(derive_sets(fenwick(8))), 4u);
    auto msp_weight = mapping_pauli_weight(derive_sets(msp(12, {2, 3, 2})));
    EXPECT_LE(msp_weight, 5u);
    EXPECT_EQ(msp_weight, 5u);
}

TEST(TransformProperties, AnticommutationConjugationAndBasisPermutation) {
    for (std::uint32_t m = 1; m <= 6; ++m)
        for (const auto &[label, fam] : support::catalog_at(m)) {
            auto sets = derive_sets(fam);
            Mat pi = encoding_matrix(fam);
            std::vector<Mat> a(m), ad(m);
            for (std::uint32_t j = 0; j < m; ++j) {
                a[j] = support::kron_operator(map_ladder(j, false, sets).op, m);
                ad[j] = support::kron_operator(map_ladder(j, true, sets).op, m);
                ASSERT_LE((ad[j] - a[j].adjoint()).cwiseAbs().maxCoeff(), 1e-12) << label;
                ASSERT_LE((pi.adjoint() * a[j] * pi - support::occupation_ladder(j, false, m)).cwiseAbs().maxCoeff(), 1e-12)
                    << label << " M=" << m << " j=" << j;
            }
            const Mat id = Mat::Identity(1 << m, 1 << m);
            for (std::uint32_t i = 0; i < m; ++i)
                for (std::uint32_t j = 0; j < m; ++j) {
                    ASSERT_LE((a[i] * a[j] + a[j] * a[i]).cwiseAbs().maxCoeff(), 1e-12) << label;
                    ASSERT_LE((ad[i] * ad[j] + ad[j] * ad[i]).cwiseAbs().maxCoeff(), 1e-12) << label;
                    Mat expect = i == j ? id : Mat(Mat::Zero(1 << m, 1 << m));
                    ASSERT_LE((a[i] * ad[j] + ad[j] * a[i] - expect).cwiseAbs().maxCoeff(), 1e-12)
                        << label << " M=" << m << " i=" << i << " j=" << j;
                }
        }
}
