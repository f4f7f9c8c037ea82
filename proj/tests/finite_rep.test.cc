// Copyright 2026 The irrepsk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "irrepsk/finite_rep.h"

#include <cmath>
#include <functional>
#include <numbers>

#include "gtest/gtest.h"

#include "irrepsk/error.h"

using namespace irrepsk;

namespace {

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    return ComplexMatrix::from_row_major(std::vector<Complex>{a, b, c, d});
}

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::IoError;
}

std::vector<FiniteGroupRep> all_builtins() {
    return {
        build_builtin(BuiltinGroup::PauliProjective),
        build_builtin(BuiltinGroup::WeylProjective, 3),
        build_builtin(BuiltinGroup::QuaternionQ8),
        build_builtin(BuiltinGroup::S3TwoDim),
    };
}

}  // namespace

TEST(finite_rep, builtin_orders_and_flags) {
    auto reps = all_builtins();
    EXPECT_EQ(reps[0].order(), 4u);
    EXPECT_EQ(reps[1].order(), 9u);
    EXPECT_EQ(reps[1].dim(), 3u);
    EXPECT_EQ(reps[2].order(), 8u);
    EXPECT_EQ(reps[3].order(), 6u);
    EXPECT_TRUE(reps[0].projective());
    EXPECT_TRUE(reps[1].projective());
    EXPECT_FALSE(reps[2].projective());
    // The reflections were rescaled into SU(2), so they square to −I.
    EXPECT_TRUE(reps[3].projective());
    for (const auto &rep : reps) {
        EXPECT_TRUE(rep.certificate().irreducible);
        EXPECT_EQ(dist(rep.element(0), ComplexMatrix::identity(rep.dim())), 0.0);
    }
}

TEST(finite_rep, builtin_names_round_trip) {
    for (auto tag : {BuiltinGroup::PauliProjective, BuiltinGroup::WeylProjective, BuiltinGroup::QuaternionQ8,
                     BuiltinGroup::S3TwoDim}) {
        EXPECT_EQ(parse_builtin_group(builtin_group_name(tag)), tag);
    }
    EXPECT_FALSE(parse_builtin_group("sl2").has_value());
}

TEST(finite_rep, pauli_cayley_phases) {
    // X̃ = −iX etc.: X̃Ỹ = −XY = −iZ = Z̃, while ỸX̃ = iZ = −Z̃.
    auto rep = build_builtin(BuiltinGroup::PauliProjective);
    EXPECT_EQ(rep.product(1, 2).index, 3u);
    EXPECT_NEAR(rep.product(1, 2).phase, 0.0, 1e-12);
    EXPECT_EQ(rep.product(2, 1).index, 3u);
    EXPECT_NEAR(rep.product(2, 1).phase, std::numbers::pi, 1e-12);
    // X̃² = −I.
    EXPECT_EQ(rep.product(1, 1).index, 0u);
    EXPECT_NEAR(rep.product(1, 1).phase, std::numbers::pi, 1e-12);
}

TEST(finite_rep, cayley_table_is_consistent) {
    for (const auto &rep : all_builtins()) {
        for (std::size_t a = 0; a < rep.order(); a++) {
            for (std::size_t b = 0; b < rep.order(); b++) {
                const auto &e = rep.product(a, b);
                auto expected = rep.element(e.index) * std::polar(1.0, e.phase);
                EXPECT_LE(dist(rep.element(a) * rep.element(b), expected), 1e-12);
            }
            std::size_t h = rep.inverse(a);
            auto prod = rep.element(a) * rep.element(h);
            auto id = ComplexMatrix::identity(rep.dim()) * std::polar(1.0, rep.inverse_phase(a));
            EXPECT_LE(dist(prod, id), 1e-12);
        }
    }
}

TEST(finite_rep, averaging_projects_onto_trace) {
    Rng rng(3);
    for (const auto &rep : all_builtins()) {
        double g = static_cast<double>(rep.order());
        double d = static_cast<double>(rep.dim());
        for (int t = 0; t < 20; t++) {
            auto m = random_ginibre(rep.dim(), rng);
            auto expected = ComplexMatrix::identity(rep.dim()) * (g * m.trace() / d);
            EXPECT_LE(dist(average(rep, m), expected), 1e-12 * g * op_norm(m));
        }
    }
}

TEST(finite_rep, schur_orthogonality_for_genuine_irrep) {
    auto q8 = build_builtin(BuiltinGroup::QuaternionQ8);
    EXPECT_LE(check_schur_orthogonality(q8), 1e-10);
    auto pauli = build_builtin(BuiltinGroup::PauliProjective);
    EXPECT_EQ(kind_of([&] { check_schur_orthogonality(pauli); }), ErrorKind::ProjectiveUnsupported);
}

TEST(finite_rep, identity_is_pinned_first) {
    auto x = mat2(0, 1, 1, 0);
    auto id = ComplexMatrix::identity(2);
    auto y = mat2(0, Complex(0, -1), Complex(0, 1), 0);
    auto z = mat2(1, 0, 0, -1);
    auto rep = infer_group({x, y, id, z}, 1e-9, {"X", "Y", "I", "Z"});
    EXPECT_EQ(rep.name(0), "I");
    EXPECT_EQ(rep.name(1), "X");
    EXPECT_EQ(rep.name(3), "Z");
    EXPECT_TRUE(rep.projective());
}

TEST(finite_rep, identity_up_to_phase_is_replaced_exactly) {
    auto rep = infer_group({ComplexMatrix::identity(2) * Complex(0, 1), mat2(0, 1, 1, 0), mat2(1, 0, 0, -1),
                            mat2(0, Complex(0, -1), Complex(0, 1), 0)});
    EXPECT_EQ(dist(rep.element(0), ComplexMatrix::identity(2)), 0.0);
}

TEST(finite_rep, rejects_bad_inputs) {
    auto id = ComplexMatrix::identity(2);
    auto x = mat2(0, 1, 1, 0);
    auto z = mat2(1, 0, 0, -1);
    auto h = mat2(1 / std::numbers::sqrt2, 1 / std::numbers::sqrt2, 1 / std::numbers::sqrt2, -1 / std::numbers::sqrt2);
    EXPECT_EQ(kind_of([&] { infer_group({id, x, z}); }), ErrorKind::NotClosed);
    EXPECT_EQ(kind_of([&] { infer_group({id, h, x}); }), ErrorKind::NotClosed);
    auto y = mat2(0, Complex(0, -1), Complex(0, 1), 0);
    EXPECT_EQ(kind_of([&] { infer_group({id, x, y, z, x * Complex(0, 1)}); }), ErrorKind::AmbiguousMatch);
    EXPECT_EQ(kind_of([&] { infer_group({id, x, y, z, x}); }), ErrorKind::AmbiguousMatch);
    EXPECT_EQ(kind_of([&] { infer_group({id, z}); }), ErrorKind::NotIrreducible);
    EXPECT_EQ(kind_of([&] { infer_group({}); }), ErrorKind::NotClosed);
}

TEST(finite_rep, reducible_certificate) {
    auto rep = infer_group({ComplexMatrix::identity(2), mat2(1, 0, 0, -1)}, 1e-9, {}, false);
    EXPECT_FALSE(rep.certificate().irreducible);
    EXPECT_GT(rep.certificate().worst_residual, 0.1);
    EXPECT_FALSE(check_irreducible(rep).irreducible);
}

TEST(finite_rep, central_extension_orders) {
    auto pauli = central_extend(build_builtin(BuiltinGroup::PauliProjective));
    EXPECT_EQ(pauli.order(), 8u);
    EXPECT_FALSE(pauli.projective());
    EXPECT_LE(check_schur_orthogonality(pauli), 1e-10);
    auto weyl = central_extend(build_builtin(BuiltinGroup::WeylProjective, 3));
    EXPECT_EQ(weyl.order(), 27u);
    EXPECT_FALSE(weyl.projective());
    auto q8 = build_builtin(BuiltinGroup::QuaternionQ8);
    EXPECT_EQ(central_extend(q8).order(), 8u);
}

TEST(finite_rep, cover_equivalence) {
    Rng rng(9);
    auto pauli = build_builtin(BuiltinGroup::PauliProjective);
    auto weyl = build_builtin(BuiltinGroup::WeylProjective, 3);
    for (int t = 0; t < 20; t++) {
        EXPECT_LE(check_cover_equivalence(pauli, random_ginibre(2, rng)), 1e-10);
        EXPECT_LE(check_cover_equivalence(weyl, random_ginibre(3, rng)), 1e-10);
    }
}

TEST(finite_rep, weyl_in_higher_dimension) {
    auto rep = build_builtin(BuiltinGroup::WeylProjective, 4);
    EXPECT_EQ(rep.order(), 16u);
    EXPECT_TRUE(rep.certificate().irreducible);
    EXPECT_EQ(kind_of([] { build_builtin(BuiltinGroup::WeylProjective, 1); }), ErrorKind::DimError);
}
