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

#include "irrepsk/sk_irrep.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>

#include "gtest/gtest.h"

#include "irrepsk/error.h"

using namespace irrepsk;

namespace {

const std::string kData = IRREPSK_DATA_DIR;

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::IoError;
}

ComplexMatrix pauli_combo(double x, double y, double z) {
    return ComplexMatrix::from_row_major(std::vector<Complex>{z, Complex(x, -y), Complex(x, y), -z});
}

/// exp(i·0.01·(X + 2Y + 3Z)/√14): a generic rotation close to I.
ComplexMatrix small_rotation() {
    double s = 1.0 / std::sqrt(14.0);
    return matrix_exp_tangent(pauli_combo(s, 2 * s, 3 * s), 0.01, Ambient::SU);
}

GateSet pauli_with(const std::string &name, const ComplexMatrix &m, Mode mode = Mode::SU, double radius = 1.0) {
    return GateSet::create(mode, build_builtin(BuiltinGroup::PauliProjective), {{name, m}}, kDefaultTolerance, radius);
}

double phase_free_dist(const ComplexMatrix &a, const ComplexMatrix &b) {
    return dist(a, b * relative_phase(a, b));
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

TEST(sk_irrep, contraction_constants) {
    EXPECT_EQ(contraction_constant(4, 2), 28.0);
    EXPECT_EQ(contraction_constant(9, 3), 135.0);
    EXPECT_EQ(contraction_constant(8, 2), 88.0);
    EXPECT_EQ(contraction_constant(build_builtin(BuiltinGroup::S3TwoDim)), 54.0);
}

TEST(sk_irrep, symmetrize_identity_word) {
    auto gs = load_gateset(kData + "/gatesets/pauli_h_t.json");
    auto f = symmetrize(gs, GateWord(2));
    EXPECT_EQ(f.length(), 6u);
    EXPECT_LE(center_dist(f.product(), ComplexMatrix::identity(2)), 1e-14);
    EXPECT_LE(dist(symmetrize_matrix(gs.irrep(), ComplexMatrix::identity(2)), ComplexMatrix::identity(2)), 1e-14);
}

TEST(sk_irrep, symmetrize_structure_and_length) {
    auto gs = load_gateset(kData + "/gatesets/q8_h_t.json");
    GateWord w(gs, {8, 9, 9});
    auto f = symmetrize(gs, w);
    std::size_t g = gs.irrep().order();
    EXPECT_EQ(f.length(), g * w.length() + 2 * (g - 1));
    EXPECT_LE(f.length(), g * w.length() + 2 * g);
    // First block is ρ(g₁) w ρ(g₁)⁻¹, last block is w alone.
    EXPECT_EQ(f.indices()[0], 1u);
    EXPECT_EQ(f.indices()[4], gs.irrep().inverse(1));
    EXPECT_TRUE(std::equal(w.indices().begin(), w.indices().end(), f.indices().end() - 3));
}

TEST(sk_irrep, word_matches_matrix_form) {
    Rng rng(12);
    for (const char *file : {"pauli_h_t", "q8_h_t", "s3_h_t", "weyl3_f_p"}) {
        auto gs = load_gateset(kData + "/gatesets/" + file + ".json");
        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(gs.size() - 1));
        for (int t = 0; t < 10; t++) {
            std::vector<std::uint32_t> idx;
            for (int k = 0; k < 5; k++) {
                idx.push_back(pick(rng));
            }
            GateWord w(gs, idx);
            auto f = symmetrize(gs, w);
            EXPECT_LE(phase_free_dist(f.product(), symmetrize_matrix(gs.irrep(), w.product())), 1e-10) << file;
        }
    }
}

TEST(sk_irrep, pauli_example_contracts) {
    auto w = matrix_exp_tangent(pauli_combo(1 / std::sqrt(2.0), 0, 1 / std::sqrt(2.0)), 0.01, Ambient::SU);
    auto rep = build_builtin(BuiltinGroup::PauliProjective);
    EXPECT_LE(dist(symmetrize_matrix(rep, w), ComplexMatrix::identity(2)), 28 * 0.01 * 0.01);
}

TEST(sk_irrep, quadratic_contraction_for_builtins) {
    Rng rng(31);
    for (const auto &rep : all_builtins()) {
        double c = contraction_constant(rep);
        auto id = ComplexMatrix::identity(rep.dim());
        for (double eps : {1e-2, 1e-3}) {
            for (int t = 0; t < 100; t++) {
                auto w = matrix_exp_tangent(random_traceless_hermitian(rep.dim(), rng), eps, Ambient::SU);
                double e = dist(w, id);
                ASSERT_LE(dist(symmetrize_matrix(rep, w), id), c * e * e);
            }
        }
    }
}

TEST(sk_irrep, first_order_term_keeps_only_trace) {
    Rng rng(2);
    for (const auto &rep : all_builtins()) {
        for (int t = 0; t < 20; t++) {
            auto o = random_ginibre(rep.dim(), rng);
            ComplexMatrix sum = ComplexMatrix::zero(rep.dim());
            for (std::size_t g = 0; g < rep.order(); g++) {
                sum += rep.element(g) * o * rep.element(g).adjoint();
            }
            double expected = static_cast<double>(rep.order()) * std::abs(o.trace()) / static_cast<double>(rep.dim());
            EXPECT_NEAR(op_norm(sum), expected, 1e-9 * (1 + expected));
        }
    }
}

TEST(sk_irrep, commuting_case_is_exact) {
    auto rep = build_builtin(BuiltinGroup::PauliProjective);
    auto w = matrix_exp_tangent(pauli_combo(0, 0, 1), 1e-2, Ambient::SU);
    std::vector<std::size_t> order{1, 2, 3};
    do {
        EXPECT_LE(dist(symmetrize_matrix(rep, w, order), ComplexMatrix::identity(2)), 1e-15);
    } while (std::next_permutation(order.begin(), order.end()));
}

TEST(sk_irrep, refine_t_inverse_is_exact) {
    auto gs = load_gateset(kData + "/gatesets/pauli_h_t.json");
    auto net = build_net(gs, 10, 100000);
    std::size_t t = *gs.find("T");
    auto r = refine_inverse(gs, net, t, 1e-6);
    EXPECT_EQ(r.depth, 0u);
    EXPECT_LE(r.achieved, 1e-10);
    EXPECT_LE(gs.distance(evaluate(gs, r.word.indices()), gs.inverse_matrix(t)), 1e-6);
    EXPECT_DOUBLE_EQ(r.eps0, 1.0 / 56.0);
    EXPECT_LE(r.word.length(), 4u);
}

TEST(sk_irrep, refine_irrep_element) {
    auto gs = load_gateset(kData + "/gatesets/pauli_h_t.json");
    auto net = build_net(gs, 4, 100000);
    auto r = refine_inverse(gs, net, 2, 1e-9);
    EXPECT_EQ(r.depth, 0u);
    EXPECT_LE(r.achieved, 1e-10);
}

TEST(sk_irrep, refine_generic_rotation_iterates) {
    auto gs = pauli_with("R", small_rotation());
    auto net = build_net(gs, 4, 100000);
    std::size_t i = *gs.find("R");
    auto r = refine_inverse(gs, net, i, 1e-12);
    ASSERT_GE(r.depth, 2u);
    for (std::size_t k = 0; k < r.trace.size(); k++) {
        const auto &s = r.trace[k];
        EXPECT_EQ(s.k, k);
        EXPECT_TRUE(s.decay_ok) << k;
        EXPECT_TRUE(s.contraction_ok) << k;
        EXPECT_TRUE(s.length_ok) << k;
        EXPECT_LE(s.error, 2.0 * (1.0 / 56.0) / std::pow(2.0, std::pow(2.0, k)));
        if (k > 0) {
            EXPECT_EQ(s.length, 4 * r.trace[k - 1].length + 6);
            EXPECT_LE(s.error, 28 * r.trace[k - 1].error * r.trace[k - 1].error + 1e-9);
        }
    }
    EXPECT_LE(r.achieved, 1e-12);
    EXPECT_LE(gs.distance(evaluate(gs, r.word.indices()), gs.inverse_matrix(i)), 1e-12);
    EXPECT_EQ(r.word.length(), r.trace.back().length - 1);
    // The emitted word ends with V: the trailing generator was stripped.
    std::vector<std::uint32_t> v(r.word.indices().end() - static_cast<std::ptrdiff_t>(r.v_length),
                                 r.word.indices().end());
    EXPECT_LE(gs.distance(evaluate(gs, v) * gs.matrix(i), ComplexMatrix::identity(2)), 1.0 / 56.0);
    for (auto g : r.word.indices()) {
        EXPECT_LT(g, gs.size());
    }
}

TEST(sk_irrep, refine_reports_coarse_net) {
    auto gs = load_gateset(kData + "/gatesets/pauli_h_t.json");
    auto net = build_net(gs, 0, 100000);
    EXPECT_EQ(kind_of([&] { refine_inverse(gs, net, *gs.find("T"), 1e-6); }), ErrorKind::NetTooCoarse);
}

TEST(sk_irrep, refine_stalls_on_reducible_group) {
    // {I, Z̃} is abelian and reducible: f(exp(iεZ)) = exp(2iεZ) grows.
    auto rep = infer_group({ComplexMatrix::identity(2), su_normalize(pauli_combo(0, 0, 1))}, 1e-9, {"I", "Z"}, false);
    auto w = matrix_exp_tangent(pauli_combo(0, 0, 1), 1e-3, Ambient::SU);
    auto gs = GateSet::create(Mode::SU, rep, {{"W", w}});
    auto net = build_net(gs, 0, 10);
    EXPECT_EQ(kind_of([&] { refine_inverse(gs, net, 2, 1e-9); }), ErrorKind::Stalled);

    auto sl = GateSet::create(Mode::SL, rep, {{"W", w}}, 1e-9, 0.003);
    auto sl_net = build_net(sl, 0, 10);
    EXPECT_EQ(kind_of([&] { refine_inverse_sl(sl, sl_net, 2, 1e-9); }), ErrorKind::BallExit);
}

TEST(sk_irrep, refine_respects_token_budget) {
    auto gs = pauli_with("R", small_rotation());
    auto net = build_net(gs, 4, 100000);
    RefineOptions opts;
    opts.max_tokens = 30;
    EXPECT_EQ(kind_of([&] { refine_inverse(gs, net, 4, 1e-12, opts); }), ErrorKind::BudgetExceeded);
}

TEST(sk_irrep, smalltrace_bound) {
    auto id = ComplexMatrix::identity(2);
    auto [l0, b0] = check_smalltrace(id);
    EXPECT_EQ(l0, 0.0);
    EXPECT_EQ(b0, 0.0);
    std::vector<Complex> diag{std::polar(1.0, 0.1), std::polar(1.0, -0.1)};
    auto [lhs, bound] = check_smalltrace(ComplexMatrix::diagonal(diag));
    EXPECT_NEAR(lhs, 2 * (1 - std::cos(0.1)), 1e-15);
    EXPECT_NEAR(lhs / bound, 1.0 / 6.0, 1e-9);
    std::vector<Complex> bad{2.0, 1.0};
    EXPECT_EQ(kind_of([&] { check_smalltrace(ComplexMatrix::diagonal(bad)); }), ErrorKind::ClassError);
    Rng rng(44);
    std::uniform_real_distribution<double> size(0.0, 0.3);
    for (std::size_t d : {2u, 3u}) {
        for (int t = 0; t < 300; t++) {
            auto m = matrix_exp_tangent(random_traceless(d, rng), size(rng), Ambient::SL);
            auto [l, b] = check_smalltrace(m);
            ASSERT_LE(l, b + 1e-9);
        }
    }
}

TEST(sk_irrep, sl_diag_inverse) {
    auto gs = load_gateset(kData + "/gatesets/sl_pauli_diag.json");
    auto net = build_net(gs, 6, 100000);
    std::size_t i = *gs.find("D");
    auto r = refine_inverse_sl(gs, net, i, 1e-6);
    EXPECT_LE(r.conjugated, 1e-6);
    EXPECT_LE(r.achieved, r.inverse_bound + 1e-12);
    EXPECT_NEAR(r.inverse_bound, r.conjugated * 2.0, 1e-15);
    EXPECT_EQ(kind_of([&] { refine_inverse_sl(load_gateset(kData + "/gatesets/pauli_h_t.json"), net, 4, 1e-6); }),
              ErrorKind::ClassError);
}

TEST(sk_irrep, sl_small_generator_iterates) {
    Rng rng(3);
    auto d = matrix_exp_tangent(random_traceless(2, rng), 0.01, Ambient::SL);
    auto gs = pauli_with("D", d, Mode::SL);
    auto net = build_net(gs, 4, 100000);
    auto r = refine_inverse(gs, net, 4, 1e-10);
    ASSERT_GE(r.depth, 1u);
    for (const auto &s : r.trace) {
        EXPECT_LE(s.det_defect, 1e-9);
        EXPECT_LE(s.trace_lhs, s.trace_bound + 1e-9);
        EXPECT_TRUE(s.contraction_ok);
        EXPECT_TRUE(s.length_ok);
    }
    EXPECT_LE(r.conjugated, 1e-10);
    EXPECT_LE(r.achieved, r.inverse_bound * (1 + 1e-6) + 1e-15);
}

TEST(sk_irrep, compile_pipeline) {
    auto gs = load_gateset(kData + "/gatesets/pauli_h_t.json");
    NetBuildOptions opts;
    opts.max_length = 16;
    auto base = build_net(gs, NetAlphabet::with_inverses(gs), opts);
    auto refine = build_net(gs, 8, 100000);
    SKParams params;
    auto id = compile(gs, ComplexMatrix::identity(2), 1e-3, {&base, &refine}, params);
    EXPECT_TRUE(id.success);
    EXPECT_TRUE(id.word.empty());
    EXPECT_EQ(id.measured_error, 0.0);

    Rng rng(5);
    for (int t = 0; t < 5; t++) {
        auto u = haar_special_unitary(2, rng);
        auto rep = compile(gs, u, 1e-3, {&base, &refine}, params);
        ASSERT_TRUE(rep.success) << rep.error;
        EXPECT_LE(gs.distance(evaluate(gs, rep.word), u), 1e-3);
        if (rep.inverse_occurrences > 0) {
            EXPECT_DOUBLE_EQ(rep.eps_prime, 5e-4 / static_cast<double>(rep.inverse_occurrences));
        }
        std::size_t uses = 0;
        for (const auto &use : rep.inverses) {
            uses += use.occurrences;
            EXPECT_LE(use.achieved, rep.eps_prime);
        }
        EXPECT_EQ(uses, rep.inverse_occurrences);
        auto j = rep.to_json(gs);
        EXPECT_EQ(j["status"], "success");
        EXPECT_EQ(j["length"], rep.word.size());
        EXPECT_EQ(parse_word(gs, j["word"].get<std::string>()).size(), rep.word.size());
    }
    auto missing = compile(gs, ComplexMatrix::identity(2), 1e-3, {&base, nullptr}, params);
    EXPECT_FALSE(missing.success);
    EXPECT_NE(missing.error.find("EmptyNet"), std::string::npos);
}

TEST(sk_irrep, ordering_scan_on_s3) {
    Rng rng(10);
    auto scan = scan_orderings(build_builtin(BuiltinGroup::S3TwoDim), 5, rng);
    EXPECT_EQ(scan.rows.size(), 120u);
    std::size_t candidates = 0;
    for (const auto &row : scan.rows) {
        candidates += row.candidate ? 1 : 0;
    }
    EXPECT_GE(candidates, 1u);
    EXPECT_LT(candidates, scan.rows.size());
    EXPECT_GT(scan.median, 0.1);
    EXPECT_EQ(kind_of([&] { scan_orderings(build_builtin(BuiltinGroup::QuaternionQ8), 1, rng); }),
              ErrorKind::GroupTooLarge);
}

TEST(sk_irrep, naive_power_baseline) {
    auto gs = load_gateset(kData + "/gatesets/pauli_h_t.json");
    // T̃⁸ = −I, so T̃⁷ = −T̃⁻¹.
    auto t = naive_power_inverse(gs, *gs.find("T"), 1e-6, 100);
    EXPECT_TRUE(t.found);
    EXPECT_EQ(t.power, 7u);
    auto r = pauli_with("R", small_rotation());
    auto coarse = naive_power_inverse(r, 4, 1e-2, 100000000);
    auto fine = naive_power_inverse(r, 4, 1e-4, 100000000);
    ASSERT_TRUE(coarse.found && fine.found);
    EXPECT_GT(fine.power, coarse.power);
    EXPECT_LE(fine.error, 1e-4);
    EXPECT_FALSE(naive_power_inverse(r, 4, 1e-12, 1000).found);
}
