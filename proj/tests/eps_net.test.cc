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

#include "irrepsk/eps_net.h"

#include <filesystem>
#include <fstream>
#include <functional>

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

GateSet pauli_h_t() {
    return load_gateset(kData + "/gatesets/pauli_h_t.json");
}

std::filesystem::path temp_file(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("irrepsk_" + name);
}

}  // namespace

TEST(eps_net, shortlex_storage) {
    auto gs = pauli_h_t();
    auto net = build_net(gs, 8, 100000);
    EXPECT_TRUE(net.usable());
    EXPECT_EQ(net.word_length(), 8u);
    EXPECT_EQ(net.word(0).size(), 0u);
    for (std::size_t e = 1; e < net.size(); e++) {
        EXPECT_LE(net.word(e - 1).size(), net.word(e).size());
        EXPECT_LE(net.word(e).size(), 8u);
        EXPECT_LE(dist(net.product(e), evaluate(gs, net.tokens(e))), 1e-12);
    }
}

TEST(eps_net, entries_are_deduplicated) {
    auto gs = pauli_h_t();
    auto net = build_net(gs, 7, 100000);
    EXPECT_DOUBLE_EQ(net.dedup_tol(), (1.0 / 56.0) / 10.0);
    for (std::size_t a = 0; a < net.size(); a++) {
        for (std::size_t b = a + 1; b < net.size(); b++) {
            ASSERT_GT(center_dist(net.product(a), net.product(b)), net.dedup_tol());
        }
    }
}

TEST(eps_net, nearest_matches_brute_force) {
    auto gs = pauli_h_t();
    auto net = build_net(gs, 12, 100000);
    Rng rng(17);
    for (int t = 0; t < 200; t++) {
        auto u = haar_special_unitary(2, rng);
        double best = 1e9;
        std::size_t best_i = 0;
        for (std::size_t e = 0; e < net.size(); e++) {
            double d = center_dist(net.product(e), u);
            if (d < best - 1e-12) {
                best = d;
                best_i = e;
            }
        }
        auto r = net.nearest(u);
        EXPECT_NEAR(r.distance, best, 1e-12);
        EXPECT_EQ(r.entry, best_i);
    }
}

TEST(eps_net, nearest_prefers_shortlex_least_word) {
    auto gs = pauli_h_t();
    auto net = build_net(gs, 6, 100000);
    // −I is the identity modulo the center; the empty word wins.
    auto r = net.nearest(ComplexMatrix::identity(2) * Complex(-1.0));
    EXPECT_EQ(r.entry, 0u);
    EXPECT_NEAR(r.distance, 0.0, 1e-15);
    auto t = net.nearest(gs.matrix(5));
    EXPECT_EQ(net.word(t.entry).size(), 1u);
}

TEST(eps_net, within_matches_brute_force) {
    auto gs = pauli_h_t();
    auto net = build_net(gs, 10, 100000);
    Rng rng(4);
    for (int t = 0; t < 20; t++) {
        auto u = haar_special_unitary(2, rng);
        for (double r : {0.05, 0.2, 1.0}) {
            std::vector<std::size_t> expected;
            for (std::size_t e = 0; e < net.size(); e++) {
                if (net.distance_to(e, u) <= r) {
                    expected.push_back(e);
                }
            }
            EXPECT_EQ(net.within(u, r), expected);
        }
    }
}

TEST(eps_net, density_improves_with_length) {
    auto gs = pauli_h_t();
    Rng rng(8);
    std::vector<ComplexMatrix> probes;
    for (int t = 0; t < 100; t++) {
        probes.push_back(haar_special_unitary(2, rng));
    }
    double short_density = measure_density(build_net(gs, 6, 100000), probes);
    double long_density = measure_density(build_net(gs, 14, 100000), probes);
    EXPECT_LT(long_density, short_density);
}

TEST(eps_net, stops_on_target_density) {
    auto gs = pauli_h_t();
    Rng rng(8);
    std::vector<ComplexMatrix> probes;
    for (int t = 0; t < 50; t++) {
        probes.push_back(haar_special_unitary(2, rng));
    }
    NetBuildOptions opts;
    opts.max_length = 40;
    opts.probes = probes;
    opts.stop_density = 0.2;
    auto net = build_net(gs, NetAlphabet::plain(gs), opts);
    ASSERT_TRUE(net.achieved_density().has_value());
    EXPECT_LE(*net.achieved_density(), 0.2);
    EXPECT_LT(net.word_length(), 40u);
}

TEST(eps_net, finite_group_closes_early) {
    auto gs = GateSet::create(Mode::SU, build_builtin(BuiltinGroup::PauliProjective), {});
    auto net = build_net(gs, 10, 1000);
    EXPECT_EQ(net.size(), 4u);
    EXPECT_EQ(net.word_length(), 10u);
}

TEST(eps_net, budget_marks_net_unusable) {
    auto gs = pauli_h_t();
    auto net = build_net(gs, 20, 500);
    EXPECT_FALSE(net.usable());
    EXPECT_EQ(net.size(), 500u);
    EXPECT_LT(net.word_length(), 20u);
    auto empty = build_net(gs, 3, 0);
    EXPECT_EQ(empty.size(), 0u);
    EXPECT_EQ(kind_of([&] { empty.nearest(ComplexMatrix::identity(2)); }), ErrorKind::EmptyNet);
}

TEST(eps_net, inverse_alphabet) {
    auto gs = pauli_h_t();
    auto alpha = NetAlphabet::with_inverses(gs);
    EXPECT_TRUE(alpha.has_inverses());
    EXPECT_EQ(alpha.tokens.size(), 8u);
    EXPECT_FALSE(NetAlphabet::plain(gs).has_inverses());
    NetBuildOptions opts;
    opts.max_length = 3;
    auto net = build_net(gs, alpha, opts);
    // T̃⁻¹ is reachable in one symbolic letter.
    auto r = net.nearest(gs.inverse_matrix(5));
    EXPECT_NEAR(r.distance, 0.0, 1e-14);
    EXPECT_EQ(net.word(r.entry).size(), 1u);
}

TEST(eps_net, save_load_round_trip) {
    auto gs = pauli_h_t();
    NetBuildOptions opts;
    opts.max_length = 8;
    auto net = build_net(gs, NetAlphabet::with_inverses(gs), opts);
    auto path = temp_file("roundtrip.net");
    save_net(net, gs, path);
    auto back = load_net(gs, path);
    ASSERT_EQ(back.size(), net.size());
    EXPECT_EQ(back.word_length(), net.word_length());
    EXPECT_EQ(back.usable(), net.usable());
    EXPECT_EQ(back.dedup_tol(), net.dedup_tol());
    for (std::size_t e = 0; e < net.size(); e++) {
        ASSERT_EQ(back.tokens(e), net.tokens(e));
        ASSERT_EQ(back.product(e).row_major(), net.product(e).row_major());
    }
    std::filesystem::remove(path);
}

TEST(eps_net, load_rejects_stale_and_truncated_files) {
    auto gs = pauli_h_t();
    auto net = build_net(gs, 6, 10000);
    auto path = temp_file("stale.net");
    save_net(net, gs, path);

    auto q8 = load_gateset(kData + "/gatesets/q8_h_t.json");
    EXPECT_EQ(kind_of([&] { load_net(q8, path); }), ErrorKind::StaleGateSet);

    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto cut = temp_file("truncated.net");
    {
        std::ofstream out(cut);
        out << text.substr(0, text.size() * 2 / 3);
    }
    EXPECT_EQ(kind_of([&] { load_net(gs, cut); }), ErrorKind::FormatError);
    EXPECT_EQ(kind_of([&] { load_net(gs, temp_file("missing.net")); }), ErrorKind::IoError);
    std::filesystem::remove(path);
    std::filesystem::remove(cut);
}
