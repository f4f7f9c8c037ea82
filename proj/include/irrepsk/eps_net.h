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

#ifndef IRREPSK_EPS_NET_H
#define IRREPSK_EPS_NET_H

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "irrepsk/gateset.h"
#include "irrepsk/linalg.h"

namespace irrepsk {

/// Letters a net is built from: the generators themselves, optionally
/// followed by synthetic inverses of the extra (non-irrep) generators.
struct NetAlphabet {
    std::vector<Token> tokens;

    static NetAlphabet plain(const GateSet &gs);
    static NetAlphabet with_inverses(const GateSet &gs);
    bool has_inverses() const;
};

struct NearestResult {
    std::size_t entry = 0;
    double distance = 0.0;
};

struct NetBuildOptions {
    /// Words of length <= max_length are enumerated breadth-first.
    std::size_t max_length = 0;
    /// Cap on stored words.
    std::size_t budget = 1'000'000;
    /// Products closer than this to an existing one are dropped; <= 0 means eps0/10.
    double dedup_tol = 0.0;
    /// Stop after the first complete length whose measured density against
    /// `probes` is <= stop_density (only when probes are given).
    std::span<const ComplexMatrix> probes;
    double stop_density = 0.0;
};

/// Searchable store of deduplicated words with their products.
///
/// Words are stored in shortlex order (breadth-first enumeration), so among
/// equally near entries the lowest index is the shortlex-least word.
class EpsNet {
   public:
    std::size_t dim() const {
        return dim_;
    }
    std::size_t size() const {
        return offsets_.size() - 1;
    }
    /// Longest word length fully enumerated (ℓ₀).
    std::size_t word_length() const {
        return word_length_;
    }
    /// False when the budget ran out before ℓ₀ was reached.
    bool usable() const {
        return usable_;
    }
    double dedup_tol() const {
        return dedup_tol_;
    }
    bool quotient_center() const {
        return quotient_center_;
    }
    const NetAlphabet &alphabet() const {
        return alphabet_;
    }
    std::optional<double> achieved_density() const {
        return achieved_density_;
    }
    void set_achieved_density(double density) {
        achieved_density_ = density;
    }

    /// Alphabet indices of entry i.
    std::span<const std::uint16_t> word(std::size_t i) const;
    std::vector<Token> tokens(std::size_t i) const;
    ComplexMatrix product(std::size_t i) const;

    /// Exact nearest stored entry (modulo the center when the gate set
    /// quotients it). Throws EmptyNet on an empty store.
    NearestResult nearest(const ComplexMatrix &target) const;
    /// All entries within distance r of target, in index order.
    std::vector<std::size_t> within(const ComplexMatrix &target, double r) const;
    /// Distance between entry i and target under the net's metric.
    double distance_to(std::size_t i, const ComplexMatrix &target) const;

    friend EpsNet build_net(const GateSet &gs, const NetAlphabet &alphabet, const NetBuildOptions &options);
    friend EpsNet load_net(const GateSet &gs, const std::filesystem::path &path);

   private:
    EpsNet(const GateSet &gs, NetAlphabet alphabet, double dedup_tol);

    const Complex *raw(std::size_t i) const {
        return products_.data() + i * dim_ * dim_;
    }
    void push(std::span<const std::uint16_t> word, std::span<const Complex> product);
    template <typename Visit>
    bool visit_box(const Complex *query, double r, Visit &&visit) const;
    std::vector<Complex> center_phases() const;

    std::size_t dim_ = 0;
    NetAlphabet alphabet_;
    double dedup_tol_ = 0.0;
    double cell_ = 0.0;
    bool quotient_center_ = false;
    std::size_t word_length_ = 0;
    bool usable_ = true;
    std::optional<double> achieved_density_;

    std::vector<Complex> products_;
    std::vector<std::uint16_t> symbols_;
    std::vector<std::size_t> offsets_{0};
    std::unordered_map<std::uint64_t, std::uint32_t> heads_;
    std::vector<std::uint32_t> next_;
};

EpsNet build_net(const GateSet &gs, const NetAlphabet &alphabet, const NetBuildOptions &options);
/// Convenience form over the plain alphabet.
EpsNet build_net(const GateSet &gs, std::size_t max_length, std::size_t budget);

/// max over probes of the nearest-entry distance.
double measure_density(const EpsNet &net, std::span<const ComplexMatrix> probes);

/// Line-record text file: a header with the gate-set fingerprint, ℓ₀ and
/// count, then one record per word (alphabet indices).
void save_net(const EpsNet &net, const GateSet &gs, const std::filesystem::path &path);
EpsNet load_net(const GateSet &gs, const std::filesystem::path &path);

}  // namespace irrepsk

#endif
