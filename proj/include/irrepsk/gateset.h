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

#ifndef IRREPSK_GATESET_H
#define IRREPSK_GATESET_H

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "irrepsk/finite_rep.h"
#include "irrepsk/linalg.h"
#include "json.hpp"

namespace irrepsk {

enum class Mode { SU, SL };

std::string_view mode_name(Mode mode);

struct Generator {
    std::string name;
    ComplexMatrix matrix;
};

/// A validated gate set 𝒢 = ρ(G) ∪ {U_1 … U_N}.
///
/// Generators are ordered irrep elements first (in irrep order, identity at
/// index 0), then the extra gates in file order.
class GateSet {
   public:
    std::size_t dim() const {
        return dim_;
    }
    Mode mode() const {
        return mode_;
    }
    double tolerance() const {
        return tolerance_;
    }
    double sl_radius() const {
        return sl_radius_;
    }
    std::size_t size() const {
        return generators_.size();
    }
    const Generator &generator(std::size_t i) const {
        return generators_[i];
    }
    const ComplexMatrix &matrix(std::size_t i) const {
        return generators_[i].matrix;
    }
    /// Exact inverse of generator i (adjoint in SU mode).
    const ComplexMatrix &inverse_matrix(std::size_t i) const {
        return inverses_[i];
    }
    const FiniteGroupRep &irrep() const {
        return irrep_;
    }
    /// Generator index holding irrep element g.
    std::size_t irrep_generator(std::size_t g) const {
        return g;
    }
    /// Irrep element index of generator i, if it belongs to the irrep.
    std::optional<std::size_t> irrep_element(std::size_t i) const {
        if (i < irrep_.order()) {
            return i;
        }
        return std::nullopt;
    }
    const std::vector<std::size_t> &extra_indices() const {
        return extra_indices_;
    }
    std::optional<std::size_t> find(std::string_view name) const;
    MatrixClass matrix_class() const;

    /// Whether errors are measured modulo the center (d-th roots of unity).
    /// True exactly when the irrep is projective: word products then agree
    /// with their targets only up to such a phase.
    bool quotient_center() const {
        return irrep_.projective();
    }
    double distance(const ComplexMatrix &a, const ComplexMatrix &b) const;

    /// FNV-1a hash (hex) of the canonicalized gate set.
    const std::string &fingerprint() const {
        return fingerprint_;
    }

    /// Assembles and validates a gate set from an irrep plus extra gates.
    /// SU mode phase-normalizes the extras; SL mode requires det 1 and
    /// dist(U_i, I) <= sl_radius.
    static GateSet create(
        Mode mode,
        FiniteGroupRep irrep,
        std::vector<Generator> extras,
        double tolerance = kDefaultTolerance,
        double sl_radius = 1.0);

   private:
    std::size_t dim_ = 0;
    Mode mode_ = Mode::SU;
    double tolerance_ = kDefaultTolerance;
    double sl_radius_ = 1.0;
    std::vector<Generator> generators_;
    std::vector<ComplexMatrix> inverses_;
    FiniteGroupRep irrep_;
    std::vector<std::size_t> extra_indices_;
    std::string fingerprint_;
};

/// Parses the JSON gate-set document:
///   {"dimension": d, "mode": "su"|"sl", "tolerance": t, "sl_radius": r,
///    "irrep": {"builtin": "pauli"|"weyl"|"q8"|"s3"} |
///             {"matrices": [{"name": ..., "matrix": [[re, im], ...]}, ...]},
///    "gates": [{"name": ..., "matrix": [[re, im], ...]}, ...]}
/// Matrices are row-major lists of [re, im] pairs.
GateSet gateset_from_json(const nlohmann::json &doc);
GateSet parse_gateset(std::string_view text);
GateSet load_gateset(const std::filesystem::path &path);

ComplexMatrix parse_matrix_literal(const nlohmann::json &literal, std::size_t dim);
nlohmann::json matrix_literal(const ComplexMatrix &m);

/// 1 / (6|G|(d−1)! + 2|G|²).
double eps0_constant(std::size_t group_order, std::size_t dim);
double eps0_constant(const GateSet &gs);

/// A word over 𝒢 with its left-to-right product cached.
class GateWord {
   public:
    explicit GateWord(std::size_t dim) : product_(ComplexMatrix::identity(dim)) {
    }
    GateWord(const GateSet &gs, std::vector<std::uint32_t> indices);

    std::size_t length() const {
        return indices_.size();
    }
    const std::vector<std::uint32_t> &indices() const {
        return indices_;
    }
    const ComplexMatrix &product() const {
        return product_;
    }
    void append(const GateSet &gs, std::uint32_t index);
    /// Concatenation; products compose as a monoid homomorphism.
    GateWord operator+(const GateWord &rhs) const;

   private:
    std::vector<std::uint32_t> indices_;
    ComplexMatrix product_;
};

/// One letter of a word over 𝒢 ∪ 𝒢⁻¹.
struct Token {
    std::uint32_t generator = 0;
    bool inverted = false;

    bool operator==(const Token &) const = default;
};

/// A word over 𝒢 ∪ 𝒢⁻¹ with cached product.
class SymbolWord {
   public:
    explicit SymbolWord(std::size_t dim) : product_(ComplexMatrix::identity(dim)) {
    }
    SymbolWord(const GateSet &gs, std::vector<Token> tokens);
    SymbolWord(std::vector<Token> tokens, ComplexMatrix product)
        : tokens_(std::move(tokens)), product_(std::move(product)) {
    }

    std::size_t length() const {
        return tokens_.size();
    }
    const std::vector<Token> &tokens() const {
        return tokens_;
    }
    const ComplexMatrix &product() const {
        return product_;
    }
    std::size_t inverted_count() const;
    /// Reversed word with every token's inversion flag flipped.
    SymbolWord inverse(const GateSet &gs) const;
    SymbolWord operator+(const SymbolWord &rhs) const;

   private:
    std::vector<Token> tokens_;
    ComplexMatrix product_;
};

const ComplexMatrix &token_matrix(const GateSet &gs, const Token &token);
ComplexMatrix evaluate(const GateSet &gs, std::span<const std::uint32_t> indices);
ComplexMatrix evaluate(const GateSet &gs, std::span<const Token> tokens);

/// Space-separated generator names; inverted tokens carry a trailing "^-1".
std::string format_word(const GateSet &gs, std::span<const std::uint32_t> indices);
std::string format_word(const GateSet &gs, std::span<const Token> tokens);
std::vector<Token> parse_word(const GateSet &gs, std::string_view text);

}  // namespace irrepsk

#endif
