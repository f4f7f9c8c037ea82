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

#ifndef IRREPSK_SK_IRREP_H
#define IRREPSK_SK_IRREP_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "irrepsk/eps_net.h"
#include "irrepsk/finite_rep.h"
#include "irrepsk/gateset.h"
#include "irrepsk/sk_base.h"
#include "json.hpp"

namespace irrepsk {

/// 3|G|(d−1)! + |G|².
double contraction_constant(std::size_t group_order, std::size_t dim);
double contraction_constant(const FiniteGroupRep &rep);

/// Word for f(W) = ∏_g ρ(g) W ρ(g)⁻¹: for each non-identity element g in
/// stored order, [g] ++ w ++ [inverse(g)], then w alone for the identity.
/// The product matches symmetrize_matrix up to a global phase.
GateWord symmetrize(const GateSet &gs, const GateWord &w);

/// ∏_g ρ(g) W ρ(g)⁻¹ with exact inverses. `order` lists the non-identity
/// elements in product order (identity is always last); empty means stored order.
ComplexMatrix symmetrize_matrix(
    const FiniteGroupRep &rep, const ComplexMatrix &w, std::span<const std::size_t> order = {});

/// One iterate of the refinement loop.
struct RefineStep {
    std::size_t k = 0;
    /// dist(product(word_k), I), modulo the center when the gate set quotients it.
    double error = 0.0;
    std::size_t length = 0;
    /// C·ε_{k−1}² (0 at k = 0).
    double contraction_bound = 0.0;
    /// 2ε₀ / 2^{2^k}.
    double decay_bound = 0.0;
    bool contraction_ok = true;
    bool decay_ok = true;
    /// ℓ_k = |G|ℓ_{k−1} + 2(|G|−1) and ℓ_k <= |G|ℓ_{k−1} + 2|G|.
    bool length_ok = true;
    // Determinant and small-trace checks (filled in SL mode).
    double det_defect = 0.0;
    double trace_lhs = 0.0;
    double trace_bound = 0.0;
};

struct RefineResult {
    std::uint32_t generator = 0;
    /// Word over 𝒢 approximating the inverse of the generator.
    GateWord word{1};
    /// dist(product(word), U⁻¹), measured.
    double achieved = 0.0;
    /// Final ε_k = dist(f^{(k)}(V U), I).
    double conjugated = 0.0;
    /// ε_k · ‖U⁻¹‖: the guaranteed inverse error (equals ε_k in SU mode).
    double inverse_bound = 0.0;
    std::size_t depth = 0;
    std::size_t v_length = 0;
    double eps0 = 0.0;
    std::vector<RefineStep> trace;
};

struct RefineOptions {
    /// Refuse to build words longer than this.
    std::size_t max_tokens = std::size_t{1} << 26;
};

/// Approximates the inverse of generator i by a word over 𝒢 only.
///
/// `net` supplies V with dist(V U_i, I) <= ε₀ (entries using inverted tokens
/// are ignored). The word V ++ [i] is symmetrized until its measured error is
/// <= eps_prime; the trailing i is then dropped. Throws NetTooCoarse, Stalled,
/// or BudgetExceeded. Gate sets in SL mode are forwarded to refine_inverse_sl.
RefineResult refine_inverse(
    const GateSet &gs, const EpsNet &net, std::size_t i, double eps_prime, const RefineOptions &options = {});

/// SL-mode refinement: same iteration with determinant and small-trace checks
/// on every iterate. Throws BallExit if an iterate leaves the radius-r ball.
RefineResult refine_inverse_sl(
    const GateSet &gs, const EpsNet &net, std::size_t i, double eps_prime, const RefineOptions &options = {});

/// (|Tr M − d|, (2^d + d!)·dist(M, I)²) for det M = 1. Throws ClassError otherwise.
std::pair<double, double> check_smalltrace(const ComplexMatrix &m, double tol = kDefaultTolerance);

struct CompileNets {
    /// Net over 𝒢 ∪ 𝒢⁻¹ for the base compiler.
    const EpsNet *base = nullptr;
    /// Net over 𝒢 for inverse refinement.
    const EpsNet *refine = nullptr;
};

struct InverseUse {
    std::uint32_t generator = 0;
    std::size_t occurrences = 0;
    std::size_t depth = 0;
    std::size_t length = 0;
    double achieved = 0.0;
    std::vector<RefineStep> trace;
};

struct CompileReport {
    bool success = false;
    std::string error;
    ComplexMatrix target;
    double epsilon = 0.0;
    std::string fingerprint;
    /// Final word over 𝒢 (empty on failure).
    std::vector<std::uint32_t> word;
    /// Latest intermediate word over 𝒢 ∪ 𝒢⁻¹ (kept for diagnosis on failure).
    std::vector<Token> partial;
    double measured_error = 0.0;
    std::size_t base_length = 0;
    double base_error = 0.0;
    std::size_t irrep_inverses_rewritten = 0;
    std::size_t inverse_occurrences = 0;
    double eps_prime = 0.0;
    std::vector<InverseUse> inverses;
    double seconds = 0.0;

    nlohmann::json to_json(const GateSet &gs) const;
};

/// Full inverse-free pipeline: base compilation at ε/2 over 𝒢 ∪ 𝒢⁻¹, irrep
/// inverses rewritten from the table, and every remaining U_i⁻¹ replaced by
/// refine_inverse at ε' = (ε/2)/m. Errors are reported, not thrown; success
/// requires the re-multiplied word to be within ε of the target.
CompileReport compile(
    const GateSet &gs, const ComplexMatrix &target, double epsilon, const CompileNets &nets, const SKParams &params);

struct OrderingScore {
    /// Non-identity elements in product order.
    std::vector<std::size_t> order;
    /// max over samples of |a| in the fit ‖f(W) − I‖/ε² ≈ a + bε.
    double coefficient = 0.0;
    bool candidate = false;
};

struct OrderingScan {
    std::vector<OrderingScore> rows;
    double median = 0.0;
    std::vector<double> epsilons;
};

/// Fits the ε² coefficient of ‖f(W) − I‖ for every ordering of the
/// non-identity elements, with W = exp(iεH) over `samples` random H.
/// Candidates have coefficient <= 1e-3 of the median. Throws GroupTooLarge
/// when |G|! > 720.
OrderingScan scan_orderings(const FiniteGroupRep &rep, std::size_t samples, Rng &rng);

struct NaivePower {
    bool found = false;
    /// Smallest k >= 1 with dist(U^k, U⁻¹) <= eps (the word length).
    std::size_t power = 0;
    double error = 0.0;
};

/// The baseline that approximates U⁻¹ by a power of U.
NaivePower naive_power_inverse(const GateSet &gs, std::size_t i, double eps, std::size_t max_power);

}  // namespace irrepsk

#endif
