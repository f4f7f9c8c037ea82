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

#ifndef IRREPSK_SK_BASE_H
#define IRREPSK_SK_BASE_H

#include <cstddef>
#include <optional>
#include <utility>

#include "irrepsk/eps_net.h"
#include "irrepsk/gateset.h"

namespace irrepsk {

/// Settings for the inverse-closed SU(2) compiler.
struct SKParams {
    /// Net over 𝒢 ∪ 𝒢⁻¹ (see NetAlphabet::with_inverses); not owned.
    const EpsNet *base_net = nullptr;
    /// Fixed recursion depth. When unset the depth is increased from 0 until
    /// the measured error meets the request, up to max_depth.
    std::optional<std::size_t> depth;
    std::size_t max_depth = 8;
};

/// Returns a word over 𝒢 ∪ 𝒢⁻¹ within ε of target (modulo the center when the
/// gate set quotients it). Throws DimUnsupported for d != 2 and NetTooCoarse
/// when no depth up to the cap reaches ε.
SymbolWord sk_compile(const GateSet &gs, const ComplexMatrix &target, double epsilon, const SKParams &params);

/// A, B in SU(2) with A B A† B† ≈ delta, both at distance O(√dist(delta, I))
/// from I. Throws TooFar if dist(delta, I) > 1/4.
std::pair<ComplexMatrix, ComplexMatrix> balanced_commutator_decompose(const ComplexMatrix &delta);

/// Replaces inverted tokens on irrep elements with their inverse-table
/// element. Inverted tokens on extra gates are left alone.
SymbolWord rewrite_irrep_inverses(const SymbolWord &w, const GateSet &gs);

}  // namespace irrepsk

#endif
