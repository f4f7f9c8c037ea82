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

#ifndef IRREPSK_FINITE_REP_H
#define IRREPSK_FINITE_REP_H

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "irrepsk/linalg.h"

namespace irrepsk {

/// ρ(a)ρ(b) = e^{i phase} ρ(index), phase in [0, 2π).
struct CayleyEntry {
    std::size_t index = 0;
    double phase = 0.0;
};

/// Outcome of the matrix-unit averaging test: the rep is irreducible iff
/// Σ_g ρ(g) E_jl ρ(g)^{-1} = |G| δ_jl / d · I for every matrix unit E_jl.
struct IrreducibilityCertificate {
    bool irreducible = false;
    double worst_residual = 0.0;
};

/// A finite group presented by a (possibly projective) matrix representation.
///
/// Element 0 is exactly the identity matrix. The remaining elements keep the
/// order in which they were supplied; that order is the product order used by
/// the symmetrization operator (identity last). Immutable once built.
class FiniteGroupRep {
   public:
    std::size_t dim() const {
        return elements_.front().dim();
    }
    std::size_t order() const {
        return elements_.size();
    }
    const ComplexMatrix &element(std::size_t g) const {
        return elements_[g];
    }
    const std::vector<ComplexMatrix> &elements() const {
        return elements_;
    }
    const std::string &name(std::size_t g) const {
        return names_[g];
    }
    const std::vector<std::string> &names() const {
        return names_;
    }
    const CayleyEntry &product(std::size_t a, std::size_t b) const {
        return cayley_[a * order() + b];
    }
    /// Index h with ρ(g)ρ(h) = e^{iθ} I.
    std::size_t inverse(std::size_t g) const {
        return inverse_[g];
    }
    /// The θ above, so that ρ(g)^{-1} = e^{-iθ} ρ(inverse(g)).
    double inverse_phase(std::size_t g) const {
        return product(g, inverse_[g]).phase;
    }
    bool projective() const {
        return projective_;
    }
    const IrreducibilityCertificate &certificate() const {
        return certificate_;
    }
    double tolerance() const {
        return tolerance_;
    }

   private:
    friend FiniteGroupRep infer_group(
        std::vector<ComplexMatrix> mats, double tol, std::vector<std::string> names, bool require_irreducible);

    std::vector<ComplexMatrix> elements_;
    std::vector<std::string> names_;
    std::vector<CayleyEntry> cayley_;
    std::vector<std::size_t> inverse_;
    bool projective_ = false;
    IrreducibilityCertificate certificate_;
    double tolerance_ = kDefaultTolerance;
};

enum class BuiltinGroup { PauliProjective, WeylProjective, QuaternionQ8, S3TwoDim };

/// Accepts "pauli", "weyl", "q8", "s3".
std::optional<BuiltinGroup> parse_builtin_group(std::string_view name);
std::string_view builtin_group_name(BuiltinGroup tag);

/// `dim` is only consulted for WeylProjective (d >= 2); the others are 2-dimensional.
FiniteGroupRep build_builtin(BuiltinGroup tag, std::size_t dim = 2);

/// Builds the Cayley table up to phase for a list of matrices closed under
/// multiplication up to a global phase.
///
/// Products are matched exactly first and up to phase second; two phase-equal
/// candidates for the same product raise AmbiguousMatch, as do duplicated
/// elements. The element equal to the identity (up to phase) is moved to the
/// front and replaced by the exact identity.
FiniteGroupRep infer_group(
    std::vector<ComplexMatrix> mats,
    double tol = kDefaultTolerance,
    std::vector<std::string> names = {},
    bool require_irreducible = true);

/// Σ_g ρ(g) M ρ(g)^{-1}, with ρ(g)^{-1} taken from the inverse table.
ComplexMatrix average(const FiniteGroupRep &rep, const ComplexMatrix &m);

IrreducibilityCertificate check_irreducible(const FiniteGroupRep &rep);

/// max |(d/|G|) Σ_g ρ(g)_ij conj(ρ(g)_kl) − δ_ik δ_jl|. Genuine reps only.
double check_schur_orthogonality(const FiniteGroupRep &rep);

/// Closes {e^{2πim/d} ρ(g)} under multiplication to get a genuine rep of a
/// k-fold cover. Non-projective input is returned unchanged.
FiniteGroupRep central_extend(const FiniteGroupRep &rep);

/// ‖average(central_extend(rep), M) − k·average(rep, M)‖ with k = |G'|/|G|.
double check_cover_equivalence(const FiniteGroupRep &rep, const ComplexMatrix &m);

}  // namespace irrepsk

#endif
