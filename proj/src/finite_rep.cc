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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "irrepsk/error.h"

namespace irrepsk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phase(double theta) {
    theta = std::fmod(theta, kTwoPi);
    if (theta < 0) {
        theta += kTwoPi;
    }
    // Snap values that are 2π up to rounding back onto 0.
    if (kTwoPi - theta < 1e-12) {
        theta = 0.0;
    }
    return theta;
}

ComplexMatrix pauli(char which) {
    const Complex i(0, 1);
    switch (which) {
        case 'X': return ComplexMatrix::from_row_major(std::vector<Complex>{0, 1, 1, 0});
        case 'Y': return ComplexMatrix::from_row_major(std::vector<Complex>{0, -i, i, 0});
        case 'Z': return ComplexMatrix::from_row_major(std::vector<Complex>{1, 0, 0, -1});
        default: return ComplexMatrix::identity(2);
    }
}

ComplexMatrix shift_matrix(std::size_t d) {
    ComplexMatrix x = ComplexMatrix::zero(d);
    for (std::size_t j = 0; j < d; j++) {
        x((j + 1) % d, j) = 1.0;
    }
    return x;
}

ComplexMatrix clock_matrix(std::size_t d) {
    std::vector<Complex> diag;
    for (std::size_t j = 0; j < d; j++) {
        diag.push_back(std::polar(1.0, kTwoPi * static_cast<double>(j) / static_cast<double>(d)));
    }
    return ComplexMatrix::diagonal(diag);
}

ComplexMatrix power(const ComplexMatrix &m, std::size_t n) {
    ComplexMatrix out = ComplexMatrix::identity(m.dim());
    for (std::size_t k = 0; k < n; k++) {
        out *= m;
    }
    return out;
}

}  // namespace

std::optional<BuiltinGroup> parse_builtin_group(std::string_view name) {
    if (name == "pauli") {
        return BuiltinGroup::PauliProjective;
    }
    if (name == "weyl") {
        return BuiltinGroup::WeylProjective;
    }
    if (name == "q8") {
        return BuiltinGroup::QuaternionQ8;
    }
    if (name == "s3") {
        return BuiltinGroup::S3TwoDim;
    }
    return std::nullopt;
}

std::string_view builtin_group_name(BuiltinGroup tag) {
    switch (tag) {
        case BuiltinGroup::PauliProjective: return "pauli";
        case BuiltinGroup::WeylProjective: return "weyl";
        case BuiltinGroup::QuaternionQ8: return "q8";
        case BuiltinGroup::S3TwoDim: return "s3";
    }
    return "unknown";
}

FiniteGroupRep build_builtin(BuiltinGroup tag, std::size_t dim) {
    const Complex i(0, 1);
    std::vector<ComplexMatrix> mats;
    std::vector<std::string> names;
    switch (tag) {
        case BuiltinGroup::PauliProjective:
            for (char p : {'I', 'X', 'Y', 'Z'}) {
                mats.push_back(su_normalize(pauli(p)));
                names.emplace_back(1, p);
            }
            break;
        case BuiltinGroup::WeylProjective: {
            if (dim < 2) {
                throw Error(ErrorKind::DimError, "Weyl group needs d >= 2");
            }
            ComplexMatrix x = shift_matrix(dim);
            ComplexMatrix z = clock_matrix(dim);
            for (std::size_t a = 0; a < dim; a++) {
                for (std::size_t b = 0; b < dim; b++) {
                    mats.push_back(su_normalize(power(x, a) * power(z, b)));
                    names.push_back("W" + std::to_string(a) + "_" + std::to_string(b));
                }
            }
            break;
        }
        case BuiltinGroup::QuaternionQ8:
            mats.push_back(ComplexMatrix::identity(2));
            mats.push_back(ComplexMatrix::identity(2) * Complex(-1));
            names = {"I", "mI"};
            for (char p : {'X', 'Y', 'Z'}) {
                mats.push_back(pauli(p) * -i);
                mats.push_back(pauli(p) * i);
                names.emplace_back(1, p);
                names.push_back(std::string("m") + p);
            }
            break;
        case BuiltinGroup::S3TwoDim: {
            double c = std::cos(kTwoPi / 3.0);
            double s = std::sin(kTwoPi / 3.0);
            ComplexMatrix r = ComplexMatrix::from_row_major(std::vector<Complex>{c, -s, s, c});
            ComplexMatrix f = pauli('Z');
            mats = {
                ComplexMatrix::identity(2),
                r,
                r * r,
                su_normalize(f),
                su_normalize(f * r),
                su_normalize(f * r * r),
            };
            names = {"E", "R", "R2", "F", "FR", "FR2"};
            break;
        }
    }
    return infer_group(std::move(mats), kDefaultTolerance, std::move(names));
}

FiniteGroupRep infer_group(
    std::vector<ComplexMatrix> mats, double tol, std::vector<std::string> names, bool require_irreducible) {
    if (mats.empty()) {
        throw Error(ErrorKind::NotClosed, "empty element list");
    }
    std::size_t d = mats.front().dim();
    for (const auto &m : mats) {
        if (m.dim() != d) {
            throw Error(ErrorKind::DimError, "group elements have mixed dimensions");
        }
        if (!m.is_finite()) {
            throw Error(ErrorKind::InvalidMatrix, "group element has a non-finite entry");
        }
    }
    if (names.empty()) {
        for (std::size_t g = 0; g < mats.size(); g++) {
            names.push_back("g" + std::to_string(g));
        }
    }
    if (names.size() != mats.size()) {
        throw Error(ErrorKind::DimError, "name list does not match element list");
    }

    const ComplexMatrix id = ComplexMatrix::identity(d);
    auto phase_match = [&](const ComplexMatrix &a, const ComplexMatrix &b) -> std::optional<Complex> {
        Complex p = relative_phase(a, b);
        if (dist(a, b * p) <= tol) {
            return p;
        }
        return std::nullopt;
    };

    // Pin the identity at index 0, preferring an exact match over a phase match.
    std::optional<std::size_t> id_index;
    for (std::size_t g = 0; g < mats.size() && !id_index; g++) {
        if (dist(mats[g], id) <= tol) {
            id_index = g;
        }
    }
    for (std::size_t g = 0; g < mats.size() && !id_index; g++) {
        if (phase_match(mats[g], id)) {
            id_index = g;
        }
    }
    if (!id_index) {
        throw Error(ErrorKind::NotClosed, "no element equals the identity up to phase");
    }
    std::rotate(mats.begin(), mats.begin() + static_cast<std::ptrdiff_t>(*id_index),
                mats.begin() + static_cast<std::ptrdiff_t>(*id_index) + 1);
    std::rotate(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(*id_index),
                names.begin() + static_cast<std::ptrdiff_t>(*id_index) + 1);
    mats[0] = id;

    std::size_t n = mats.size();
    for (std::size_t a = 0; a < n; a++) {
        for (std::size_t b = a + 1; b < n; b++) {
            if (dist(mats[a], mats[b]) <= tol) {
                throw Error(ErrorKind::AmbiguousMatch, "elements " + names[a] + " and " + names[b] + " coincide");
            }
        }
    }

    FiniteGroupRep rep;
    rep.tolerance_ = tol;
    rep.cayley_.resize(n * n);
    for (std::size_t a = 0; a < n; a++) {
        for (std::size_t b = 0; b < n; b++) {
            ComplexMatrix p = mats[a] * mats[b];
            std::optional<CayleyEntry> entry;
            for (std::size_t c = 0; c < n && !entry; c++) {
                if (dist(p, mats[c]) <= tol) {
                    entry = CayleyEntry{c, 0.0};
                }
            }
            if (!entry) {
                for (std::size_t c = 0; c < n; c++) {
                    if (auto phase = phase_match(p, mats[c])) {
                        if (entry) {
                            throw Error(ErrorKind::AmbiguousMatch, names[a] + "*" + names[b] + " matches both " +
                                                                       names[entry->index] + " and " + names[c] +
                                                                       " up to phase");
                        }
                        entry = CayleyEntry{c, wrap_phase(std::arg(*phase))};
                    }
                }
            }
            if (!entry) {
                throw Error(ErrorKind::NotClosed, "product " + names[a] + "*" + names[b] + " matches no element");
            }
            rep.cayley_[a * n + b] = *entry;
            if (std::abs(std::polar(1.0, entry->phase) - 1.0) > tol) {
                rep.projective_ = true;
            }
        }
    }

    rep.inverse_.resize(n);
    for (std::size_t g = 0; g < n; g++) {
        std::optional<std::size_t> best;
        for (std::size_t h = 0; h < n; h++) {
            const CayleyEntry &e = rep.cayley_[g * n + h];
            if (e.index != 0) {
                continue;
            }
            if (!best || (e.phase == 0.0 && rep.cayley_[g * n + *best].phase != 0.0)) {
                best = h;
            }
        }
        if (!best) {
            throw Error(ErrorKind::NotClosed, "element " + names[g] + " has no inverse in the list");
        }
        rep.inverse_[g] = *best;
    }

    rep.elements_ = std::move(mats);
    rep.names_ = std::move(names);
    rep.certificate_ = check_irreducible(rep);
    if (require_irreducible && !rep.certificate_.irreducible) {
        throw Error(ErrorKind::NotIrreducible,
                    "averaging residual " + std::to_string(rep.certificate_.worst_residual) + " over matrix units");
    }
    return rep;
}

ComplexMatrix average(const FiniteGroupRep &rep, const ComplexMatrix &m) {
    if (m.dim() != rep.dim()) {
        throw Error(ErrorKind::DimError, "average: matrix and representation dimensions differ");
    }
    ComplexMatrix sum = ComplexMatrix::zero(rep.dim());
    for (std::size_t g = 0; g < rep.order(); g++) {
        Complex fix = std::polar(1.0, -rep.inverse_phase(g));
        sum += rep.element(g) * m * rep.element(rep.inverse(g)) * fix;
    }
    return sum;
}

IrreducibilityCertificate check_irreducible(const FiniteGroupRep &rep) {
    std::size_t d = rep.dim();
    double group_order = static_cast<double>(rep.order());
    double worst = 0.0;
    for (std::size_t j = 0; j < d; j++) {
        for (std::size_t l = 0; l < d; l++) {
            ComplexMatrix unit = ComplexMatrix::zero(d);
            unit(j, l) = 1.0;
            ComplexMatrix expected = ComplexMatrix::identity(d) * Complex(j == l ? group_order / static_cast<double>(d) : 0.0);
            worst = std::max(worst, dist(average(rep, unit), expected));
        }
    }
    return {worst <= rep.tolerance() * group_order, worst};
}

double check_schur_orthogonality(const FiniteGroupRep &rep) {
    if (rep.projective()) {
        throw Error(ErrorKind::ProjectiveUnsupported, "orthogonality relations need a genuine representation");
    }
    std::size_t d = rep.dim();
    double scale = static_cast<double>(d) / static_cast<double>(rep.order());
    double worst = 0.0;
    for (std::size_t i = 0; i < d; i++) {
        for (std::size_t j = 0; j < d; j++) {
            for (std::size_t k = 0; k < d; k++) {
                for (std::size_t l = 0; l < d; l++) {
                    Complex sum = 0.0;
                    for (const auto &g : rep.elements()) {
                        sum += g(i, j) * std::conj(g(k, l));
                    }
                    double expected = (i == k && j == l) ? 1.0 : 0.0;
                    worst = std::max(worst, std::abs(scale * sum - expected));
                }
            }
        }
    }
    return worst;
}

FiniteGroupRep central_extend(const FiniteGroupRep &rep) {
    if (!rep.projective()) {
        return rep;
    }
    std::size_t d = rep.dim();
    std::size_t cap = d * rep.order();
    std::vector<ComplexMatrix> mats = rep.elements();
    std::vector<std::string> names = rep.names();
    double tol = rep.tolerance();

    auto find_exact = [&](const ComplexMatrix &p) {
        for (const auto &m : mats) {
            if (dist(p, m) <= tol) {
                return true;
            }
        }
        return false;
    };

    // Right-multiplying by the original generators reaches the whole finite group.
    for (std::size_t a = 0; a < mats.size(); a++) {
        for (std::size_t g = 0; g < rep.order(); g++) {
            ComplexMatrix p = mats[a] * rep.element(g);
            if (find_exact(p)) {
                continue;
            }
            if (mats.size() >= cap) {
                throw Error(ErrorKind::ExtensionOverflow,
                            "closure exceeds d*|G| = " + std::to_string(cap) + " elements");
            }
            // Name the new element after the original it is phase-equivalent to.
            std::string label = "c" + std::to_string(mats.size());
            for (std::size_t h = 0; h < rep.order(); h++) {
                Complex phase = relative_phase(p, rep.element(h));
                if (dist(p, rep.element(h) * phase) <= tol) {
                    auto m = static_cast<long>(std::lround(wrap_phase(std::arg(phase)) * static_cast<double>(d) / kTwoPi)) %
                             static_cast<long>(d);
                    label = rep.name(h) + "~" + std::to_string(m);
                    break;
                }
            }
            mats.push_back(std::move(p));
            names.push_back(std::move(label));
        }
    }
    std::size_t k = mats.size() / rep.order();
    if (mats.size() % rep.order() != 0 || d % k != 0) {
        throw Error(ErrorKind::ExtensionOverflow,
                    "cover of size " + std::to_string(mats.size()) + " is not a divisor-of-d multiple of |G|");
    }
    return infer_group(std::move(mats), tol, std::move(names));
}

double check_cover_equivalence(const FiniteGroupRep &rep, const ComplexMatrix &m) {
    FiniteGroupRep cover = central_extend(rep);
    double k = static_cast<double>(cover.order()) / static_cast<double>(rep.order());
    return op_norm(average(cover, m) - average(rep, m) * Complex(k));
}

}  // namespace irrepsk
