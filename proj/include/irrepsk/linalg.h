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

#ifndef IRREPSK_LINALG_H
#define IRREPSK_LINALG_H

#include <complex>
#include <cstddef>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace irrepsk {

using Complex = std::complex<double>;

/// Default tolerance for class checks (det, unitarity, phase matching).
inline constexpr double kDefaultTolerance = 1e-9;

/// Square complex matrix with value semantics. Every operation that combines
/// two matrices checks the dimensions and throws DimError on mismatch.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(Eigen::MatrixXcd m);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix zero(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const Complex> entries);
    /// Row-major entries; the length must be a perfect square.
    static ComplexMatrix from_row_major(std::span<const Complex> entries);

    std::size_t dim() const {
        return static_cast<std::size_t>(m_.rows());
    }
    Complex operator()(std::size_t row, std::size_t col) const {
        return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }
    Complex &operator()(std::size_t row, std::size_t col) {
        return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }
    const Eigen::MatrixXcd &eigen() const {
        return m_;
    }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    bool is_finite() const;
    std::vector<Complex> row_major() const;

    ComplexMatrix &operator*=(const ComplexMatrix &rhs);
    ComplexMatrix &operator+=(const ComplexMatrix &rhs);
    ComplexMatrix &operator-=(const ComplexMatrix &rhs);
    ComplexMatrix &operator*=(Complex scale);

    friend ComplexMatrix operator*(ComplexMatrix lhs, const ComplexMatrix &rhs) {
        return lhs *= rhs;
    }
    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs) {
        return lhs += rhs;
    }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs) {
        return lhs -= rhs;
    }
    friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) {
        return lhs *= scale;
    }
    friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) {
        return rhs *= scale;
    }

    std::string str() const;

   private:
    Eigen::MatrixXcd m_;
};

enum class MatrixClassTag { GeneralComplex, SpecialLinear, SpecialUnitary };

/// Membership test for SL(d) / SU(d) at a fixed tolerance.
struct MatrixClass {
    MatrixClassTag tag = MatrixClassTag::GeneralComplex;
    double tolerance = kDefaultTolerance;

    bool admits(const ComplexMatrix &m) const;
    /// Throws ClassError naming the failing condition.
    void require(const ComplexMatrix &m, const std::string &what) const;
};

/// Largest singular value.
double op_norm(const ComplexMatrix &m);
/// op_norm(a - b).
double dist(const ComplexMatrix &a, const ComplexMatrix &b);
Complex determinant(const ComplexMatrix &m);
/// ‖M†M − I‖.
double unitarity_defect(const ComplexMatrix &m);
bool is_unitary(const ComplexMatrix &m, double tol = kDefaultTolerance);

/// Returns e^{-iφ/d} M where det M = e^{iφ} and φ = arg(det M) ∈ (-π, π].
/// The principal branch is fixed so cached nets reproduce across runs.
ComplexMatrix su_normalize(const ComplexMatrix &m, double tol = kDefaultTolerance);

enum class Ambient { SU, SL };

/// exp(i t H) for traceless Hermitian H (SU) or exp(t H) for traceless H (SL).
ComplexMatrix matrix_exp_tangent(
    const ComplexMatrix &h, double t, Ambient ambient, double tol = kDefaultTolerance);

/// Unit phase p minimizing ‖a − p b‖_F, i.e. p = Tr(b†a)/|Tr(b†a)| (1 if zero).
Complex relative_phase(const ComplexMatrix &a, const ComplexMatrix &b);

/// d-th root of unity ω minimizing ‖a − ω b‖ (ties go to the lowest power).
Complex center_phase(const ComplexMatrix &a, const ComplexMatrix &b);
/// min over d-th roots of unity ω of ‖a − ω b‖: distance modulo the center of SL(d).
double center_dist(const ComplexMatrix &a, const ComplexMatrix &b);

// Test-point generators. All randomness is drawn from the caller's engine.
using Rng = std::mt19937_64;
ComplexMatrix random_ginibre(std::size_t dim, Rng &rng);
ComplexMatrix haar_unitary(std::size_t dim, Rng &rng);
ComplexMatrix haar_special_unitary(std::size_t dim, Rng &rng);
/// Traceless Hermitian with unit operator norm.
ComplexMatrix random_traceless_hermitian(std::size_t dim, Rng &rng);
/// Traceless (generally non-normal) matrix with unit operator norm.
ComplexMatrix random_traceless(std::size_t dim, Rng &rng);

}  // namespace irrepsk

#endif
