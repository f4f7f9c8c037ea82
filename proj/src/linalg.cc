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

#include "irrepsk/linalg.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "irrepsk/error.h"

namespace irrepsk {

namespace {

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.dim() != b.dim()) {
        throw Error(
            ErrorKind::DimError,
            std::string(op) + ": " + std::to_string(a.dim()) + "x" + std::to_string(a.dim()) + " vs " +
                std::to_string(b.dim()) + "x" + std::to_string(b.dim()));
    }
}

void require_finite(const ComplexMatrix &m, const char *op) {
    if (!m.is_finite()) {
        throw Error(ErrorKind::InvalidMatrix, std::string(op) + ": non-finite entry");
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0) {
        throw Error(ErrorKind::DimError, "matrix must be square with dim >= 1");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    auto n = static_cast<Eigen::Index>(dim);
    return ComplexMatrix(Eigen::MatrixXcd::Identity(n, n));
}

ComplexMatrix ComplexMatrix::zero(std::size_t dim) {
    auto n = static_cast<Eigen::Index>(dim);
    return ComplexMatrix(Eigen::MatrixXcd::Zero(n, n));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> entries) {
    ComplexMatrix result = zero(entries.size());
    for (std::size_t k = 0; k < entries.size(); k++) {
        result(k, k) = entries[k];
    }
    return result;
}

ComplexMatrix ComplexMatrix::from_row_major(std::span<const Complex> entries) {
    auto dim = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(entries.size()))));
    if (dim == 0 || dim * dim != entries.size()) {
        throw Error(ErrorKind::DimError, "row-major literal of length " + std::to_string(entries.size()) +
                                             " is not a square matrix");
    }
    ComplexMatrix result = zero(dim);
    for (std::size_t r = 0; r < dim; r++) {
        for (std::size_t c = 0; c < dim; c++) {
            result(r, c) = entries[r * dim + c];
        }
    }
    return result;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    return ComplexMatrix(m_.adjoint());
}

Complex ComplexMatrix::trace() const {
    return m_.trace();
}

bool ComplexMatrix::is_finite() const {
    return m_.allFinite();
}

std::vector<Complex> ComplexMatrix::row_major() const {
    std::vector<Complex> out;
    out.reserve(dim() * dim());
    for (std::size_t r = 0; r < dim(); r++) {
        for (std::size_t c = 0; c < dim(); c++) {
            out.push_back((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix &ComplexMatrix::operator*=(const ComplexMatrix &rhs) {
    require_same_dim(*this, rhs, "multiply");
    m_ = m_ * rhs.m_;
    return *this;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &rhs) {
    require_same_dim(*this, rhs, "add");
    m_ += rhs.m_;
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &rhs) {
    require_same_dim(*this, rhs, "subtract");
    m_ -= rhs.m_;
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    m_ *= scale;
    return *this;
}

std::string ComplexMatrix::str() const {
    std::ostringstream out;
    out.precision(6);
    for (std::size_t r = 0; r < dim(); r++) {
        out << (r == 0 ? "[" : " ");
        for (std::size_t c = 0; c < dim(); c++) {
            Complex z = (*this)(r, c);
            out << (c == 0 ? "" : ", ") << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
        }
        out << (r + 1 == dim() ? "]" : "\n");
    }
    return out.str();
}

bool MatrixClass::admits(const ComplexMatrix &m) const {
    if (!m.is_finite()) {
        return false;
    }
    if (tag == MatrixClassTag::GeneralComplex) {
        return true;
    }
    if (std::abs(determinant(m) - 1.0) > tolerance) {
        return false;
    }
    return tag == MatrixClassTag::SpecialLinear || unitarity_defect(m) <= tolerance;
}

void MatrixClass::require(const ComplexMatrix &m, const std::string &what) const {
    if (!m.is_finite()) {
        throw Error(ErrorKind::InvalidMatrix, what + ": non-finite entry");
    }
    if (tag == MatrixClassTag::GeneralComplex) {
        return;
    }
    double det_err = std::abs(determinant(m) - 1.0);
    if (det_err > tolerance) {
        throw Error(ErrorKind::ClassError, what + ": |det - 1| = " + std::to_string(det_err));
    }
    if (tag == MatrixClassTag::SpecialUnitary) {
        double defect = unitarity_defect(m);
        if (defect > tolerance) {
            throw Error(ErrorKind::ClassError, what + ": ||M^dag M - I|| = " + std::to_string(defect));
        }
    }
}

double op_norm(const ComplexMatrix &m) {
    require_finite(m, "op_norm");
    if (m.dim() == 1) {
        return std::abs(m(0, 0));
    }
    if (m.dim() == 2) {
        // Eigenvalues of MM† = [[p, r], [r*, q]] without cancellation in the gap.
        Complex a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
        double p = std::norm(a) + std::norm(b);
        double q = std::norm(c) + std::norm(d);
        Complex r = a * std::conj(c) + b * std::conj(d);
        double gap = std::sqrt((p - q) * (p - q) + 4.0 * std::norm(r));
        return std::sqrt(0.5 * (p + q + gap));
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.eigen());
    return svd.singularValues()(0);
}

double dist(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "dist");
    return op_norm(a - b);
}

Complex determinant(const ComplexMatrix &m) {
    require_finite(m, "determinant");
    if (m.dim() == 1) {
        return m(0, 0);
    }
    if (m.dim() == 2) {
        return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    }
    return m.eigen().partialPivLu().determinant();
}

double unitarity_defect(const ComplexMatrix &m) {
    return op_norm(m.adjoint() * m - ComplexMatrix::identity(m.dim()));
}

bool is_unitary(const ComplexMatrix &m, double tol) {
    return m.is_finite() && unitarity_defect(m) <= tol;
}

ComplexMatrix su_normalize(const ComplexMatrix &m, double tol) {
    MatrixClass{MatrixClassTag::GeneralComplex, tol}.require(m, "su_normalize");
    if (!is_unitary(m, tol)) {
        throw Error(ErrorKind::ClassError, "su_normalize: input is not unitary");
    }
    double phi = std::arg(determinant(m));
    return m * std::polar(1.0, -phi / static_cast<double>(m.dim()));
}

ComplexMatrix matrix_exp_tangent(const ComplexMatrix &h, double t, Ambient ambient, double tol) {
    require_finite(h, "matrix_exp_tangent");
    double scale = std::max(1.0, op_norm(h));
    if (std::abs(h.trace()) > tol * scale) {
        throw Error(ErrorKind::ClassError, "matrix_exp_tangent: generator is not traceless");
    }
    if (ambient == Ambient::SU) {
        if (op_norm(h - h.adjoint()) > tol * scale) {
            throw Error(ErrorKind::ClassError, "matrix_exp_tangent: generator is not Hermitian");
        }
        return ComplexMatrix((Complex(0, t) * h.eigen()).exp());
    }
    return ComplexMatrix((t * h.eigen()).exp());
}

Complex relative_phase(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "relative_phase");
    Complex overlap = (b.eigen().adjoint() * a.eigen()).trace();
    double mag = std::abs(overlap);
    if (mag == 0.0) {
        return 1.0;
    }
    return overlap / mag;
}

Complex center_phase(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "center_phase");
    std::size_t d = a.dim();
    Complex best_phase = 1.0;
    double best = dist(a, b);
    for (std::size_t k = 1; k < d; k++) {
        Complex omega = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d));
        double candidate = op_norm(a - b * omega);
        if (candidate < best) {
            best = candidate;
            best_phase = omega;
        }
    }
    return best_phase;
}

double center_dist(const ComplexMatrix &a, const ComplexMatrix &b) {
    return op_norm(a - b * center_phase(a, b));
}

ComplexMatrix random_ginibre(std::size_t dim, Rng &rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    ComplexMatrix out = ComplexMatrix::zero(dim);
    for (std::size_t r = 0; r < dim; r++) {
        for (std::size_t c = 0; c < dim; c++) {
            double re = normal(rng);
            double im = normal(rng);
            out(r, c) = Complex(re, im);
        }
    }
    return out;
}

ComplexMatrix haar_unitary(std::size_t dim, Rng &rng) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(random_ginibre(dim, rng).eigen());
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phases of R's diagonal so Q is Haar distributed.
    for (Eigen::Index k = 0; k < q.cols(); k++) {
        Complex diag = r(k, k);
        double mag = std::abs(diag);
        if (mag > 0) {
            q.col(k) *= diag / mag;
        }
    }
    return ComplexMatrix(q);
}

ComplexMatrix haar_special_unitary(std::size_t dim, Rng &rng) {
    return su_normalize(haar_unitary(dim, rng));
}

ComplexMatrix random_traceless_hermitian(std::size_t dim, Rng &rng) {
    ComplexMatrix g = random_ginibre(dim, rng);
    ComplexMatrix h = (g + g.adjoint()) * Complex(0.5);
    h -= ComplexMatrix::identity(dim) * (h.trace() / static_cast<double>(dim));
    return h * Complex(1.0 / op_norm(h));
}

ComplexMatrix random_traceless(std::size_t dim, Rng &rng) {
    ComplexMatrix g = random_ginibre(dim, rng);
    g -= ComplexMatrix::identity(dim) * (g.trace() / static_cast<double>(dim));
    return g * Complex(1.0 / op_norm(g));
}

}  // namespace irrepsk
