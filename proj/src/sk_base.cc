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

#include "irrepsk/sk_base.h"

#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "irrepsk/error.h"

namespace irrepsk {

namespace {

struct Bloch {
    double angle = 0.0;  // U = cos(angle) I + i sin(angle) axis·σ, angle in [0, π]
    double axis[3] = {0.0, 0.0, 1.0};
};

Bloch bloch(const ComplexMatrix &u) {
    // (U − U†)/2i = sin(angle) axis·σ.
    Complex m00 = (u(0, 0) - std::conj(u(0, 0))) / Complex(0.0, 2.0);
    Complex m01 = (u(0, 1) - std::conj(u(1, 0))) / Complex(0.0, 2.0);
    double v[3] = {m01.real(), -m01.imag(), m00.real()};
    double s = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    double c = 0.5 * u.trace().real();
    Bloch out;
    out.angle = std::atan2(s, c);
    if (s > 0.0) {
        for (int k = 0; k < 3; k++) {
            out.axis[k] = v[k] / s;
        }
    }
    return out;
}

ComplexMatrix pauli_dot(const double n[3]) {
    ComplexMatrix m = ComplexMatrix::zero(2);
    m(0, 0) = n[2];
    m(1, 1) = -n[2];
    m(0, 1) = Complex(n[0], -n[1]);
    m(1, 0) = Complex(n[0], n[1]);
    return m;
}

ComplexMatrix rotation(const double axis[3], double angle) {
    return std::cos(angle) * ComplexMatrix::identity(2) + Complex(0.0, std::sin(angle)) * pauli_dot(axis);
}

/// S in SU(2) with S (m·σ) S† = n·σ.
ComplexMatrix align_axes(const double m[3], const double n[3]) {
    double dot = m[0] * n[0] + m[1] * n[1] + m[2] * n[2];
    if (dot < -1.0 + 1e-12) {
        // Half turn about any axis perpendicular to m.
        double p[3] = {-m[1], m[0], 0.0};
        double len = std::hypot(p[0], p[1]);
        if (len < 1e-6) {
            p[0] = 0.0;
            p[1] = -m[2];
            p[2] = m[1];
            len = std::hypot(p[1], p[2]);
        }
        for (double &x : p) {
            x /= len;
        }
        return Complex(0.0, 1.0) * pauli_dot(p);
    }
    // (I + (n·σ)(m·σ)) / sqrt(2(1 + n·m)).
    ComplexMatrix s = ComplexMatrix::identity(2) + pauli_dot(n) * pauli_dot(m);
    return s * Complex(1.0 / std::sqrt(2.0 * (1.0 + dot)), 0.0);
}

}  // namespace

std::pair<ComplexMatrix, ComplexMatrix> balanced_commutator_decompose(const ComplexMatrix &delta) {
    if (delta.dim() != 2) {
        throw Error(ErrorKind::DimUnsupported, "balanced commutators are implemented for d = 2 only");
    }
    ComplexMatrix id = ComplexMatrix::identity(2);
    double d = dist(delta, id);
    if (d > 0.25) {
        throw Error(ErrorKind::TooFar, "dist(delta, I) = " + std::to_string(d) + " exceeds 1/4");
    }
    Bloch target = bloch(delta);
    if (target.angle == 0.0) {
        return {id, id};
    }
    // Group commutator of equal-angle X and Y rotations: its angle α obeys
    // sin α = 2 sin²β sqrt(1 − sin⁴β), solved by sin²β = sin(α/2).
    double beta = std::asin(std::sqrt(std::sin(0.5 * target.angle)));
    const double x_axis[3] = {1.0, 0.0, 0.0};
    const double y_axis[3] = {0.0, 1.0, 0.0};
    ComplexMatrix v = rotation(x_axis, beta);
    ComplexMatrix w = rotation(y_axis, beta);
    Bloch comm = bloch(v * w * v.adjoint() * w.adjoint());
    ComplexMatrix s = align_axes(comm.axis, target.axis);
    return {s * v * s.adjoint(), s * w * s.adjoint()};
}

SymbolWord rewrite_irrep_inverses(const SymbolWord &w, const GateSet &gs) {
    std::vector<Token> out = w.tokens();
    bool changed = false;
    for (auto &t : out) {
        if (!t.inverted) {
            continue;
        }
        if (auto g = gs.irrep_element(t.generator)) {
            t = {static_cast<std::uint32_t>(gs.irrep_generator(gs.irrep().inverse(*g))), false};
            changed = true;
        }
    }
    if (!changed) {
        return w;
    }
    return SymbolWord(gs, std::move(out));
}

SymbolWord sk_compile(const GateSet &gs, const ComplexMatrix &target, double epsilon, const SKParams &params) {
    if (gs.dim() != 2 || target.dim() != 2) {
        throw Error(ErrorKind::DimUnsupported, "the base compiler handles d = 2 only");
    }
    if (gs.mode() != Mode::SU) {
        throw Error(ErrorKind::DimUnsupported, "the base compiler handles SU(2) gate sets only");
    }
    if (!(epsilon > 0.0)) {
        throw Error(ErrorKind::InvalidMatrix, "epsilon must be positive");
    }
    gs.matrix_class().require(target, "compile target");
    if (params.base_net == nullptr || params.base_net->size() == 0) {
        throw Error(ErrorKind::EmptyNet, "sk_compile needs a non-empty base net");
    }
    const EpsNet &net = *params.base_net;
    ComplexMatrix id = ComplexMatrix::identity(2);

    std::function<SymbolWord(const ComplexMatrix &, std::size_t)> approx = [&](const ComplexMatrix &u,
                                                                              std::size_t n) -> SymbolWord {
        if (n == 0) {
            return SymbolWord(gs, net.tokens(net.nearest(u).entry));
        }
        SymbolWord prev = approx(u, n - 1);
        ComplexMatrix delta = u * prev.product().adjoint();
        if (gs.quotient_center() && delta.trace().real() < 0.0) {
            delta *= Complex(-1.0, 0.0);
        }
        if (dist(delta, id) > 0.25) {
            throw Error(ErrorKind::NetTooCoarse,
                        "base approximation too far for a commutator step (" + std::to_string(dist(delta, id)) + ")");
        }
        auto [a, b] = balanced_commutator_decompose(delta);
        SymbolWord aw = approx(a, n - 1);
        SymbolWord bw = approx(b, n - 1);
        return aw + bw + aw.inverse(gs) + bw.inverse(gs) + prev;
    };

    auto measure = [&](const SymbolWord &w) { return gs.distance(evaluate(gs, w.tokens()), target); };

    if (params.depth) {
        SymbolWord w = approx(target, *params.depth);
        double err = measure(w);
        if (err > epsilon) {
            throw Error(ErrorKind::NetTooCoarse, "depth " + std::to_string(*params.depth) + " reaches " +
                                                     std::to_string(err) + " > " + std::to_string(epsilon));
        }
        return w;
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n <= params.max_depth; n++) {
        SymbolWord w = approx(target, n);
        double err = measure(w);
        if (err <= epsilon) {
            return w;
        }
        best = std::min(best, err);
    }
    throw Error(ErrorKind::NetTooCoarse, "best error " + std::to_string(best) + " after depth " +
                                             std::to_string(params.max_depth) + " exceeds " + std::to_string(epsilon));
}

}  // namespace irrepsk
