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

#include "irrepsk/sk_irrep.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "irrepsk/error.h"

namespace irrepsk {

namespace {

double factorial(std::size_t n) {
    double out = 1.0;
    for (std::size_t k = 2; k <= n; k++) {
        out *= static_cast<double>(k);
    }
    return out;
}

/// Exact inverse of ρ(g), phase-corrected from the inverse table.
ComplexMatrix exact_inverse(const FiniteGroupRep &rep, std::size_t g) {
    return rep.element(rep.inverse(g)) * std::polar(1.0, -rep.inverse_phase(g));
}

/// Nearest center element ω·M to the identity (M itself for genuine irreps).
ComplexMatrix align_to_identity(const GateSet &gs, const ComplexMatrix &m) {
    if (!gs.quotient_center()) {
        return m;
    }
    Complex w = center_phase(m, ComplexMatrix::identity(gs.dim()));
    return m * std::conj(w);
}

RefineResult refine_impl(
    const GateSet &gs, const EpsNet &net, std::size_t i, double eps_prime, const RefineOptions &options, bool sl) {
    if (i >= gs.size()) {
        throw Error(ErrorKind::DimError, "generator index " + std::to_string(i) + " out of range");
    }
    if (!(eps_prime > 0.0)) {
        throw Error(ErrorKind::InvalidMatrix, "eps' must be positive");
    }
    if (net.size() == 0) {
        throw Error(ErrorKind::EmptyNet, "refinement needs a non-empty net");
    }
    if (net.dim() != gs.dim()) {
        throw Error(ErrorKind::DimError, "net and gate set dimensions differ");
    }
    const FiniteGroupRep &rep = gs.irrep();
    const std::size_t order = rep.order();
    const double c = contraction_constant(rep);
    const ComplexMatrix id = ComplexMatrix::identity(gs.dim());
    const ComplexMatrix &u = gs.matrix(i);
    const ComplexMatrix &u_inv = gs.inverse_matrix(i);

    RefineResult out;
    out.generator = static_cast<std::uint32_t>(i);
    out.eps0 = eps0_constant(gs);

    // Any V with dist(VU, I) <= ε₀ lies within ε₀‖U⁻¹‖ of U⁻¹.
    double u_inv_norm = op_norm(u_inv);
    double radius = out.eps0 * u_inv_norm * (1.0 + 1e-12);
    std::optional<std::size_t> best;
    double best_err = std::numeric_limits<double>::infinity();
    for (std::size_t e : net.within(u_inv, radius)) {
        auto toks = net.tokens(e);
        if (std::any_of(toks.begin(), toks.end(), [](const Token &t) { return t.inverted; })) {
            continue;
        }
        double err = gs.distance(net.product(e) * u, id);
        if (err < best_err) {
            best_err = err;
            best = e;
        }
    }
    if (!best || best_err > out.eps0) {
        NearestResult near = net.nearest(u_inv);
        double err = std::min(best_err, gs.distance(net.product(near.entry) * u, id));
        throw Error(ErrorKind::NetTooCoarse, "best dist(VU, I) = " + std::to_string(err) + " exceeds eps0 = " +
                                                 std::to_string(out.eps0));
    }

    std::vector<std::uint32_t> v_word;
    for (const auto &t : net.tokens(*best)) {
        v_word.push_back(t.generator);
    }
    out.v_length = v_word.size();
    v_word.push_back(static_cast<std::uint32_t>(i));
    GateWord word(gs, v_word);

    auto record = [&](std::size_t k, const GateWord &w, const RefineStep *prev) {
        RefineStep step;
        step.k = k;
        step.length = w.length();
        ComplexMatrix p = align_to_identity(gs, w.product());
        step.error = gs.distance(w.product(), id);
        step.decay_bound = 2.0 * out.eps0 / std::pow(2.0, std::pow(2.0, static_cast<double>(k)));
        step.decay_ok = step.error <= step.decay_bound + 1e-12;
        if (prev != nullptr) {
            step.contraction_bound = c * prev->error * prev->error;
            step.contraction_ok = step.error <= step.contraction_bound + 1e-9;
            std::size_t exact = order * prev->length + 2 * (order - 1);
            step.length_ok = step.length == exact && step.length <= order * prev->length + 2 * order;
        }
        if (sl) {
            step.det_defect = std::abs(determinant(p) - 1.0);
            if (step.det_defect > gs.tolerance()) {
                throw Error(ErrorKind::ClassError, "iterate " + std::to_string(k) + " has |det - 1| = " +
                                                       std::to_string(step.det_defect));
            }
            auto [lhs, bound] = check_smalltrace(p, gs.tolerance());
            step.trace_lhs = lhs;
            step.trace_bound = bound;
            if (dist(p, id) > gs.sl_radius()) {
                throw Error(ErrorKind::BallExit, "iterate " + std::to_string(k) + " left the radius-" +
                                                     std::to_string(gs.sl_radius()) + " ball");
            }
        }
        return step;
    };

    out.trace.push_back(record(0, word, nullptr));
    std::size_t not_contracting = 0;
    while (out.trace.back().error > eps_prime) {
        std::size_t next_len = order * word.length() + 2 * (order - 1);
        if (next_len > options.max_tokens) {
            throw Error(ErrorKind::BudgetExceeded, "next iterate would have " + std::to_string(next_len) + " tokens");
        }
        word = symmetrize(gs, word);
        RefineStep step = record(out.trace.size(), word, &out.trace.back());
        not_contracting = step.error >= out.trace.back().error ? not_contracting + 1 : 0;
        out.trace.push_back(step);
        if (not_contracting >= 2) {
            throw Error(ErrorKind::Stalled, "error stopped contracting at " + std::to_string(step.error));
        }
    }

    // The trailing U cancels against the U⁻¹ being approximated.
    std::vector<std::uint32_t> indices = word.indices();
    indices.pop_back();
    out.word = GateWord(gs, std::move(indices));
    out.depth = out.trace.back().k;
    out.conjugated = out.trace.back().error;
    out.inverse_bound = out.conjugated * u_inv_norm;
    out.achieved = gs.distance(out.word.product(), u_inv);
    return out;
}

nlohmann::json trace_json(const std::vector<RefineStep> &trace) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &s : trace) {
        out.push_back({{"k", s.k}, {"error", s.error}, {"length", s.length}});
    }
    return out;
}

}  // namespace

double contraction_constant(std::size_t group_order, std::size_t dim) {
    double g = static_cast<double>(group_order);
    return 3.0 * g * factorial(dim - 1) + g * g;
}

double contraction_constant(const FiniteGroupRep &rep) {
    return contraction_constant(rep.order(), rep.dim());
}

GateWord symmetrize(const GateSet &gs, const GateWord &w) {
    const FiniteGroupRep &rep = gs.irrep();
    std::vector<std::uint32_t> out;
    out.reserve(rep.order() * w.length() + 2 * rep.order());
    for (std::size_t g = 1; g < rep.order(); g++) {
        out.push_back(static_cast<std::uint32_t>(gs.irrep_generator(g)));
        out.insert(out.end(), w.indices().begin(), w.indices().end());
        out.push_back(static_cast<std::uint32_t>(gs.irrep_generator(rep.inverse(g))));
    }
    out.insert(out.end(), w.indices().begin(), w.indices().end());
    return GateWord(gs, std::move(out));
}

ComplexMatrix symmetrize_matrix(const FiniteGroupRep &rep, const ComplexMatrix &w, std::span<const std::size_t> order) {
    if (w.dim() != rep.dim()) {
        throw Error(ErrorKind::DimError, "symmetrize: dimension mismatch");
    }
    std::vector<std::size_t> seq(order.begin(), order.end());
    if (seq.empty()) {
        for (std::size_t g = 1; g < rep.order(); g++) {
            seq.push_back(g);
        }
    }
    if (seq.size() != rep.order() - 1 || std::find(seq.begin(), seq.end(), 0) != seq.end()) {
        throw Error(ErrorKind::DimError, "ordering must list every non-identity element once");
    }
    ComplexMatrix out = ComplexMatrix::identity(rep.dim());
    for (std::size_t g : seq) {
        out *= rep.element(g) * w * exact_inverse(rep, g);
    }
    return out * w;
}

RefineResult refine_inverse(
    const GateSet &gs, const EpsNet &net, std::size_t i, double eps_prime, const RefineOptions &options) {
    if (gs.mode() == Mode::SL) {
        return refine_inverse_sl(gs, net, i, eps_prime, options);
    }
    return refine_impl(gs, net, i, eps_prime, options, false);
}

RefineResult refine_inverse_sl(
    const GateSet &gs, const EpsNet &net, std::size_t i, double eps_prime, const RefineOptions &options) {
    if (gs.mode() != Mode::SL) {
        throw Error(ErrorKind::ClassError, "refine_inverse_sl needs an SL-mode gate set");
    }
    return refine_impl(gs, net, i, eps_prime, options, true);
}

std::pair<double, double> check_smalltrace(const ComplexMatrix &m, double tol) {
    double defect = std::abs(determinant(m) - 1.0);
    if (defect > tol) {
        throw Error(ErrorKind::ClassError, "small-trace check needs det 1, |det - 1| = " + std::to_string(defect));
    }
    std::size_t d = m.dim();
    double lhs = std::abs(m.trace() - static_cast<double>(d));
    double r = dist(m, ComplexMatrix::identity(d));
    return {lhs, (std::pow(2.0, static_cast<double>(d)) + factorial(d)) * r * r};
}

nlohmann::json CompileReport::to_json(const GateSet &gs) const {
    nlohmann::json j;
    j["status"] = success ? "success" : "failure";
    if (!error.empty()) {
        j["error"] = error;
    }
    j["fingerprint"] = fingerprint;
    j["target"] = matrix_literal(target);
    j["epsilon"] = epsilon;
    j["measured_error"] = measured_error;
    j["word"] = format_word(gs, word);
    j["length"] = word.size();
    j["base_length"] = base_length;
    j["base_error"] = base_error;
    j["irrep_inverses_rewritten"] = irrep_inverses_rewritten;
    j["inverse_occurrences"] = inverse_occurrences;
    j["eps_prime"] = eps_prime;
    nlohmann::json inv = nlohmann::json::array();
    for (const auto &use : inverses) {
        inv.push_back({{"generator", gs.generator(use.generator).name},
                       {"occurrences", use.occurrences},
                       {"depth", use.depth},
                       {"length", use.length},
                       {"achieved", use.achieved},
                       {"trace", trace_json(use.trace)}});
    }
    j["inverses"] = inv;
    if (!success && !partial.empty()) {
        j["partial_word"] = format_word(gs, partial);
    }
    j["seconds"] = seconds;
    return j;
}

CompileReport compile(
    const GateSet &gs, const ComplexMatrix &target, double epsilon, const CompileNets &nets, const SKParams &params) {
    auto start = std::chrono::steady_clock::now();
    CompileReport report;
    report.target = target;
    report.epsilon = epsilon;
    report.fingerprint = gs.fingerprint();
    try {
        if (nets.base == nullptr || nets.refine == nullptr) {
            throw Error(ErrorKind::EmptyNet, "compile needs a base net and a refinement net");
        }
        SKParams base_params = params;
        base_params.base_net = nets.base;
        SymbolWord s = sk_compile(gs, target, epsilon / 2.0, base_params);
        report.partial = s.tokens();
        report.base_length = s.length();
        report.base_error = gs.distance(evaluate(gs, s.tokens()), target);

        std::size_t before = s.inverted_count();
        s = rewrite_irrep_inverses(s, gs);
        report.partial = s.tokens();
        report.irrep_inverses_rewritten = before - s.inverted_count();

        std::size_t m = s.inverted_count();
        report.inverse_occurrences = m;
        std::map<std::uint32_t, RefineResult> refined;
        if (m > 0) {
            report.eps_prime = (epsilon / 2.0) / static_cast<double>(m);
            for (const auto &t : s.tokens()) {
                if (t.inverted && !refined.count(t.generator)) {
                    refined.emplace(t.generator, refine_inverse(gs, *nets.refine, t.generator, report.eps_prime));
                }
            }
        }
        std::map<std::uint32_t, std::size_t> counts;
        for (const auto &t : s.tokens()) {
            if (!t.inverted) {
                report.word.push_back(t.generator);
                continue;
            }
            counts[t.generator]++;
            const auto &sub = refined.at(t.generator).word.indices();
            report.word.insert(report.word.end(), sub.begin(), sub.end());
        }
        for (const auto &[g, r] : refined) {
            report.inverses.push_back({g, counts[g], r.depth, r.word.length(), r.achieved, r.trace});
        }
        report.measured_error = gs.distance(evaluate(gs, report.word), target);
        report.success = report.measured_error <= epsilon;
        if (!report.success) {
            report.error = "re-multiplied error " + std::to_string(report.measured_error) + " exceeds " +
                           std::to_string(epsilon);
        }
    } catch (const Error &e) {
        report.success = false;
        report.error = e.what();
    }
    if (!report.success) {
        report.word.clear();
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

OrderingScan scan_orderings(const FiniteGroupRep &rep, std::size_t samples, Rng &rng) {
    if (rep.order() > 6) {
        throw Error(ErrorKind::GroupTooLarge, "|G|! = " + std::to_string(factorial(rep.order())) + " exceeds 720");
    }
    OrderingScan scan;
    scan.epsilons = {1e-2, 5e-3, 2e-3, 1e-3};
    const std::size_t d = rep.dim();
    std::vector<ComplexMatrix> hs;
    for (std::size_t s = 0; s < samples; s++) {
        hs.push_back(random_traceless_hermitian(d, rng));
    }
    std::vector<std::size_t> order(rep.order() - 1);
    std::iota(order.begin(), order.end(), 1);
    const ComplexMatrix id = ComplexMatrix::identity(d);
    const double n = static_cast<double>(scan.epsilons.size());
    do {
        OrderingScore row;
        row.order = order;
        for (const auto &h : hs) {
            // Least-squares line y = a + bε through y = ‖f(W) − I‖/ε².
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            for (double eps : scan.epsilons) {
                ComplexMatrix w = matrix_exp_tangent(h, eps, Ambient::SU);
                double y = dist(symmetrize_matrix(rep, w, order), id) / (eps * eps);
                sx += eps;
                sy += y;
                sxx += eps * eps;
                sxy += eps * y;
            }
            double b = (n * sxy - sx * sy) / (n * sxx - sx * sx);
            double a = (sy - b * sx) / n;
            row.coefficient = std::max(row.coefficient, std::abs(a));
        }
        scan.rows.push_back(std::move(row));
    } while (std::next_permutation(order.begin(), order.end()));

    std::vector<double> coeffs;
    for (const auto &row : scan.rows) {
        coeffs.push_back(row.coefficient);
    }
    std::sort(coeffs.begin(), coeffs.end());
    std::size_t k = coeffs.size();
    scan.median = k % 2 ? coeffs[k / 2] : 0.5 * (coeffs[k / 2 - 1] + coeffs[k / 2]);
    for (auto &row : scan.rows) {
        row.candidate = row.coefficient <= 1e-3 * scan.median;
    }
    return scan;
}

NaivePower naive_power_inverse(const GateSet &gs, std::size_t i, double eps, std::size_t max_power) {
    if (i >= gs.size()) {
        throw Error(ErrorKind::DimError, "generator index " + std::to_string(i) + " out of range");
    }
    NaivePower out;
    if (gs.dim() == 2) {
        // Unrolled 2×2 loop; the generic path allocates per step.
        const ComplexMatrix &um = gs.matrix(i);
        const ComplexMatrix &tm = gs.inverse_matrix(i);
        const Complex u[4] = {um(0, 0), um(0, 1), um(1, 0), um(1, 1)};
        const Complex t[4] = {tm(0, 0), tm(0, 1), tm(1, 0), tm(1, 1)};
        Complex p[4] = {u[0], u[1], u[2], u[3]};
        auto norm2 = [](Complex a, Complex b, Complex c, Complex e) {
            double x = std::norm(a) + std::norm(b), y = std::norm(c) + std::norm(e);
            Complex r = a * std::conj(c) + b * std::conj(e);
            return std::sqrt(0.5 * (x + y + std::sqrt((x - y) * (x - y) + 4.0 * std::norm(r))));
        };
        for (std::size_t k = 1; k <= max_power; k++) {
            double err = norm2(p[0] - t[0], p[1] - t[1], p[2] - t[2], p[3] - t[3]);
            if (gs.quotient_center()) {
                err = std::min(err, norm2(p[0] + t[0], p[1] + t[1], p[2] + t[2], p[3] + t[3]));
            }
            if (err <= eps) {
                return {true, k, err};
            }
            Complex q[4] = {p[0] * u[0] + p[1] * u[2], p[0] * u[1] + p[1] * u[3], p[2] * u[0] + p[3] * u[2],
                            p[2] * u[1] + p[3] * u[3]};
            std::copy(q, q + 4, p);
        }
        out.power = max_power;
        return out;
    }
    const Eigen::MatrixXcd &u = gs.matrix(i).eigen();
    const ComplexMatrix &target = gs.inverse_matrix(i);
    Eigen::MatrixXcd p = u;
    Eigen::MatrixXcd tmp(u.rows(), u.cols());
    for (std::size_t k = 1; k <= max_power; k++) {
        double err = gs.distance(ComplexMatrix(p), target);
        if (err <= eps) {
            out.found = true;
            out.power = k;
            out.error = err;
            return out;
        }
        tmp.noalias() = p * u;
        p.swap(tmp);
    }
    out.power = max_power;
    return out;
}

}  // namespace irrepsk
