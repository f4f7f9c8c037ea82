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

#include "irrepsk/eps_net.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "irrepsk/error.h"

namespace irrepsk {

namespace {

constexpr double kTieSlack = 1e-12;
constexpr int kKeyDims = 4;
constexpr long kKeyRange = 32767;

/// op_norm(p − phase·q) for flat row-major d×d blocks.
double block_dist(const Complex *p, const Complex *q, Complex phase, std::size_t d) {
    if (d == 2) {
        Complex a = p[0] - phase * q[0], b = p[1] - phase * q[1];
        Complex c = p[2] - phase * q[2], e = p[3] - phase * q[3];
        double x = std::norm(a) + std::norm(b);
        double y = std::norm(c) + std::norm(e);
        Complex r = a * std::conj(c) + b * std::conj(e);
        return std::sqrt(0.5 * (x + y + std::sqrt((x - y) * (x - y) + 4.0 * std::norm(r))));
    }
    auto n = static_cast<Eigen::Index>(d);
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> pm(p, n, n);
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> qm(q, n, n);
    return op_norm(ComplexMatrix(Eigen::MatrixXcd(pm - phase * qm)));
}

long quantize(double x, double cell) {
    double k = std::floor(x / cell);
    return static_cast<long>(std::clamp(k, -static_cast<double>(kKeyRange), static_cast<double>(kKeyRange)));
}

std::uint64_t pack(const long idx[kKeyDims]) {
    std::uint64_t key = 0;
    for (int k = 0; k < kKeyDims; k++) {
        key = (key << 16) | static_cast<std::uint64_t>(idx[k] + kKeyRange + 1);
    }
    return key;
}

std::string token_text(const Token &t) {
    return std::to_string(t.generator) + (t.inverted ? "~" : "");
}

}  // namespace

NetAlphabet NetAlphabet::plain(const GateSet &gs) {
    NetAlphabet out;
    for (std::size_t i = 0; i < gs.size(); i++) {
        out.tokens.push_back({static_cast<std::uint32_t>(i), false});
    }
    return out;
}

NetAlphabet NetAlphabet::with_inverses(const GateSet &gs) {
    NetAlphabet out = plain(gs);
    for (auto i : gs.extra_indices()) {
        out.tokens.push_back({static_cast<std::uint32_t>(i), true});
    }
    return out;
}

bool NetAlphabet::has_inverses() const {
    return std::any_of(tokens.begin(), tokens.end(), [](const Token &t) { return t.inverted; });
}

EpsNet::EpsNet(const GateSet &gs, NetAlphabet alphabet, double dedup_tol)
    : dim_(gs.dim()),
      alphabet_(std::move(alphabet)),
      dedup_tol_(dedup_tol > 0 ? dedup_tol : eps0_constant(gs) / 10.0),
      quotient_center_(gs.quotient_center()) {
    cell_ = 4.0 * dedup_tol_;
    if (alphabet_.tokens.size() > std::numeric_limits<std::uint16_t>::max()) {
        throw Error(ErrorKind::DimError, "net alphabet too large");
    }
}

std::span<const std::uint16_t> EpsNet::word(std::size_t i) const {
    return {symbols_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
}

std::vector<Token> EpsNet::tokens(std::size_t i) const {
    std::vector<Token> out;
    for (auto s : word(i)) {
        out.push_back(alphabet_.tokens[s]);
    }
    return out;
}

ComplexMatrix EpsNet::product(std::size_t i) const {
    return ComplexMatrix::from_row_major(std::span<const Complex>(raw(i), dim_ * dim_));
}

std::vector<Complex> EpsNet::center_phases() const {
    std::vector<Complex> out{1.0};
    if (quotient_center_) {
        for (std::size_t k = 1; k < dim_; k++) {
            out.push_back(std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(dim_)));
        }
    }
    return out;
}

void EpsNet::push(std::span<const std::uint16_t> word, std::span<const Complex> product) {
    auto index = static_cast<std::uint32_t>(size());
    symbols_.insert(symbols_.end(), word.begin(), word.end());
    offsets_.push_back(symbols_.size());
    products_.insert(products_.end(), product.begin(), product.end());
    long idx[kKeyDims] = {0, 0, 0, 0};
    const Complex *row = product.data();
    double coords[kKeyDims] = {row[0].real(), row[0].imag(), dim_ > 1 ? row[1].real() : 0.0,
                               dim_ > 1 ? row[1].imag() : 0.0};
    for (int k = 0; k < kKeyDims; k++) {
        idx[k] = quantize(coords[k], cell_);
    }
    std::uint64_t key = pack(idx);
    auto [it, inserted] = heads_.try_emplace(key, index);
    next_.push_back(inserted ? std::numeric_limits<std::uint32_t>::max() : it->second);
    it->second = index;
}

// Visits every entry whose cell intersects the box of half-width r around the
// query's key coordinates. Those coordinates come from the first row, whose
// Euclidean distance lower-bounds the operator norm, so nothing within r is
// missed. Returns false without visiting when the box spans more cells than
// there are entries (callers then scan linearly).
template <typename Visit>
bool EpsNet::visit_box(const Complex *query, double r, Visit &&visit) const {
    double coords[kKeyDims] = {query[0].real(), query[0].imag(), dim_ > 1 ? query[1].real() : 0.0,
                               dim_ > 1 ? query[1].imag() : 0.0};
    long lo[kKeyDims], hi[kKeyDims];
    double cells = 1.0;
    for (int k = 0; k < kKeyDims; k++) {
        lo[k] = quantize(coords[k] - r, cell_);
        hi[k] = quantize(coords[k] + r, cell_);
        cells *= static_cast<double>(hi[k] - lo[k] + 1);
    }
    if (cells > static_cast<double>(size())) {
        return false;
    }
    long idx[kKeyDims];
    for (idx[0] = lo[0]; idx[0] <= hi[0]; idx[0]++) {
        for (idx[1] = lo[1]; idx[1] <= hi[1]; idx[1]++) {
            for (idx[2] = lo[2]; idx[2] <= hi[2]; idx[2]++) {
                for (idx[3] = lo[3]; idx[3] <= hi[3]; idx[3]++) {
                    auto it = heads_.find(pack(idx));
                    if (it == heads_.end()) {
                        continue;
                    }
                    for (std::uint32_t e = it->second; e != std::numeric_limits<std::uint32_t>::max(); e = next_[e]) {
                        visit(static_cast<std::size_t>(e));
                    }
                }
            }
        }
    }
    return true;
}

double EpsNet::distance_to(std::size_t i, const ComplexMatrix &target) const {
    std::vector<Complex> t = target.row_major();
    double best = std::numeric_limits<double>::infinity();
    for (Complex phase : center_phases()) {
        best = std::min(best, block_dist(raw(i), t.data(), phase, dim_));
    }
    return best;
}

NearestResult EpsNet::nearest(const ComplexMatrix &target) const {
    if (target.dim() != dim_) {
        throw Error(ErrorKind::DimError, "nearest: target dimension differs from the net");
    }
    if (size() == 0) {
        throw Error(ErrorKind::EmptyNet, "nearest on an empty net");
    }
    std::vector<Complex> t = target.row_major();
    std::vector<Complex> phases = center_phases();
    std::vector<std::vector<Complex>> queries;
    for (Complex phase : phases) {
        std::vector<Complex> q = t;
        for (auto &z : q) {
            z *= phase;
        }
        queries.push_back(std::move(q));
    }

    NearestResult best{0, std::numeric_limits<double>::infinity()};
    auto consider = [&](std::size_t e, double d) {
        if (d < best.distance - kTieSlack || (d <= best.distance + kTieSlack && e < best.entry)) {
            best = {e, std::min(d, best.distance)};
            best.distance = d;
        }
    };
    auto scan_all = [&]() {
        for (std::size_t e = 0; e < size(); e++) {
            double d = std::numeric_limits<double>::infinity();
            for (Complex phase : phases) {
                d = std::min(d, block_dist(raw(e), t.data(), phase, dim_));
            }
            consider(e, d);
        }
        return best;
    };

    for (double r = cell_;; r *= 2.0) {
        for (const auto &q : queries) {
            bool ok = visit_box(q.data(), r, [&](std::size_t e) { consider(e, block_dist(raw(e), q.data(), 1.0, dim_)); });
            if (!ok) {
                best = {0, std::numeric_limits<double>::infinity()};
                return scan_all();
            }
        }
        if (best.distance <= r) {
            return best;
        }
    }
}

std::vector<std::size_t> EpsNet::within(const ComplexMatrix &target, double r) const {
    if (target.dim() != dim_) {
        throw Error(ErrorKind::DimError, "within: target dimension differs from the net");
    }
    std::vector<Complex> t = target.row_major();
    std::vector<std::size_t> out;
    bool scanned = true;
    for (Complex phase : center_phases()) {
        std::vector<Complex> q = t;
        for (auto &z : q) {
            z *= phase;
        }
        scanned = scanned && visit_box(q.data(), r, [&](std::size_t e) {
                      if (block_dist(raw(e), q.data(), 1.0, dim_) <= r) {
                          out.push_back(e);
                      }
                  });
    }
    if (!scanned) {
        out.clear();
        for (std::size_t e = 0; e < size(); e++) {
            if (distance_to(e, target) <= r) {
                out.push_back(e);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

EpsNet build_net(const GateSet &gs, const NetAlphabet &alphabet, const NetBuildOptions &options) {
    EpsNet net(gs, alphabet, options.dedup_tol);
    std::size_t d = gs.dim();
    std::size_t block = d * d;
    MatrixClass cls = gs.matrix_class();

    std::vector<std::vector<Complex>> letters;
    for (const auto &t : alphabet.tokens) {
        letters.push_back(token_matrix(gs, t).row_major());
    }
    net.word_length_ = 0;
    if (options.budget == 0) {
        net.usable_ = false;
        return net;
    }
    net.push({}, ComplexMatrix::identity(d).row_major());

    auto is_duplicate = [&](const std::vector<Complex> &p) {
        bool found = false;
        for (Complex phase : net.center_phases()) {
            std::vector<Complex> q = p;
            for (auto &z : q) {
                z *= phase;
            }
            bool ok = net.visit_box(q.data(), net.dedup_tol_, [&](std::size_t e) {
                if (!found && block_dist(net.raw(e), q.data(), 1.0, d) <= net.dedup_tol_) {
                    found = true;
                }
            });
            if (!ok) {
                for (std::size_t e = 0; e < net.size() && !found; e++) {
                    found = block_dist(net.raw(e), q.data(), 1.0, d) <= net.dedup_tol_;
                }
            }
            if (found) {
                return true;
            }
        }
        return false;
    };

    std::size_t level_start = 0;
    std::vector<Complex> p(block);
    std::vector<std::uint16_t> w;
    for (std::size_t len = 1; len <= options.max_length; len++) {
        std::size_t level_end = net.size();
        for (std::size_t e = level_start; e < level_end; e++) {
            for (std::size_t s = 0; s < letters.size(); s++) {
                const Complex *a = net.raw(e);
                const Complex *b = letters[s].data();
                for (std::size_t r = 0; r < d; r++) {
                    for (std::size_t c = 0; c < d; c++) {
                        Complex acc = 0.0;
                        for (std::size_t k = 0; k < d; k++) {
                            acc += a[r * d + k] * b[k * d + c];
                        }
                        p[r * d + c] = acc;
                    }
                }
                if (is_duplicate(p)) {
                    continue;
                }
                if (net.size() >= options.budget) {
                    net.usable_ = false;
                    return net;
                }
                cls.require(ComplexMatrix::from_row_major(p), "net product");
                auto parent = net.word(e);
                w.assign(parent.begin(), parent.end());
                w.push_back(static_cast<std::uint16_t>(s));
                net.push(w, p);
            }
        }
        net.word_length_ = len;
        level_start = level_end;
        if (level_start == net.size()) {
            // No new products: every longer word repeats a stored one.
            net.word_length_ = options.max_length;
            break;
        }
        if (!options.probes.empty() && options.stop_density > 0) {
            double density = measure_density(net, options.probes);
            net.set_achieved_density(density);
            if (density <= options.stop_density) {
                break;
            }
        }
    }
    return net;
}

EpsNet build_net(const GateSet &gs, std::size_t max_length, std::size_t budget) {
    NetBuildOptions options;
    options.max_length = max_length;
    options.budget = budget;
    return build_net(gs, NetAlphabet::plain(gs), options);
}

double measure_density(const EpsNet &net, std::span<const ComplexMatrix> probes) {
    double worst = 0.0;
    for (const auto &probe : probes) {
        worst = std::max(worst, net.nearest(probe).distance);
    }
    return worst;
}

void save_net(const EpsNet &net, const GateSet &gs, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::IoError, "cannot write " + path.string());
    }
    double checksum = 0.0;
    for (std::size_t e = 0; e < net.size(); e++) {
        for (Complex z : net.product(e).row_major()) {
            checksum += z.real() + z.imag();
        }
    }
    char buf[64];
    out << "irrepsk-net 1\n";
    out << "fingerprint " << gs.fingerprint() << "\n";
    out << "alphabet " << net.alphabet().tokens.size();
    for (const auto &t : net.alphabet().tokens) {
        out << " " << token_text(t);
    }
    out << "\n";
    out << "word_length " << net.word_length() << "\n";
    out << "usable " << (net.usable() ? 1 : 0) << "\n";
    std::snprintf(buf, sizeof(buf), "%.17g", net.dedup_tol());
    out << "dedup_tol " << buf << "\n";
    std::snprintf(buf, sizeof(buf), "%.17g", checksum);
    out << "checksum " << buf << "\n";
    out << "count " << net.size() << "\n";
    for (std::size_t e = 0; e < net.size(); e++) {
        auto w = net.word(e);
        out << w.size();
        for (auto s : w) {
            out << " " << s;
        }
        out << "\n";
    }
    out << "end\n";
    if (!out) {
        throw Error(ErrorKind::IoError, "write failed for " + path.string());
    }
}

EpsNet load_net(const GateSet &gs, const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::IoError, "cannot open " + path.string());
    }
    auto fail = [&](const std::string &why) { return Error(ErrorKind::FormatError, path.string() + ": " + why); };
    auto expect_field = [&](const char *name) {
        std::string line;
        if (!std::getline(in, line)) {
            throw fail(std::string("missing '") + name + "' header");
        }
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key != name) {
            throw fail(std::string("expected '") + name + "', got '" + key + "'");
        }
        std::string rest;
        std::getline(ls, rest);
        return rest.empty() ? rest : rest.substr(1);
    };

    if (expect_field("irrepsk-net") != "1") {
        throw fail("unsupported version");
    }
    std::string fingerprint = expect_field("fingerprint");
    if (fingerprint != gs.fingerprint()) {
        throw Error(ErrorKind::StaleGateSet,
                    "net was built for gate set " + fingerprint + ", current is " + gs.fingerprint());
    }
    NetAlphabet alphabet;
    {
        std::istringstream ls(expect_field("alphabet"));
        std::size_t n = 0;
        if (!(ls >> n)) {
            throw fail("bad alphabet header");
        }
        for (std::size_t k = 0; k < n; k++) {
            std::string tok;
            if (!(ls >> tok)) {
                throw fail("alphabet header truncated");
            }
            Token t;
            t.inverted = !tok.empty() && tok.back() == '~';
            if (t.inverted) {
                tok.pop_back();
            }
            try {
                t.generator = static_cast<std::uint32_t>(std::stoul(tok));
            } catch (const std::exception &) {
                throw fail("bad alphabet token '" + tok + "'");
            }
            if (t.generator >= gs.size()) {
                throw fail("alphabet references generator " + tok + " outside the gate set");
            }
            alphabet.tokens.push_back(t);
        }
    }
    std::size_t word_length = 0, count = 0;
    int usable = 0;
    double dedup = 0.0, checksum = 0.0;
    try {
        word_length = std::stoul(expect_field("word_length"));
        usable = std::stoi(expect_field("usable"));
        dedup = std::stod(expect_field("dedup_tol"));
        checksum = std::stod(expect_field("checksum"));
        count = std::stoul(expect_field("count"));
    } catch (const std::invalid_argument &) {
        throw fail("malformed numeric header");
    } catch (const std::out_of_range &) {
        throw fail("numeric header out of range");
    }

    EpsNet net(gs, alphabet, dedup);
    net.word_length_ = word_length;
    net.usable_ = usable != 0;
    std::vector<std::vector<Complex>> letters;
    for (const auto &t : alphabet.tokens) {
        letters.push_back(token_matrix(gs, t).row_major());
    }
    MatrixClass cls = gs.matrix_class();
    std::string line;
    std::vector<std::uint16_t> w;
    double recomputed = 0.0;
    for (std::size_t e = 0; e < count; e++) {
        if (!std::getline(in, line)) {
            throw fail("truncated after " + std::to_string(e) + " of " + std::to_string(count) + " records");
        }
        std::istringstream ls(line);
        std::size_t len = 0;
        if (!(ls >> len)) {
            throw fail("malformed record " + std::to_string(e));
        }
        w.clear();
        ComplexMatrix p = ComplexMatrix::identity(gs.dim());
        for (std::size_t k = 0; k < len; k++) {
            std::size_t s = 0;
            if (!(ls >> s) || s >= letters.size()) {
                throw fail("malformed record " + std::to_string(e));
            }
            w.push_back(static_cast<std::uint16_t>(s));
            p *= token_matrix(gs, alphabet.tokens[s]);
        }
        std::string extra;
        if (ls >> extra) {
            throw fail("trailing data in record " + std::to_string(e));
        }
        cls.require(p, "net product");
        std::vector<Complex> flat = p.row_major();
        for (Complex z : flat) {
            recomputed += z.real() + z.imag();
        }
        net.push(w, flat);
    }
    if (!std::getline(in, line) || line != "end") {
        throw fail("missing end marker");
    }
    if (std::abs(recomputed - checksum) > 1e-9 * (1.0 + std::abs(checksum))) {
        throw fail("recomputed products do not match the stored checksum");
    }
    return net;
}

}  // namespace irrepsk
