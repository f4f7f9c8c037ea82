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

#include "irrepsk/gateset.h"

#include <cstdio>
#include <fstream>
#include <sstream>

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

std::string fnv1a_hex(std::string_view text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string canonical_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

ComplexMatrix inverse_of(const ComplexMatrix &m, Mode mode) {
    if (mode == Mode::SU) {
        return m.adjoint();
    }
    return ComplexMatrix(m.eigen().inverse());
}

std::vector<Generator> parse_named_matrices(const nlohmann::json &list, std::size_t dim, const char *field) {
    if (!list.is_array()) {
        throw Error(ErrorKind::SchemaError, std::string(field) + " must be a list");
    }
    std::vector<Generator> out;
    for (const auto &item : list) {
        if (!item.is_object() || !item.contains("name") || !item["name"].is_string() || !item.contains("matrix")) {
            throw Error(ErrorKind::SchemaError, std::string(field) + " entries need a string 'name' and a 'matrix'");
        }
        out.push_back({item["name"].get<std::string>(), parse_matrix_literal(item["matrix"], dim)});
    }
    return out;
}

}  // namespace

std::string_view mode_name(Mode mode) {
    return mode == Mode::SU ? "su" : "sl";
}

std::optional<std::size_t> GateSet::find(std::string_view name) const {
    for (std::size_t i = 0; i < generators_.size(); i++) {
        if (generators_[i].name == name) {
            return i;
        }
    }
    return std::nullopt;
}

MatrixClass GateSet::matrix_class() const {
    return {mode_ == Mode::SU ? MatrixClassTag::SpecialUnitary : MatrixClassTag::SpecialLinear, tolerance_};
}

double GateSet::distance(const ComplexMatrix &a, const ComplexMatrix &b) const {
    return quotient_center() ? center_dist(a, b) : dist(a, b);
}

GateSet GateSet::create(
    Mode mode, FiniteGroupRep irrep, std::vector<Generator> extras, double tolerance, double sl_radius) {
    GateSet gs;
    gs.dim_ = irrep.dim();
    gs.mode_ = mode;
    gs.tolerance_ = tolerance;
    gs.sl_radius_ = sl_radius;
    if (mode == Mode::SL && !(sl_radius > 0)) {
        throw Error(ErrorKind::SchemaError, "sl_radius must be positive");
    }
    MatrixClass cls = gs.matrix_class();
    for (std::size_t g = 0; g < irrep.order(); g++) {
        cls.require(irrep.element(g), "irrep element " + irrep.name(g));
        gs.generators_.push_back({irrep.name(g), irrep.element(g)});
    }
    for (auto &gate : extras) {
        if (gate.matrix.dim() != gs.dim_) {
            throw Error(ErrorKind::DimError, "gate " + gate.name + " has the wrong dimension");
        }
        if (gs.find(gate.name)) {
            throw Error(ErrorKind::SchemaError, "duplicate generator name " + gate.name);
        }
        if (mode == Mode::SU) {
            if (!is_unitary(gate.matrix, tolerance)) {
                throw Error(ErrorKind::ClassError, "gate " + gate.name + " is not unitary");
            }
            gate.matrix = su_normalize(gate.matrix, tolerance);
        }
        cls.require(gate.matrix, "gate " + gate.name);
        if (mode == Mode::SL) {
            double r = dist(gate.matrix, ComplexMatrix::identity(gs.dim_));
            if (r > sl_radius + tolerance) {
                throw Error(ErrorKind::BallError, "gate " + gate.name + " lies at distance " + canonical_number(r) +
                                                      " > r = " + canonical_number(sl_radius));
            }
        }
        gs.extra_indices_.push_back(gs.generators_.size());
        gs.generators_.push_back(std::move(gate));
    }
    for (const auto &g : gs.generators_) {
        gs.inverses_.push_back(inverse_of(g.matrix, mode));
    }
    gs.irrep_ = std::move(irrep);

    std::ostringstream canon;
    canon << "d=" << gs.dim_ << ";mode=" << mode_name(mode) << ";tol=" << canonical_number(tolerance)
          << ";r=" << canonical_number(mode == Mode::SL ? sl_radius : 0.0) << ";irrep=" << gs.irrep_.order() << ";";
    for (const auto &g : gs.generators_) {
        canon << g.name << "=";
        for (Complex z : g.matrix.row_major()) {
            canon << canonical_number(z.real()) << "," << canonical_number(z.imag()) << ",";
        }
        canon << ";";
    }
    gs.fingerprint_ = fnv1a_hex(canon.str());
    return gs;
}

ComplexMatrix parse_matrix_literal(const nlohmann::json &literal, std::size_t dim) {
    if (!literal.is_array() || literal.size() != dim * dim) {
        throw Error(ErrorKind::SchemaError, "matrix literal must list " + std::to_string(dim * dim) + " [re, im] pairs");
    }
    std::vector<Complex> entries;
    for (const auto &pair : literal) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw Error(ErrorKind::SchemaError, "matrix entries must be [re, im] number pairs");
        }
        entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    ComplexMatrix m = ComplexMatrix::from_row_major(entries);
    if (!m.is_finite()) {
        throw Error(ErrorKind::InvalidMatrix, "matrix literal has a non-finite entry");
    }
    return m;
}

nlohmann::json matrix_literal(const ComplexMatrix &m) {
    nlohmann::json out = nlohmann::json::array();
    for (Complex z : m.row_major()) {
        out.push_back({z.real(), z.imag()});
    }
    return out;
}

GateSet gateset_from_json(const nlohmann::json &doc) {
    if (!doc.is_object()) {
        throw Error(ErrorKind::SchemaError, "gate-set document must be an object");
    }
    if (!doc.contains("dimension") || !doc["dimension"].is_number_integer() || doc["dimension"].get<long>() < 1) {
        throw Error(ErrorKind::SchemaError, "'dimension' must be a positive integer");
    }
    auto dim = doc["dimension"].get<std::size_t>();
    std::string mode_text = doc.value("mode", std::string("su"));
    Mode mode;
    if (mode_text == "su") {
        mode = Mode::SU;
    } else if (mode_text == "sl") {
        mode = Mode::SL;
    } else {
        throw Error(ErrorKind::SchemaError, "'mode' must be \"su\" or \"sl\"");
    }
    double tol = kDefaultTolerance;
    if (doc.contains("tolerance")) {
        if (!doc["tolerance"].is_number() || doc["tolerance"].get<double>() < 0) {
            throw Error(ErrorKind::SchemaError, "'tolerance' must be a non-negative number");
        }
        tol = doc["tolerance"].get<double>();
    }
    double radius = 1.0;
    if (doc.contains("sl_radius")) {
        if (!doc["sl_radius"].is_number()) {
            throw Error(ErrorKind::SchemaError, "'sl_radius' must be a number");
        }
        radius = doc["sl_radius"].get<double>();
    }
    if (!doc.contains("irrep") || !doc["irrep"].is_object()) {
        throw Error(ErrorKind::SchemaError, "'irrep' section is required");
    }
    const auto &irrep_doc = doc["irrep"];
    std::optional<FiniteGroupRep> irrep;
    try {
        if (irrep_doc.contains("builtin")) {
            if (!irrep_doc["builtin"].is_string()) {
                throw Error(ErrorKind::SchemaError, "'irrep.builtin' must be a string");
            }
            auto tag = parse_builtin_group(irrep_doc["builtin"].get<std::string>());
            if (!tag) {
                throw Error(ErrorKind::SchemaError, "unknown builtin irrep " + irrep_doc["builtin"].dump());
            }
            if (*tag != BuiltinGroup::WeylProjective && dim != 2) {
                throw Error(ErrorKind::SchemaError, "builtin irrep " + irrep_doc["builtin"].dump() + " is 2-dimensional");
            }
            irrep = build_builtin(*tag, dim);
        } else if (irrep_doc.contains("matrices")) {
            std::vector<ComplexMatrix> mats;
            std::vector<std::string> names;
            for (auto &g : parse_named_matrices(irrep_doc["matrices"], dim, "irrep.matrices")) {
                // Genuine irreps outside SU(d) become projective irreps inside it.
                if (is_unitary(g.matrix, tol) && (mode == Mode::SU || std::abs(determinant(g.matrix) - 1.0) > tol)) {
                    g.matrix = su_normalize(g.matrix, tol);
                }
                mats.push_back(std::move(g.matrix));
                names.push_back(std::move(g.name));
            }
            irrep = infer_group(std::move(mats), tol, std::move(names));
        } else {
            throw Error(ErrorKind::SchemaError, "'irrep' needs 'builtin' or 'matrices'");
        }
    } catch (const Error &e) {
        switch (e.kind()) {
            case ErrorKind::NotClosed:
            case ErrorKind::NotIrreducible:
            case ErrorKind::AmbiguousMatch:
                throw Error(ErrorKind::IrrepError, e.what());
            default:
                throw;
        }
    }
    std::vector<Generator> gates;
    if (doc.contains("gates")) {
        gates = parse_named_matrices(doc["gates"], dim, "gates");
    }
    return GateSet::create(mode, std::move(*irrep), std::move(gates), tol, radius);
}

GateSet parse_gateset(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::SchemaError, std::string("malformed JSON: ") + e.what());
    }
    return gateset_from_json(doc);
}

GateSet load_gateset(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::IoError, "cannot open " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_gateset(buf.str());
}

double eps0_constant(std::size_t group_order, std::size_t dim) {
    double g = static_cast<double>(group_order);
    return 1.0 / (6.0 * g * factorial(dim - 1) + 2.0 * g * g);
}

double eps0_constant(const GateSet &gs) {
    return eps0_constant(gs.irrep().order(), gs.dim());
}

GateWord::GateWord(const GateSet &gs, std::vector<std::uint32_t> indices)
    : indices_(std::move(indices)), product_(evaluate(gs, indices_)) {
}

void GateWord::append(const GateSet &gs, std::uint32_t index) {
    indices_.push_back(index);
    product_ *= gs.matrix(index);
}

GateWord GateWord::operator+(const GateWord &rhs) const {
    GateWord out = *this;
    out.indices_.insert(out.indices_.end(), rhs.indices_.begin(), rhs.indices_.end());
    out.product_ *= rhs.product_;
    return out;
}

SymbolWord::SymbolWord(const GateSet &gs, std::vector<Token> tokens)
    : tokens_(std::move(tokens)), product_(evaluate(gs, tokens_)) {
}

std::size_t SymbolWord::inverted_count() const {
    std::size_t n = 0;
    for (const auto &t : tokens_) {
        n += t.inverted ? 1 : 0;
    }
    return n;
}

SymbolWord SymbolWord::inverse(const GateSet &gs) const {
    std::vector<Token> out(tokens_.rbegin(), tokens_.rend());
    for (auto &t : out) {
        t.inverted = !t.inverted;
    }
    ComplexMatrix p = gs.mode() == Mode::SU ? product_.adjoint() : ComplexMatrix(product_.eigen().inverse());
    return SymbolWord(std::move(out), std::move(p));
}

SymbolWord SymbolWord::operator+(const SymbolWord &rhs) const {
    std::vector<Token> out = tokens_;
    out.insert(out.end(), rhs.tokens_.begin(), rhs.tokens_.end());
    return SymbolWord(std::move(out), product_ * rhs.product_);
}

const ComplexMatrix &token_matrix(const GateSet &gs, const Token &token) {
    return token.inverted ? gs.inverse_matrix(token.generator) : gs.matrix(token.generator);
}

ComplexMatrix evaluate(const GateSet &gs, std::span<const std::uint32_t> indices) {
    ComplexMatrix out = ComplexMatrix::identity(gs.dim());
    for (auto i : indices) {
        out *= gs.matrix(i);
    }
    return out;
}

ComplexMatrix evaluate(const GateSet &gs, std::span<const Token> tokens) {
    ComplexMatrix out = ComplexMatrix::identity(gs.dim());
    for (const auto &t : tokens) {
        out *= token_matrix(gs, t);
    }
    return out;
}

std::string format_word(const GateSet &gs, std::span<const std::uint32_t> indices) {
    std::string out;
    for (auto i : indices) {
        if (!out.empty()) {
            out += ' ';
        }
        out += gs.generator(i).name;
    }
    return out;
}

std::string format_word(const GateSet &gs, std::span<const Token> tokens) {
    std::string out;
    for (const auto &t : tokens) {
        if (!out.empty()) {
            out += ' ';
        }
        out += gs.generator(t.generator).name;
        if (t.inverted) {
            out += "^-1";
        }
    }
    return out;
}

std::vector<Token> parse_word(const GateSet &gs, std::string_view text) {
    std::vector<Token> out;
    std::istringstream in{std::string(text)};
    std::string item;
    while (in >> item) {
        Token t;
        constexpr std::string_view suffix = "^-1";
        if (item.size() > suffix.size() && item.ends_with(suffix)) {
            t.inverted = true;
            item.resize(item.size() - suffix.size());
        }
        auto index = gs.find(item);
        if (!index) {
            throw Error(ErrorKind::FormatError, "unknown generator '" + item + "' in word");
        }
        t.generator = static_cast<std::uint32_t>(*index);
        out.push_back(t);
    }
    return out;
}

}  // namespace irrepsk
