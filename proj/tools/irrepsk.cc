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

// Command-line front end: validate, net, compile, refine-inverse, bench,
// scan-orderings.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "irrepsk/eps_net.h"
#include "irrepsk/error.h"
#include "irrepsk/finite_rep.h"
#include "irrepsk/gateset.h"
#include "irrepsk/linalg.h"
#include "irrepsk/sk_base.h"
#include "irrepsk/sk_irrep.h"
#include "json.hpp"

using namespace irrepsk;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitCompile = 2;
constexpr int kExitIo = 3;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::IoError:
        case ErrorKind::FormatError:
            return kExitIo;
        case ErrorKind::NetTooCoarse:
        case ErrorKind::Stalled:
        case ErrorKind::BallExit:
        case ErrorKind::TooFar:
        case ErrorKind::DimUnsupported:
        case ErrorKind::BudgetExceeded:
        case ErrorKind::EmptyNet:
            return kExitCompile;
        default:
            return kExitValidation;
    }
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

std::string fmt_full(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::vector<double> parse_epsilons(const std::string &text) {
    std::vector<double> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception &) {
            throw Error(ErrorKind::SchemaError, "bad epsilon '" + item + "'");
        }
        if (!(out.back() > 0)) {
            throw Error(ErrorKind::SchemaError, "epsilon must be positive");
        }
    }
    if (out.empty()) {
        throw Error(ErrorKind::SchemaError, "no epsilon given");
    }
    return out;
}

/// "identity", "random", "axis:x,y,z:theta" (rotation exp(−iθ/2 n·σ)), or a
/// JSON matrix literal.
ComplexMatrix parse_target(const std::string &spec, const GateSet &gs, Rng &rng) {
    std::size_t d = gs.dim();
    ComplexMatrix out;
    if (spec == "identity") {
        return ComplexMatrix::identity(d);
    }
    if (spec == "random") {
        return haar_special_unitary(d, rng);
    }
    if (spec.rfind("axis:", 0) == 0) {
        if (d != 2) {
            throw Error(ErrorKind::DimError, "axis-angle targets need d = 2");
        }
        double x = 0, y = 0, z = 0, theta = 0;
        if (std::sscanf(spec.c_str(), "axis:%lf,%lf,%lf:%lf", &x, &y, &z, &theta) != 4) {
            throw Error(ErrorKind::SchemaError, "axis target must look like axis:x,y,z:theta");
        }
        double n = std::sqrt(x * x + y * y + z * z);
        if (n == 0) {
            throw Error(ErrorKind::SchemaError, "axis must be non-zero");
        }
        auto h = ComplexMatrix::from_row_major(
            std::vector<Complex>{z / n, Complex(x / n, -y / n), Complex(x / n, y / n), -z / n});
        return matrix_exp_tangent(h, -theta / 2.0, Ambient::SU);
    }
    nlohmann::json lit;
    try {
        lit = nlohmann::json::parse(spec);
    } catch (const nlohmann::json::exception &) {
        throw Error(ErrorKind::SchemaError, "unrecognized target '" + spec + "'");
    }
    out = parse_matrix_literal(lit, d);
    gs.matrix_class().require(out, "target");
    return out;
}

std::vector<ComplexMatrix> probe_set(std::size_t dim, std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<ComplexMatrix> out;
    for (std::size_t k = 0; k < count; k++) {
        out.push_back(haar_special_unitary(dim, rng));
    }
    return out;
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path);
    if (!out || !(out << text)) {
        throw Error(ErrorKind::IoError, "cannot write " + path);
    }
}

EpsNet plain_net(const GateSet &gs, const std::string &path, std::size_t length) {
    if (!path.empty()) {
        return load_net(gs, path);
    }
    return build_net(gs, length, 1'000'000);
}

// ---------------------------------------------------------------------------

struct Common {
    std::string gateset;
    std::string net;
    std::uint64_t seed = 1;
};

int cmd_validate(const Common &c) {
    GateSet gs = load_gateset(c.gateset);
    const FiniteGroupRep &rep = gs.irrep();
    std::cout << "gateset      " << c.gateset << "\n";
    std::cout << "fingerprint  " << gs.fingerprint() << "\n";
    std::cout << "mode         " << mode_name(gs.mode()) << "\n";
    std::cout << "d            " << gs.dim() << "\n";
    std::cout << "|G|          " << rep.order() << "\n";
    std::cout << "projective   " << (rep.projective() ? "true" : "false") << "\n";
    double eps0 = eps0_constant(gs);
    std::cout << "eps0         " << fmt(eps0) << " (1/" << fmt(1.0 / eps0) << ")\n";
    std::cout << "C            " << fmt(contraction_constant(rep)) << "\n";
    std::cout << "irreducible  " << (rep.certificate().irreducible ? "true" : "false")
              << " (residual " << fmt(rep.certificate().worst_residual) << ")\n";
    if (rep.projective()) {
        FiniteGroupRep cover = central_extend(rep);
        std::cout << "cover |G'|   " << cover.order() << "\n";
        std::cout << "schur        " << fmt(check_schur_orthogonality(cover)) << " (on the central extension)\n";
    } else {
        std::cout << "schur        " << fmt(check_schur_orthogonality(rep)) << "\n";
    }
    std::cout << "generators  ";
    for (std::size_t i = 0; i < gs.size(); i++) {
        std::cout << " " << gs.generator(i).name;
    }
    std::cout << "\n";
    if (gs.mode() == Mode::SL) {
        std::cout << "sl_radius    " << fmt(gs.sl_radius()) << "\n";
    }
    return 0;
}

struct NetArgs {
    std::string length = "auto";
    std::size_t budget = 1'000'000;
    std::size_t probes = 200;
    std::size_t max_length = 40;
    bool inverses = false;
    double density = 0.0;
};

int cmd_net(const Common &c, const NetArgs &a) {
    GateSet gs = load_gateset(c.gateset);
    if (c.net.empty()) {
        throw Error(ErrorKind::SchemaError, "--net PATH is required");
    }
    NetBuildOptions opts;
    opts.budget = a.budget;
    NetAlphabet alphabet = a.inverses ? NetAlphabet::with_inverses(gs) : NetAlphabet::plain(gs);
    std::vector<ComplexMatrix> probes = probe_set(gs.dim(), a.probes, c.seed);
    double target_density = a.density > 0 ? a.density : eps0_constant(gs);
    bool automatic = a.length == "auto";
    if (automatic) {
        opts.max_length = a.max_length;
        opts.probes = probes;
        opts.stop_density = target_density;
    } else {
        try {
            opts.max_length = std::stoul(a.length);
        } catch (const std::exception &) {
            throw Error(ErrorKind::SchemaError, "--length must be a number or 'auto'");
        }
    }
    auto start = std::chrono::steady_clock::now();
    EpsNet net = build_net(gs, alphabet, opts);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    double density = measure_density(net, probes);
    net.set_achieved_density(density);
    save_net(net, gs, c.net);
    EpsNet back = load_net(gs, c.net);

    std::cout << "alphabet     " << (a.inverses ? "generators and inverses" : "generators") << "\n";
    std::cout << "l0           " << net.word_length() << "\n";
    std::cout << "words        " << net.size() << "\n";
    std::cout << "density      " << fmt(density) << " over " << probes.size() << " probes (eps0 "
              << fmt(eps0_constant(gs)) << ")\n";
    std::cout << "build_s      " << fmt(seconds) << "\n";
    std::cout << "round_trip   " << (back.size() == net.size() ? "ok" : "MISMATCH") << "\n";
    std::cout << "saved        " << c.net << "\n";
    if (!net.usable()) {
        std::cout << "BudgetExceeded: budget of " << a.budget << " words hit; largest complete l0 is "
                  << net.word_length() << "\n";
        return kExitCompile;
    }
    if (automatic && density > target_density) {
        std::cout << "density target " << fmt(target_density) << " not reached by l0 = " << net.word_length() << "\n";
        return kExitCompile;
    }
    return back.size() == net.size() ? 0 : kExitIo;
}

struct CompileArgs {
    std::string target = "random";
    double epsilon = 1e-3;
    std::string refine_net;
    std::size_t refine_length = 8;
    std::string word_out;
    std::string report_out;
};

int cmd_compile(const Common &c, const CompileArgs &a) {
    GateSet gs = load_gateset(c.gateset);
    Rng rng(c.seed);
    ComplexMatrix target = parse_target(a.target, gs, rng);
    if (c.net.empty()) {
        throw Error(ErrorKind::SchemaError, "--net PATH (a net built with --inverses) is required");
    }
    EpsNet base = load_net(gs, c.net);
    EpsNet refine = plain_net(gs, a.refine_net, a.refine_length);
    CompileReport report = compile(gs, target, a.epsilon, {&base, &refine}, SKParams{});
    nlohmann::json j = report.to_json(gs);
    j["config"] = {{"gateset", c.gateset}, {"net", c.net}, {"target", a.target}, {"seed", c.seed}};
    // Independent re-verification of the emitted word.
    if (report.success) {
        double check = gs.distance(evaluate(gs, report.word), target);
        j["verified_error"] = check;
        if (check > a.epsilon) {
            j["status"] = "failure";
            report.success = false;
        }
    }
    std::string text = j.dump(2) + "\n";
    if (!a.report_out.empty()) {
        write_file(a.report_out, text);
    }
    if (!a.word_out.empty() && report.success) {
        write_file(a.word_out, format_word(gs, report.word) + "\n");
    }
    std::cout << text;
    return report.success ? 0 : kExitCompile;
}

struct RefineArgs {
    std::string gate;
    double epsilon = 1e-6;
    std::size_t length = 8;
    bool naive = false;
    std::size_t naive_cap = 100'000'000;
};

int cmd_refine(const Common &c, const RefineArgs &a) {
    GateSet gs = load_gateset(c.gateset);
    auto index = gs.find(a.gate);
    if (!index) {
        throw Error(ErrorKind::SchemaError, "no generator named '" + a.gate + "'");
    }
    EpsNet net = plain_net(gs, c.net, a.length);
    RefineResult r = refine_inverse(gs, net, *index, a.epsilon);
    std::cout << "k,error,length,contraction_bound,decay_bound,contraction_ok,decay_ok,length_ok";
    if (gs.mode() == Mode::SL) {
        std::cout << ",det_defect,trace_lhs,trace_bound";
    }
    std::cout << "\n";
    for (const auto &s : r.trace) {
        std::cout << s.k << "," << fmt(s.error) << "," << s.length << "," << fmt(s.contraction_bound) << ","
                  << fmt(s.decay_bound) << "," << s.contraction_ok << "," << s.decay_ok << "," << s.length_ok;
        if (gs.mode() == Mode::SL) {
            std::cout << "," << fmt(s.det_defect) << "," << fmt(s.trace_lhs) << "," << fmt(s.trace_bound);
        }
        std::cout << "\n";
    }
    std::cout << "eps0         " << fmt(r.eps0) << "\n";
    std::cout << "depth        " << r.depth << "\n";
    std::cout << "length       " << r.word.length() << "\n";
    std::cout << "achieved     " << fmt(r.achieved) << "\n";
    if (gs.mode() == Mode::SL) {
        std::cout << "conjugated   " << fmt(r.conjugated) << "\n";
        std::cout << "inv_bound    " << fmt(r.inverse_bound) << "\n";
    }
    if (a.naive) {
        NaivePower n = naive_power_inverse(gs, *index, a.epsilon, a.naive_cap);
        std::cout << "naive_power  " << (n.found ? std::to_string(n.power) : ">" + std::to_string(a.naive_cap))
                  << "\n";
    }
    std::cout << "word         " << format_word(gs, r.word.indices()) << "\n";
    return 0;
}

struct BenchArgs {
    std::string epsilons = "1e-2,1e-3,1e-4";
    std::size_t trials = 10;
    std::string csv;
    bool naive = false;
    std::size_t naive_cap = 10'000'000;
    std::string task = "compile";
    std::string gate;
    std::string refine_net;
    std::size_t refine_length = 8;
    unsigned threads = 0;
};

std::string join_trace(const std::vector<RefineStep> &trace, bool lengths) {
    std::string out;
    for (const auto &s : trace) {
        if (!out.empty()) {
            out += ';';
        }
        out += lengths ? std::to_string(s.length) : fmt(s.error);
    }
    return out;
}

int cmd_bench(const Common &c, const BenchArgs &a) {
    GateSet gs = load_gateset(c.gateset);
    std::vector<double> eps = parse_epsilons(a.epsilons);
    std::vector<std::string> rows;
    std::string header;

    if (a.task == "inverse") {
        auto index = gs.find(a.gate);
        if (!index) {
            throw Error(ErrorKind::SchemaError, "--gate must name a generator for the inverse task");
        }
        EpsNet net = plain_net(gs, c.net, a.refine_length);
        header = "epsilon,status,length,achieved,depth,eps_k,l_k" + std::string(a.naive ? ",naive_length" : "") +
                 ",seconds";
        for (double e : eps) {
            auto start = std::chrono::steady_clock::now();
            std::ostringstream row;
            row << fmt(e) << ",";
            try {
                RefineResult r = refine_inverse(gs, net, *index, e);
                row << "success," << r.word.length() << "," << fmt(r.achieved) << "," << r.depth << ","
                    << join_trace(r.trace, false) << "," << join_trace(r.trace, true);
            } catch (const Error &err) {
                row << "failure:" << error_kind_name(err.kind()) << ",,,,,";
            }
            if (a.naive) {
                NaivePower n = naive_power_inverse(gs, *index, e, a.naive_cap);
                row << "," << (n.found ? std::to_string(n.power) : ">" + std::to_string(a.naive_cap));
            }
            row << "," << fmt(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
            rows.push_back(row.str());
        }
    } else if (a.task == "compile") {
        if (c.net.empty()) {
            throw Error(ErrorKind::SchemaError, "--net PATH (a net built with --inverses) is required");
        }
        EpsNet base = load_net(gs, c.net);
        EpsNet refine = plain_net(gs, a.refine_net, a.refine_length);
        struct Job {
            std::size_t trial;
            double epsilon;
            ComplexMatrix target;
        };
        std::vector<Job> jobs;
        Rng rng(c.seed);
        for (std::size_t t = 0; t < a.trials; t++) {
            ComplexMatrix target = haar_special_unitary(gs.dim(), rng);
            for (double e : eps) {
                jobs.push_back({t, e, target});
            }
        }
        header = "trial,epsilon,status,length,measured_error,base_length,inverse_occurrences,eps_prime,eps_k,l_k" +
                 std::string(a.naive ? ",naive_length" : "") + ",seconds";
        rows.resize(jobs.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (std::size_t j = next++; j < jobs.size(); j = next++) {
                const Job &job = jobs[j];
                CompileReport r = compile(gs, job.target, job.epsilon, {&base, &refine}, SKParams{});
                std::ostringstream row;
                // Every success row is re-verified here, independently of compile().
                bool ok = r.success && gs.distance(evaluate(gs, r.word), job.target) <= job.epsilon;
                row << job.trial << "," << fmt(job.epsilon) << ","
                    << (ok ? std::string("success") : "failure") << "," << r.word.size() << ","
                    << fmt(r.measured_error) << "," << r.base_length << "," << r.inverse_occurrences << ","
                    << fmt(r.eps_prime) << ",";
                std::string ek, lk;
                std::size_t naive_total = 0;
                bool naive_ok = true;
                for (const auto &use : r.inverses) {
                    std::string name = gs.generator(use.generator).name;
                    ek += (ek.empty() ? "" : "|") + name + ":" + join_trace(use.trace, false);
                    lk += (lk.empty() ? "" : "|") + name + ":" + join_trace(use.trace, true);
                    if (a.naive) {
                        NaivePower n = naive_power_inverse(gs, use.generator, r.eps_prime, a.naive_cap);
                        naive_ok = naive_ok && n.found;
                        naive_total += n.power * use.occurrences;
                    }
                }
                row << ek << "," << lk;
                if (a.naive) {
                    std::size_t direct = r.word.size();
                    for (const auto &use : r.inverses) {
                        direct -= use.length * use.occurrences;
                    }
                    row << ","
                        << (naive_ok ? std::to_string(direct + naive_total) : ">" + std::to_string(a.naive_cap));
                }
                row << "," << fmt(r.seconds);
                rows[j] = row.str();
            }
        };
        unsigned n = a.threads ? a.threads : std::max(1u, std::thread::hardware_concurrency());
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < n; k++) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    } else {
        throw Error(ErrorKind::SchemaError, "--task must be compile or inverse");
    }

    std::ostringstream csv;
    csv << "# gateset=" << c.gateset << " fingerprint=" << gs.fingerprint() << " seed=" << c.seed
        << " task=" << a.task << "\n";
    csv << header << "\n";
    for (const auto &r : rows) {
        csv << r << "\n";
    }
    if (a.csv.empty()) {
        std::cout << csv.str();
    } else {
        write_file(a.csv, csv.str());
        std::cout << "wrote " << rows.size() << " rows to " << a.csv << "\n";
    }
    return 0;
}

struct ScanArgs {
    std::string group = "s3";
    std::size_t samples = 10;
    std::string csv;
};

int cmd_scan(const Common &c, const ScanArgs &a) {
    std::optional<FiniteGroupRep> rep;
    if (!c.gateset.empty()) {
        rep = load_gateset(c.gateset).irrep();
    } else {
        auto tag = parse_builtin_group(a.group);
        if (!tag) {
            throw Error(ErrorKind::SchemaError, "unknown group '" + a.group + "'");
        }
        rep = build_builtin(*tag, 3);
    }
    Rng rng(c.seed);
    OrderingScan scan = scan_orderings(*rep, a.samples, rng);
    std::ostringstream csv;
    csv << "# seed=" << c.seed << " samples=" << a.samples << " median=" << fmt_full(scan.median) << "\n";
    csv << "ordering,coefficient,candidate\n";
    std::size_t candidates = 0;
    for (const auto &row : scan.rows) {
        std::string order;
        for (std::size_t g : row.order) {
            order += (order.empty() ? "" : " ") + rep->name(g);
        }
        order += " " + rep->name(0);
        csv << order << "," << fmt_full(row.coefficient) << "," << (row.candidate ? 1 : 0) << "\n";
        candidates += row.candidate ? 1 : 0;
    }
    if (a.csv.empty()) {
        std::cout << csv.str();
    } else {
        write_file(a.csv, csv.str());
    }
    std::cerr << scan.rows.size() << " orderings, " << candidates << " with vanishing second-order term\n";
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Inverse-free Solovay-Kitaev compiler over irreps of finite groups"};
    app.require_subcommand(1);
    Common common;
    std::string mode;
    auto add_common = [&](CLI::App *sub, bool need_gateset) {
        auto *opt = sub->add_option("--gateset", common.gateset, "Gate-set JSON file");
        if (need_gateset) {
            opt->required();
        }
        sub->add_option("--seed", common.seed, "Seed for random targets and probes");
        sub->add_option("--mode", mode, "Expected mode (su|sl); checked against the file")
            ->check(CLI::IsMember({"su", "sl"}));
    };

    auto *validate = app.add_subcommand("validate", "Check a gate set and print its constants");
    add_common(validate, true);

    NetArgs net_args;
    auto *net = app.add_subcommand("net", "Build and cache a net");
    add_common(net, true);
    net->add_option("--net", common.net, "Output path")->required();
    net->add_option("--length", net_args.length, "Word length l0, or 'auto'");
    net->add_option("--budget", net_args.budget, "Maximum stored words");
    net->add_option("--probes", net_args.probes, "Random probes for the density estimate");
    net->add_option("--max-length", net_args.max_length, "Cap for auto mode");
    net->add_option("--density", net_args.density, "Target density for auto mode (default eps0)");
    net->add_flag("--inverses", net_args.inverses, "Include inverses of the extra gates (base compiler net)");

    CompileArgs compile_args;
    auto *comp = app.add_subcommand("compile", "Compile a target into an inverse-free word");
    add_common(comp, true);
    comp->add_option("--net", common.net, "Cached net over generators and inverses")->required();
    comp->add_option("--target", compile_args.target, "identity | random | axis:x,y,z:theta | matrix literal");
    comp->add_option("--epsilon", compile_args.epsilon, "Requested accuracy");
    comp->add_option("--refine-net", compile_args.refine_net, "Cached net over generators only");
    comp->add_option("--refine-length", compile_args.refine_length, "l0 of the refinement net when built here");
    comp->add_option("--word", compile_args.word_out, "Write the word here");
    comp->add_option("--report", compile_args.report_out, "Write the JSON report here");

    RefineArgs refine_args;
    auto *ref = app.add_subcommand("refine-inverse", "Approximate the inverse of one gate over the gate set");
    add_common(ref, true);
    ref->add_option("--gate", refine_args.gate, "Generator name")->required();
    ref->add_option("--epsilon", refine_args.epsilon, "Target accuracy eps'");
    ref->add_option("--net", common.net, "Cached net over generators only");
    ref->add_option("--length", refine_args.length, "l0 of the net when built here");
    ref->add_flag("--naive-compare", refine_args.naive, "Also run the power-of-U baseline");

    BenchArgs bench_args;
    auto *bench = app.add_subcommand("bench", "Seeded benchmark runs written as CSV");
    add_common(bench, true);
    bench->add_option("--net", common.net, "Cached net (with inverses for --task compile)");
    bench->add_option("--epsilon", bench_args.epsilons, "Comma-separated accuracies");
    bench->add_option("--trials", bench_args.trials, "Random targets per accuracy");
    bench->add_option("--csv", bench_args.csv, "Output path (stdout if omitted)");
    bench->add_flag("--naive-compare", bench_args.naive, "Add the power-of-U baseline column");
    bench->add_option("--naive-cap", bench_args.naive_cap, "Largest power tried by the baseline");
    bench->add_option("--task", bench_args.task, "compile | inverse")->check(CLI::IsMember({"compile", "inverse"}));
    bench->add_option("--gate", bench_args.gate, "Generator for --task inverse");
    bench->add_option("--refine-net", bench_args.refine_net, "Cached net over generators only");
    bench->add_option("--refine-length", bench_args.refine_length, "l0 of the refinement net when built here");
    bench->add_option("--threads", bench_args.threads, "Worker threads (default: hardware)");

    ScanArgs scan_args;
    auto *scan = app.add_subcommand("scan-orderings", "Fit the second-order term for every product ordering");
    add_common(scan, false);
    scan->add_option("--group", scan_args.group, "Builtin group when no gate set is given");
    scan->add_option("--samples", scan_args.samples, "Random generators per ordering");
    scan->add_option("--csv", scan_args.csv, "Output path (stdout if omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!mode.empty() && !common.gateset.empty()) {
            GateSet gs = load_gateset(common.gateset);
            if (mode_name(gs.mode()) != mode) {
                throw Error(ErrorKind::SchemaError, "gate set is in " + std::string(mode_name(gs.mode())) +
                                                        " mode, --mode asked for " + mode);
            }
        }
        if (validate->parsed()) {
            return cmd_validate(common);
        }
        if (net->parsed()) {
            return cmd_net(common, net_args);
        }
        if (comp->parsed()) {
            return cmd_compile(common, compile_args);
        }
        if (ref->parsed()) {
            return cmd_refine(common, refine_args);
        }
        if (bench->parsed()) {
            return cmd_bench(common, bench_args);
        }
        if (scan->parsed()) {
            return cmd_scan(common, scan_args);
        }
    } catch (const Error &e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e.kind());
    }
    return 0;
}
