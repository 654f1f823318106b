// Copyright 2026 The qlrc Authors
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

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qlrc/asymptotic.hpp"
#include "qlrc/certificate.hpp"
#include "qlrc/css.hpp"
#include "qlrc/errors.hpp"
#include "qlrc/families.hpp"
#include "qlrc/locality.hpp"

using namespace qlrc;

namespace {

struct Options {
    std::optional<std::uint64_t> budget;
    std::optional<unsigned> threads;
    std::string config;
    std::string out;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::uint64_t parse_count(const std::string& v, const std::string& key) {
    try {
        std::size_t used = 0;
        const auto x = std::stoull(v, &used, 0);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw InputError("config: \"" + key + "\" needs a non-negative integer, got \"" + v + "\"");
    }
}

// Precedence: command-line flag, then config file, then QLRC_THREADS for
// threads, then the defaults.
SearchLimits resolve_limits(const Options& opt) {
    SearchLimits limits;
    std::optional<unsigned> threads;
    if (!opt.config.empty()) {
        std::ifstream in(opt.config);
        if (!in) throw InputError("cannot read config file " + opt.config);
        std::string line;
        for (int no = 1; std::getline(in, line); ++no) {
            line = trim(line.substr(0, line.find('#')));
            if (line.empty()) continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw InputError(opt.config + ":" + std::to_string(no) + ": expected key=value");
            const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
            if (key == "budget") limits.budget = parse_count(value, key);
            else if (key == "threads") threads = static_cast<unsigned>(parse_count(value, key));
            else throw InputError(opt.config + ":" + std::to_string(no) + ": unknown key \"" + key + "\"");
        }
    }
    if (!threads) {
        if (const char* env = std::getenv("QLRC_THREADS"); env && *env)
            threads = static_cast<unsigned>(parse_count(env, "QLRC_THREADS"));
    }
    if (opt.budget) limits.budget = *opt.budget;
    if (opt.threads) threads = opt.threads;
    if (threads) limits.threads = std::max(1u, *threads);
    return limits;
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw InputError("cannot write " + opt.out);
    f << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Json parse_json(const std::string& text, const std::string& path) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()), work_(oracle_work()) {}
    void stamp(Certificate& c) const {
        c.wall_us = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start_).count());
        const auto now = oracle_work();
        c.work = {now.codewords - work_.codewords, now.supports - work_.supports};
    }

private:
    std::chrono::steady_clock::time_point start_;
    OracleWork work_;
};

std::string describe(const CssCode& q) {
    return "[[" + std::to_string(q.n) + ", " + std::to_string(q.kappa) + ", " + std::to_string(q.delta) + "]]_" +
           std::to_string(q.q());
}

int finish(const Options& opt, const Certificate& c) {
    emit(opt, canonical_dump(to_json(c)));
    std::size_t violated = 0, skipped = 0;
    for (const auto& r : c.reports) {
        violated += r.verdict == Verdict::violated;
        skipped += r.verdict == Verdict::skipped;
    }
    std::cerr << c.construction << ": " << c.reports.size() << " reports, " << violated << " violated, " << skipped
              << " skipped\n";
    for (const auto& r : c.reports)
        if (r.verdict == Verdict::violated)
            std::cerr << "  violated " << to_string(r.id) << ": bound " << r.bound << ", achieved " << r.achieved << "\n";
    if (!c.complete) return 3;
    return violated == 0 ? 0 : 4;
}

// ---------------------------------------------------------------------------

struct BuildArgs {
    std::string family;
    std::optional<std::uint64_t> q;
    std::optional<unsigned> d, u, r, l;
};

unsigned need(const std::optional<unsigned>& v, const char* flag, const std::string& family) {
    if (!v) throw InputError(family + " needs " + flag);
    return *v;
}

int cmd_build(const Options& opt, const BuildArgs& a) {
    const SearchLimits limits = resolve_limits(opt);
    if (!a.q) throw InputError(a.family + " needs --q");
    Stopwatch sw;
    std::optional<FamilyResult> res;
    if (a.family == "grs-pair")
        res = css_grs_pair_build(*a.q, need(a.d, "--d", a.family), need(a.u, "--u", a.family),
                                 need(a.r, "--r", a.family), std::nullopt, limits);
    else if (a.family == "cyclic-1")
        res = cyclic_family_one(*a.q, need(a.u, "--u", a.family), need(a.r, "--r", a.family),
                                need(a.l, "--l", a.family), limits);
    else
        res = cyclic_family_two(*a.q, need(a.u, "--u", a.family), need(a.r, "--r", a.family), limits);
    Certificate c = family_certificate(*res);
    sw.stamp(c);
    std::cerr << describe(res->certification.code) << " with locality " << res->certification.locality.r << "\n";
    return finish(opt, c);
}

struct CertifyArgs {
    std::vector<std::string> files;
    std::optional<unsigned> r;
    bool quantum = false;
    std::optional<unsigned> delta;
};

int certify_classical(const Options& opt, const SearchLimits& limits, const LinearCode& input,
                      std::optional<unsigned> r) {
    Stopwatch sw;
    Certificate c;
    c.construction = "classical";
    c.parameters = {{"n", input.length()}, {"k", input.dimension()}, {"q", input.field()->order()}};
    if (r) c.parameters["r"] = *r;
    int status = 0;
    try {
        c.codes = {with_certified_distance(input, limits)};
    } catch (const BudgetExceeded& e) {
        c.codes = {input};
        c.complete = false;
        c.notes.push_back(std::string("distance: ") + e.what());
    }
    if (c.complete) {
        const LinearCode& code = c.codes.front();
        const LocalityResult lr = r ? locality_certificate(code, *r, limits) : minimal_locality(code, limits);
        if (lr.outcome == LocalityOutcome::certified) {
            c.locality = {*lr.certificate};
            if (code.is_degenerate())
                c.notes.push_back("bounds are not evaluated for codes of dimension 0 or n");
            else
                c.reports = classify_classical(code, *lr.certificate);
        } else if (lr.outcome == LocalityOutcome::inconclusive) {
            c.complete = false;
            c.notes.push_back("locality search stopped at the budget after " + std::to_string(lr.evaluated) +
                              " steps");
        } else {
            c.notes.push_back("locality refused: coordinate " +
                              (lr.uncovered ? std::to_string(*lr.uncovered) : std::string("?")) +
                              " has no repair group" + (r ? " of size <= " + std::to_string(*r) : std::string()));
            status = 2;
        }
    }
    sw.stamp(c);
    for (const auto& n : c.notes) std::cerr << n << "\n";
    const int code = finish(opt, c);
    return code != 0 ? code : status;
}

int certify_quantum(const Options& opt, const SearchLimits& limits, const LinearCode& c1, const LinearCode& c2,
                    const CertifyArgs& a) {
    Stopwatch sw;
    auto partial = [&](CssCode q, std::string why) {
        Certificate c;
        c.construction = "css";
        if (a.r) c.parameters["r"] = *a.r;
        c.complete = false;
        c.quantum = std::move(q);
        c.notes.push_back(std::move(why));
        sw.stamp(c);
        std::cerr << c.notes.back() << "\n";
        return finish(opt, c);
    };
    std::optional<CssCode> q;
    try {
        q = css_compose(c1, c2, limits);
    } catch (const BudgetExceeded& e) {
        return partial(css_claimed(c1, c2, a.delta.value_or(0)), std::string("distance: ") + e.what());
    }
    const QuantumLocalityResult lr = a.r ? quantum_locality_certificate(*q, *a.r, limits)
                                         : minimal_quantum_locality(*q, limits);
    if (lr.outcome == LocalityOutcome::inconclusive)
        return partial(*q, "quantum locality search stopped at the budget after " + std::to_string(lr.evaluated) +
                               " steps");
    if (lr.outcome == LocalityOutcome::refused) {
        Certificate c;
        c.construction = "css";
        if (a.r) c.parameters["r"] = *a.r;
        c.quantum = *q;
        c.notes.push_back("quantum locality refused: coordinate " +
                          (lr.uncovered ? std::to_string(*lr.uncovered) : std::string("?")) + " has no witness pair");
        sw.stamp(c);
        std::cerr << c.notes.back() << "\n";
        finish(opt, c);
        return 2;
    }
    Certificate c = css_certificate(certify_css(*q, *lr.certificate));
    sw.stamp(c);
    std::cerr << describe(*q) << " (" << to_string(q->purity) << ") with locality " << lr.certificate->r << "\n";
    return finish(opt, c);
}

int cmd_certify(const Options& opt, const CertifyArgs& a) {
    const SearchLimits limits = resolve_limits(opt);
    if (a.files.empty() || a.files.size() > 2) throw InputError("certify takes one or two code files");
    std::vector<LinearCode> codes;
    for (const auto& f : a.files) codes.push_back(code_from_user_json(parse_json(read_file(f), f)));
    if (a.files.size() == 1 && !a.quantum) return certify_classical(opt, limits, codes[0], a.r);
    return certify_quantum(opt, limits, codes[0], codes.size() == 2 ? codes[1] : codes[0], a);
}

// ---------------------------------------------------------------------------

struct BoundsArgs {
    std::string kind;
    std::optional<std::int64_t> n, k, kappa, d, delta, k1, k2;
    std::optional<unsigned> r;
    std::optional<std::uint64_t> q;
    double step = 0.01;
    double max = 0.5;
};

std::string report_line(const BoundReport& r) {
    std::ostringstream s;
    s << to_string(r.id) << ": bound " << r.bound << ", achieved " << r.achieved << " (" << to_string(r.sense)
      << "), " << to_string(r.verdict) << ", oracle " << to_string(r.oracle) << "\n";
    return s.str();
}

int cmd_bounds(const Options& opt, const BoundsArgs& a) {
    if (a.kind == "asymptotic") {
        if (!a.r || !a.q) throw InputError("bounds asymptotic needs --r and --q");
        emit(opt, curves_csv(emit_curves(*a.r, *a.q, a.step, a.max)));
        return 0;
    }
    if (!a.n || !a.r) throw InputError("bounds eval needs --n and --r");
    if (*a.r < 1 || *a.n < 1) throw InputError("--n and --r must be positive");
    const std::int64_t n = *a.n, r = *a.r;
    std::string out;
    if (a.kappa) {
        out += "distance form: 2 delta <= " + std::to_string(q_singleton_rhs(n, *a.kappa, r)) + ", so delta <= " +
               std::to_string(q_singleton_bound(n, *a.kappa, r)) + "\n";
        if (a.delta)
            out += report_line(make_report(BoundId::q_singleton, {{"n", n}, {"kappa", *a.kappa}, {"r", r}},
                                           q_singleton_rhs(n, *a.kappa, r), 2 * *a.delta, Sense::at_most,
                                           Provider::exact));
        out += "dimension form over delta:\ndelta,kappa_max\n";
        for (std::int64_t dl = 1; dl <= n; ++dl) {
            const auto b = q_singleton_dim_bound(n, dl, r);
            if (b < 0) break;
            out += std::to_string(dl) + "," + std::to_string(b) + "\n";
        }
    }
    if (a.delta) {
        out += "dimension form: kappa <= " + std::to_string(q_singleton_dim_bound(n, *a.delta, r)) + "\n";
        if (a.kappa)
            out += report_line(make_report(BoundId::q_singleton_dim, {{"n", n}, {"delta", *a.delta}, {"r", r}},
                                           q_singleton_dim_bound(n, *a.delta, r), *a.kappa, Sense::at_most,
                                           Provider::exact));
        if (a.k1 && a.k2 && a.q && a.kappa) {
            const auto k1 = static_cast<unsigned>(*a.k1), k2 = static_cast<unsigned>(*a.k2);
            const auto oracle = preferred_oracle(*a.q, std::max(k1, k2));
            out += report_line(make_report(
                BoundId::q_cm, {{"k1", *a.k1}, {"k2", *a.k2}, {"delta", *a.delta}, {"r", r},
                                {"q", static_cast<std::int64_t>(*a.q)}},
                q_cm_sum(*a.q, k1, k2, static_cast<unsigned>(*a.delta), *a.r, oracle), 2 * *a.kappa, Sense::at_most,
                oracle == KoptOracle::exact ? Provider::exact : Provider::upper));
        }
    }
    if (a.k) {
        out += "singleton-like: d <= " + std::to_string(singleton_like_bound(n, *a.k, r)) + "\n";
        if (a.d)
            out += report_line(make_report(BoundId::c_singleton, {{"n", n}, {"k", *a.k}, {"r", r}},
                                           singleton_like_bound(n, *a.k, r), *a.d, Sense::at_most, Provider::exact));
        if (a.d && a.q) {
            const auto oracle = preferred_oracle(*a.q, static_cast<unsigned>(n));
            out += report_line(make_report(
                BoundId::c_cm, {{"n", n}, {"d", *a.d}, {"r", r}, {"q", static_cast<std::int64_t>(*a.q)}},
                cm_bound(*a.q, static_cast<unsigned>(n), static_cast<unsigned>(*a.d), *a.r, oracle), *a.k,
                Sense::at_most, oracle == KoptOracle::exact ? Provider::exact : Provider::upper));
        }
    }
    if (out.empty()) throw InputError("bounds eval needs at least one of --kappa, --delta, --k");
    emit(opt, out);
    return 0;
}

// ---------------------------------------------------------------------------

int cmd_verify(const Options& opt, const std::string& path) {
    const std::string text = read_file(path);
    const Certificate c = certificate_from_json(parse_json(text, path));
    Revalidation v = revalidate(c);
    if (canonical_dump(to_json(c)) != text) v.failures.push_back("file is not in canonical form");
    std::string out;
    for (const auto& f : v.failures) out += "FAIL " + f + "\n";
    out += v.ok() ? "verified " + std::to_string(c.reports.size()) + " reports\n" : "verification failed\n";
    emit(opt, out);
    return v.ok() ? 0 : 4;
}

int cmd_selftest(const Options& opt) {
    const SearchLimits limits = resolve_limits(opt);
    struct Case {
        const char* name;
        FamilyResult (*build)(const SearchLimits&);
    };
    const Case cases[] = {
        {"grs-pair q=4 d=2 u=1 r=3", [](const SearchLimits& l) { return css_grs_pair_build(4, 2, 1, 3, std::nullopt, l); }},
        {"grs-pair q=7 d=3 u=1 r=4", [](const SearchLimits& l) { return css_grs_pair_build(7, 3, 1, 4, std::nullopt, l); }},
        {"cyclic-1 q=13 u=1 r=3 l=1", [](const SearchLimits& l) { return cyclic_family_one(13, 1, 3, 1, l); }},
        {"cyclic-2 q=13 u=2 r=5", [](const SearchLimits& l) { return cyclic_family_two(13, 2, 5, l); }},
    };
    std::string out;
    bool all = true;
    for (const auto& tc : cases) {
        std::string why;
        try {
            const FamilyResult res = tc.build(limits);
            const Certificate c = family_certificate(res);
            const std::string text = canonical_dump(to_json(c));
            const Certificate back = certificate_from_json(Json::parse(text));
            const Revalidation v = revalidate(back);
            if (!res.claims_hold()) why = "claims do not hold";
            else if (!v.ok()) why = v.failures.front();
            else if (canonical_dump(to_json(back)) != text) why = "round trip changed the certificate";
        } catch (const Error& e) {
            why = e.what();
        }
        all = all && why.empty();
        out += (why.empty() ? "PASS " : "FAIL ") + std::string(tc.name) + (why.empty() ? "" : ": " + why) + "\n";
    }
    emit(opt, out);
    return all ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Locally recoverable classical and CSS quantum codes: construction and certification."};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--budget", opt.budget, "Enumeration budget per oracle (default 2^28)");
    app.add_option("--threads", opt.threads, "Worker threads (default QLRC_THREADS or 1)");
    app.add_option("--config", opt.config, "key=value file with budget and threads")->check(CLI::ExistingFile);
    app.add_option("--out", opt.out, "Write output here instead of stdout");

    BuildArgs build;
    auto* b = app.add_subcommand("build", "Build a code family and write its certificate");
    b->add_option("family", build.family, "grs-pair, cyclic-1 or cyclic-2")
        ->required()
        ->check(CLI::IsMember({"grs-pair", "cyclic-1", "cyclic-2"}));
    b->add_option("--q", build.q, "Field order");
    b->add_option("--d", build.d, "Target distance (grs-pair)");
    b->add_option("--u", build.u, "Number of local groups");
    b->add_option("--r", build.r, "Locality");
    b->add_option("--l", build.l, "Run length of the BCH part (cyclic-1)");

    CertifyArgs certify;
    auto* c = app.add_subcommand("certify", "Certify one classical code or a CSS pair from JSON files");
    c->add_option("files", certify.files, "One or two code files")->required()->check(CLI::ExistingFile);
    c->add_option("--r", certify.r, "Locality to certify (default: the smallest found)");
    c->add_flag("--quantum", certify.quantum, "Treat a single file as C1 = C2");
    c->add_option("--delta", certify.delta, "Claimed distance recorded when the budget stops the oracles");

    BoundsArgs bounds;
    auto* bo = app.add_subcommand("bounds", "Evaluate bounds or emit asymptotic curves");
    bo->add_option("kind", bounds.kind, "eval or asymptotic")->required()->check(CLI::IsMember({"eval", "asymptotic"}));
    bo->add_option("--n", bounds.n);
    bo->add_option("--k", bounds.k);
    bo->add_option("--kappa", bounds.kappa);
    bo->add_option("--d", bounds.d);
    bo->add_option("--delta", bounds.delta);
    bo->add_option("--k1", bounds.k1);
    bo->add_option("--k2", bounds.k2);
    bo->add_option("--r", bounds.r);
    bo->add_option("--q", bounds.q);
    bo->add_option("--step", bounds.step, "Grid step for asymptotic curves");
    bo->add_option("--max", bounds.max, "Largest relative distance for asymptotic curves");

    auto* st = app.add_subcommand("selftest", "Build, serialize and re-validate the small family instances");

    std::string verify_path;
    auto* v = app.add_subcommand("verify", "Re-validate a certificate file without searching");
    v->add_option("certificate", verify_path)->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*b) return cmd_build(opt, build);
        if (*c) return cmd_certify(opt, certify);
        if (*bo) return cmd_bounds(opt, bounds);
        if (*st) return cmd_selftest(opt);
        if (*v) return cmd_verify(opt, verify_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 1;
}
