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

#include "qlrc/certificate.hpp"

#include <algorithm>
#include <initializer_list>
#include <numeric>

#include "qlrc/errors.hpp"

namespace qlrc {

namespace {

const Json& member(const Json& j, const char* key) {
    if (!j.is_object()) throw InputError(std::string("expected an object holding \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string("missing key \"") + key + "\"");
    return *it;
}

std::int64_t as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

std::int64_t int_at(const Json& j, const char* key) { return as_int(member(j, key), key); }

std::uint64_t uint_at(const Json& j, const char* key) {
    const auto v = int_at(j, key);
    if (v < 0) throw InputError(std::string(key) + " must be non-negative");
    return static_cast<std::uint64_t>(v);
}

bool bool_at(const Json& j, const char* key) {
    const Json& v = member(j, key);
    if (!v.is_boolean()) throw InputError(std::string(key) + " must be a boolean");
    return v.get<bool>();
}

std::string string_at(const Json& j, const char* key) {
    const Json& v = member(j, key);
    if (!v.is_string()) throw InputError(std::string(key) + " must be a string");
    return v.get<std::string>();
}

const Json& array_at(const Json& j, const char* key) {
    const Json& v = member(j, key);
    if (!v.is_array()) throw InputError(std::string(key) + " must be an array");
    return v;
}

Word word_from(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array of integers");
    Word w;
    w.reserve(j.size());
    for (const auto& x : j) {
        const auto v = as_int(x, what);
        if (v < 0 || v > 0xffffffffLL) throw InputError(std::string(what) + " has an entry out of range");
        w.push_back(static_cast<Elem>(v));
    }
    return w;
}

std::vector<std::uint32_t> u32_list(const Json& j, const char* what) { return word_from(j, what); }

template <class E>
E parse_enum(const std::string& s, std::initializer_list<E> values, const char* what) {
    for (E e : values)
        if (to_string(e) == s) return e;
    throw InputError(std::string("unknown ") + what + " \"" + s + "\"");
}

Matrix rows_matrix(const FieldPtr& f, const Json& rows, std::size_t n, const char* what) {
    if (!rows.is_array()) throw InputError(std::string(what) + " must be an array of rows");
    std::vector<Word> out;
    for (const auto& r : rows) {
        Word w = word_from(r, what);
        if (w.size() != n) throw InputError(std::string(what) + " row has length " + std::to_string(w.size()) +
                                            ", expected " + std::to_string(n));
        for (Elem e : w)
            if (!f->valid(e)) throw InputError(std::string(what) + " entry " + std::to_string(e) + " is not in " +
                                               f->name());
        out.push_back(std::move(w));
    }
    return Matrix::from_rows(f, out, n);
}

Json matrix_rows(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row_word(i));
    return out;
}

Json params_json(const FamilyParameters& p) {
    return {{"n", p.n}, {"kappa", p.kappa}, {"delta", p.delta}, {"r", p.r}};
}

std::map<std::string, std::int64_t> int_map(const Json& j, const char* what) {
    if (!j.is_object()) throw InputError(std::string(what) + " must be an object");
    std::map<std::string, std::int64_t> out;
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = as_int(it.value(), what);
    return out;
}

std::vector<std::string> string_list(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& s : j) {
        if (!s.is_string()) throw InputError(std::string(what) + " must hold strings");
        out.push_back(s.get<std::string>());
    }
    return out;
}

CssCode css_from_json(const Json& j) {
    CssCode q{code_from_json(member(j, "C1")), code_from_json(member(j, "C2"))};
    if (!same_field(q.c1.field(), q.c2.field()) || q.c1.length() != q.c2.length())
        throw InputError("C1 and C2 must share the field and the length");
    if (!q.c1.cached_distance() || !q.c2.cached_distance()) throw InputError("C1 and C2 need distance records");
    q.n = q.c1.length();
    q.kappa = uint_at(j, "kappa");
    q.same_codes = q.c1 == q.c2;
    const Json& d = member(j, "delta");
    q.delta = static_cast<unsigned>(uint_at(d, "value"));
    q.delta_provenance =
        parse_enum(string_at(d, "provenance"), {Provenance::claimed, Provenance::certified}, "provenance");
    const Json& rel = array_at(d, "relative");
    const Json& wit = array_at(d, "witnesses");
    const Json& met = array_at(d, "methods");
    if (rel.size() != 2 || wit.size() != 2 || met.size() != 2)
        throw InputError("delta needs two relative weights, witnesses and methods");
    for (std::size_t i = 0; i < 2; ++i) {
        q.relative[i] = static_cast<unsigned>(as_int(rel[i], "relative"));
        q.relative_witness[i] = word_from(wit[i], "relative witness");
        if (!met[i].is_string()) throw InputError("method must be a string");
        q.relative_method[i] = parse_enum(met[i].get<std::string>(),
                                          {OracleMethod::enumeration, OracleMethod::support_search}, "method");
    }
    q.purity = parse_enum(string_at(j, "purity"), {Purity::pure, Purity::impure}, "purity");
    return q;
}

OptimalityVerdict optimality_from_json(const Json& j) {
    OptimalityVerdict v;
    v.applicable = bool_at(j, "applicable");
    v.singleton_optimal_1 = bool_at(j, "singleton_optimal_1");
    v.singleton_optimal_2 = bool_at(j, "singleton_optimal_2");
    v.condition_a = bool_at(j, "condition_a");
    v.condition_b = bool_at(j, "condition_b");
    v.distance_form_equality = bool_at(j, "distance_form_equality");
    v.dimension_form_equality = bool_at(j, "dimension_form_equality");
    v.biconditional_holds = bool_at(j, "biconditional_holds");
    v.implication_holds = bool_at(j, "implication_holds");
    v.unequal_distances = bool_at(j, "unequal_distances");
    v.note = string_at(j, "note");
    return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// Serialization

Json to_json(const Field& f) {
    return {{"p", f.characteristic()}, {"m", f.degree()}, {"modulus", f.modulus()}};
}

Json to_json(const LinearCode& c) {
    Json j{{"field", to_json(*c.field())},
           {"n", c.length()},
           {"k", c.dimension()},
           {"generator", matrix_rows(c.generator())},
           {"cached_d", nullptr}};
    if (const auto& d = c.cached_distance())
        j["cached_d"] = {{"value", d->value}, {"provenance", to_string(d->provenance)}, {"witness", d->witness}};
    return j;
}

Json to_json(const LocalityCertificate& cert) {
    Json ws = Json::array();
    for (const auto& w : cert.witnesses)
        ws.push_back({{"coordinate", w.coordinate}, {"word", w.word}, {"weight", w.weight}});
    return {{"r", cert.r}, {"witnesses", std::move(ws)}, {"verified", cert.verified}};
}

Json to_json(const QuantumLocalityCertificate& cert) {
    Json ws = Json::array();
    for (const auto& w : cert.witnesses)
        ws.push_back({{"coordinate", w.coordinate},
                      {"word1", w.word1},
                      {"word2", w.word2},
                      {"scale1", w.scale1},
                      {"scale2", w.scale2},
                      {"union_size", w.union_size}});
    return {{"r", cert.r}, {"witnesses", std::move(ws)}, {"shared", cert.shared}, {"verified", cert.verified}};
}

Json to_json(const BoundReport& r) {
    return {{"id", to_string(r.id)},          {"inputs", r.inputs},
            {"bound", r.bound},               {"achieved", r.achieved},
            {"sense", to_string(r.sense)},    {"verdict", to_string(r.verdict)},
            {"oracle", to_string(r.oracle)},  {"note", r.note}};
}

Json to_json(const DefiningSet& d) { return {{"n", d.n}, {"q", d.q}, {"members", d.members}}; }

Json to_json(const OptimalityVerdict& v) {
    return {{"applicable", v.applicable},
            {"singleton_optimal_1", v.singleton_optimal_1},
            {"singleton_optimal_2", v.singleton_optimal_2},
            {"condition_a", v.condition_a},
            {"condition_b", v.condition_b},
            {"distance_form_equality", v.distance_form_equality},
            {"dimension_form_equality", v.dimension_form_equality},
            {"biconditional_holds", v.biconditional_holds},
            {"implication_holds", v.implication_holds},
            {"unequal_distances", v.unequal_distances},
            {"note", v.note}};
}

Json to_json(const CssCode& q, const QuantumLocalityCertificate* locality) {
    Json methods = Json::array({to_string(q.relative_method[0]), to_string(q.relative_method[1])});
    return {{"C1", to_json(q.c1)},
            {"C2", to_json(q.c2)},
            {"n", q.n},
            {"kappa", q.kappa},
            {"delta",
             {{"value", q.delta},
              {"provenance", to_string(q.delta_provenance)},
              {"relative", Json::array({q.relative[0], q.relative[1]})},
              {"witnesses", Json::array({q.relative_witness[0], q.relative_witness[1]})},
              {"methods", std::move(methods)}}},
            {"purity", to_string(q.purity)},
            {"locality_certificate", locality ? to_json(*locality) : Json(nullptr)}};
}

// ---------------------------------------------------------------------------
// Loading

FieldPtr field_from_json(const Json& j) {
    const auto p = uint_at(j, "p");
    const auto m = uint_at(j, "m");
    if (p > 0xffffffffULL || m == 0 || m > 64) throw InputError("field characteristic or degree out of range");
    const auto modulus = u32_list(member(j, "modulus"), "modulus");
    try {
        return Field::make(static_cast<std::uint32_t>(p), static_cast<unsigned>(m), modulus);
    } catch (const Error& e) {
        throw InputError(std::string("invalid field: ") + e.what());
    }
}

LinearCode code_from_json(const Json& j) {
    const FieldPtr f = field_from_json(member(j, "field"));
    const auto n = uint_at(j, "n");
    const auto k = uint_at(j, "k");
    const Matrix g = rows_matrix(f, member(j, "generator"), n, "generator");
    if (g.rows() != k) throw InputError("generator has " + std::to_string(g.rows()) + " rows, k = " + std::to_string(k));
    LinearCode c = LinearCode::from_generator(g);
    if (!(c.generator() == g)) throw InputError("generator is not in reduced row-echelon form");
    const Json& d = member(j, "cached_d");
    if (d.is_null()) return c;
    DistanceRecord rec;
    rec.value = static_cast<unsigned>(uint_at(d, "value"));
    rec.provenance = parse_enum(string_at(d, "provenance"), {Provenance::claimed, Provenance::certified}, "provenance");
    rec.witness = word_from(member(d, "witness"), "distance witness");
    return c.with_distance(std::move(rec));
}

LinearCode code_from_user_json(const Json& j) {
    FieldPtr f;
    if (j.contains("field")) {
        f = field_from_json(j["field"]);
    } else {
        const auto q = uint_at(j, "q");
        try {
            f = Field::of_order(q);
        } catch (const Error& e) {
            throw InputError(std::string("invalid field order: ") + e.what());
        }
    }
    const bool has_g = j.contains("generator");
    if (has_g == j.contains("parity_check")) throw InputError("give exactly one of \"generator\" and \"parity_check\"");
    const Json& rows = has_g ? j["generator"] : j["parity_check"];
    if (!rows.is_array() || rows.empty() || !rows[0].is_array())
        throw InputError("the matrix must be a non-empty array of rows");
    const std::size_t n = rows[0].size();
    if (j.contains("n") && uint_at(j, "n") != n) throw InputError("\"n\" disagrees with the matrix width");
    const Matrix m = rows_matrix(f, rows, n, has_g ? "generator" : "parity_check");
    return has_g ? LinearCode::from_generator(m) : LinearCode::from_parity_check(m);
}

LocalityCertificate locality_from_json(const Json& j) {
    LocalityCertificate c;
    c.r = static_cast<unsigned>(uint_at(j, "r"));
    c.verified = bool_at(j, "verified");
    for (const auto& w : array_at(j, "witnesses"))
        c.witnesses.push_back({uint_at(w, "coordinate"), word_from(member(w, "word"), "word"), uint_at(w, "weight")});
    return c;
}

QuantumLocalityCertificate quantum_locality_from_json(const Json& j) {
    QuantumLocalityCertificate c;
    c.r = static_cast<unsigned>(uint_at(j, "r"));
    c.shared = bool_at(j, "shared");
    c.verified = bool_at(j, "verified");
    for (const auto& w : array_at(j, "witnesses")) {
        QuantumLocalityWitness x;
        x.coordinate = uint_at(w, "coordinate");
        x.word1 = word_from(member(w, "word1"), "word1");
        x.word2 = word_from(member(w, "word2"), "word2");
        x.scale1 = static_cast<Elem>(uint_at(w, "scale1"));
        x.scale2 = static_cast<Elem>(uint_at(w, "scale2"));
        x.union_size = uint_at(w, "union_size");
        c.witnesses.push_back(std::move(x));
    }
    return c;
}

BoundReport report_from_json(const Json& j) {
    BoundReport r;
    r.id = parse_enum(string_at(j, "id"),
                      {BoundId::c_singleton, BoundId::c_cm, BoundId::q_singleton_dim, BoundId::q_singleton,
                       BoundId::q_cm, BoundId::transfer_distance, BoundId::transfer_dimension,
                       BoundId::transfer_length},
                      "bound id");
    r.inputs = int_map(member(j, "inputs"), "inputs");
    r.bound = int_at(j, "bound");
    r.achieved = int_at(j, "achieved");
    r.sense = parse_enum(string_at(j, "sense"), {Sense::at_most, Sense::at_least}, "sense");
    r.verdict = parse_enum(string_at(j, "verdict"),
                           {Verdict::meets_with_equality, Verdict::satisfied_strict, Verdict::violated,
                            Verdict::skipped},
                           "verdict");
    r.oracle = parse_enum(string_at(j, "oracle"), {Provider::exact, Provider::upper, Provider::skipped}, "oracle");
    r.note = string_at(j, "note");
    return r;
}

// ---------------------------------------------------------------------------
// Certificates

bool Certificate::all_hold() const {
    return std::none_of(reports.begin(), reports.end(), [](const BoundReport& r) { return r.verdict == Verdict::violated; });
}

Certificate family_certificate(const FamilyResult& res) {
    Certificate c = css_certificate(res.certification);
    c.construction = res.family;
    c.parameters = res.inputs;
    c.claimed = res.claimed;
    c.defining_set = res.defining_set;
    c.bch = res.bch;
    c.checks = res.checks;
    return c;
}

Certificate css_certificate(const CssCertification& cert) {
    Certificate c;
    c.construction = "css";
    c.locality = {cert.classical[0], cert.classical[1]};
    c.quantum = cert.code;
    c.quantum_locality = cert.locality;
    c.reports = cert.reports;
    c.optimality = cert.optimality;
    c.parameters = {{"r", cert.locality.r}};
    return c;
}

Json to_json(const Certificate& c) {
    Json codes = Json::array();
    for (const auto& code : c.codes) codes.push_back(to_json(code));
    Json loc = Json::array();
    for (const auto& l : c.locality) loc.push_back(to_json(l));
    Json reports = Json::array();
    for (const auto& r : c.reports) reports.push_back(to_json(r));

    Json field = nullptr;
    if (c.quantum) field = to_json(*c.quantum->c1.field());
    else if (!c.codes.empty()) field = to_json(*c.codes.front().field());

    Json j{{"version", kCertificateVersion},
           {"construction",
            {{"id", c.construction},
             {"parameters", c.parameters},
             {"claimed", c.claimed ? params_json(*c.claimed) : Json(nullptr)}}},
           {"status", c.complete ? "complete" : "inconclusive"},
           {"field", std::move(field)},
           {"codes", std::move(codes)},
           {"locality_certificates", std::move(loc)},
           {"quantum", c.quantum ? to_json(*c.quantum, c.quantum_locality ? &*c.quantum_locality : nullptr)
                                 : Json(nullptr)},
           {"reports", std::move(reports)},
           {"optimality", c.optimality ? to_json(*c.optimality) : Json(nullptr)},
           {"defining_set", c.defining_set ? to_json(*c.defining_set) : Json(nullptr)},
           {"bch", c.bch ? Json{{"lambda", c.bch->lambda}, {"step", c.bch->step}, {"start", c.bch->start}}
                         : Json(nullptr)},
           {"checks", c.checks},
           {"notes", c.notes},
           {"run",
            {{"wall_us", c.wall_us},
             {"codewords_enumerated", c.work.codewords},
             {"supports_examined", c.work.supports}}}};
    return j;
}

Certificate certificate_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("a certificate must be a JSON object");
    if (int_at(j, "version") != kCertificateVersion)
        throw InputError("unsupported certificate version " + std::to_string(int_at(j, "version")));
    Certificate c;
    const Json& con = member(j, "construction");
    c.construction = string_at(con, "id");
    c.parameters = int_map(member(con, "parameters"), "parameters");
    if (const Json& cl = member(con, "claimed"); !cl.is_null())
        c.claimed = FamilyParameters{uint_at(cl, "n"), uint_at(cl, "kappa"), static_cast<unsigned>(uint_at(cl, "delta")),
                                     static_cast<unsigned>(uint_at(cl, "r"))};
    const std::string status = string_at(j, "status");
    if (status != "complete" && status != "inconclusive") throw InputError("unknown status \"" + status + "\"");
    c.complete = status == "complete";
    for (const auto& x : array_at(j, "codes")) c.codes.push_back(code_from_json(x));
    for (const auto& x : array_at(j, "locality_certificates")) c.locality.push_back(locality_from_json(x));
    if (const Json& q = member(j, "quantum"); !q.is_null()) {
        c.quantum = css_from_json(q);
        if (const Json& l = member(q, "locality_certificate"); !l.is_null())
            c.quantum_locality = quantum_locality_from_json(l);
    }
    for (const auto& x : array_at(j, "reports")) c.reports.push_back(report_from_json(x));
    if (const Json& o = member(j, "optimality"); !o.is_null()) c.optimality = optimality_from_json(o);
    if (const Json& d = member(j, "defining_set"); !d.is_null()) {
        DefiningSet ds;
        const auto n = uint_at(d, "n");
        if (n == 0 || n > 0xffffffffULL) throw InputError("defining set length out of range");
        ds.n = static_cast<std::uint32_t>(n);
        ds.q = uint_at(d, "q");
        ds.members = u32_list(member(d, "members"), "members");
        c.defining_set = std::move(ds);
    }
    if (const Json& b = member(j, "bch"); !b.is_null())
        c.bch = BchRun{static_cast<unsigned>(uint_at(b, "lambda")), static_cast<std::uint32_t>(uint_at(b, "step")),
                       static_cast<std::uint32_t>(uint_at(b, "start"))};
    c.checks = string_list(member(j, "checks"), "checks");
    c.notes = string_list(member(j, "notes"), "notes");
    const Json& run = member(j, "run");
    c.wall_us = uint_at(run, "wall_us");
    c.work = {uint_at(run, "codewords_enumerated"), uint_at(run, "supports_examined")};
    return c;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Re-validation

namespace {

struct Checker {
    std::vector<std::string>& failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }

    void distance(const LinearCode& c, const std::string& name) {
        const auto& d = c.cached_distance();
        if (!d || d->provenance != Provenance::certified) return;
        const Word& w = d->witness;
        expect(w.size() == c.length() && c.contains(w) && hamming_weight(w) == d->value,
               name + ": distance witness is not a codeword of weight " + std::to_string(d->value));
    }

    void report(const BoundReport& r, const std::string& at) {
        if (r.verdict == Verdict::skipped) {
            expect(r.oracle == Provider::skipped, at + " is skipped but names an oracle");
            return;
        }
        expect(r.verdict == verdict_for(r.bound, r.achieved, r.sense),
               at + ": stored verdict " + to_string(r.verdict) + " does not follow from bound " +
                   std::to_string(r.bound) + " and achieved " + std::to_string(r.achieved));
    }

    void classical_report(const BoundReport& r, const LinearCode& c, unsigned loc, const std::string& at) {
        const auto n = static_cast<std::int64_t>(c.length());
        const auto k = static_cast<std::int64_t>(c.dimension());
        const auto d = c.cached_distance();
        if (!d) {
            failures.push_back(at + " refers to a code without a distance");
            return;
        }
        const auto in = [&](const char* key) {
            auto it = r.inputs.find(key);
            return it == r.inputs.end() ? std::int64_t{-1} : it->second;
        };
        expect(in("n") == n && in("r") == loc, at + ": inputs do not match the code");
        if (r.id == BoundId::c_singleton) {
            expect(in("k") == k, at + ": k does not match the code");
            expect(r.bound == singleton_like_bound(n, k, loc), at + ": bound value is wrong");
            expect(r.achieved == d->value, at + ": achieved is not the distance");
        } else {
            expect(in("d") == d->value && in("q") == c.field()->order(), at + ": inputs do not match the code");
            expect(r.achieved == k, at + ": achieved is not the dimension");
        }
    }

    void quantum_report(const BoundReport& r, const CssCode& q, unsigned loc, const std::string& at) {
        const auto n = static_cast<std::int64_t>(q.n);
        const auto kappa = static_cast<std::int64_t>(q.kappa);
        const std::int64_t delta = q.delta;
        if (r.id == BoundId::q_singleton_dim) {
            expect(r.bound == q_singleton_dim_bound(n, delta, loc), at + ": bound value is wrong");
            expect(r.achieved == kappa, at + ": achieved is not kappa");
        } else if (r.id == BoundId::q_singleton) {
            expect(r.bound == q_singleton_rhs(n, kappa, loc), at + ": bound value is wrong");
            expect(r.achieved == 2 * delta, at + ": achieved is not 2 delta");
        } else if (r.id == BoundId::q_cm) {
            expect(r.achieved == 2 * kappa, at + ": achieved is not 2 kappa");
        }
    }
};

}  // namespace

Revalidation revalidate(const Certificate& c) {
    Revalidation out;
    Checker ck{out.failures};

    for (std::size_t i = 0; i < c.codes.size(); ++i) ck.distance(c.codes[i], "code " + std::to_string(i + 1));

    if (!c.quantum) {
        ck.expect(c.codes.size() == 1 || c.reports.empty(), "classical reports need exactly one code");
        ck.expect(c.locality.size() <= c.codes.size(), "more locality certificates than codes");
        for (std::size_t i = 0; i < c.locality.size(); ++i) {
            std::string why;
            ck.expect(c.locality[i].verified && verify_locality(c.codes[i], c.locality[i], &why),
                      "locality certificate " + std::to_string(i + 1) + ": " + (why.empty() ? "not verified" : why));
        }
        for (std::size_t i = 0; i < c.reports.size(); ++i) {
            const auto& r = c.reports[i];
            const std::string at = "report " + std::to_string(i) + " (" + to_string(r.id) + ")";
            ck.report(r, at);
            if (r.verdict == Verdict::skipped) continue;
            if (r.id != BoundId::c_singleton && r.id != BoundId::c_cm) {
                out.failures.push_back(at + " is not a classical bound");
                continue;
            }
            if (c.locality.empty() || c.codes.empty()) {
                out.failures.push_back(at + " has no locality certificate to refer to");
                continue;
            }
            ck.classical_report(r, c.codes.front(), c.locality.front().r, at);
        }
        return out;
    }

    const CssCode& q = *c.quantum;
    ck.distance(q.c1, "C1");
    ck.distance(q.c2, "C2");
    try {
        css_claimed(q.c1, q.c2, q.delta);
    } catch (const Error& e) {
        out.failures.push_back(std::string("CSS pair: ") + e.what());
        return out;
    }
    ck.expect(q.kappa + q.n == q.c1.dimension() + q.c2.dimension(), "kappa is not k1 + k2 - n");
    if (q.delta_provenance == Provenance::certified) {
        const LinearCode* outer[2] = {&q.c2, &q.c1};
        const LinearCode* inner[2] = {&q.c1, &q.c2};
        for (int i = 0; i < 2; ++i) {
            const Word& w = q.relative_witness[i];
            ck.expect(w.size() == q.n && outer[i]->contains(w) && !inner[i]->dual_contains(w) &&
                          hamming_weight(w) == q.relative[i],
                      "relative witness " + std::to_string(i + 1) + " does not separate the codes at weight " +
                          std::to_string(q.relative[i]));
        }
        ck.expect(q.delta == std::min(q.relative[0], q.relative[1]), "delta is not the smaller relative weight");
        const bool both = q.c1.certified_distance() && q.c2.certified_distance();
        ck.expect(both, "a certified delta needs certified ingredient distances");
        if (both)
            ck.expect(q.purity == (q.delta == std::min(q.d1(), q.d2()) ? Purity::pure : Purity::impure),
                      "purity does not follow from delta and the ingredient distances");
    } else {
        ck.expect(!c.complete, "a complete certificate needs a certified delta");
    }

    unsigned loc = 0;
    if (c.quantum_locality) {
        std::string why;
        ck.expect(c.quantum_locality->verified && verify_quantum_locality(q, *c.quantum_locality, &why),
                  "quantum locality certificate: " + (why.empty() ? std::string("not verified") : why));
        loc = c.quantum_locality->r;
    }
    if (!c.locality.empty()) {
        ck.expect(c.locality.size() == 2, "a CSS certificate carries one locality certificate per ingredient");
        const LinearCode* codes[2] = {&q.c1, &q.c2};
        for (std::size_t i = 0; i < std::min<std::size_t>(2, c.locality.size()); ++i) {
            std::string why;
            ck.expect(c.locality[i].verified && verify_locality(*codes[i], c.locality[i], &why),
                      "locality certificate " + std::to_string(i + 1) + ": " + (why.empty() ? "not verified" : why));
        }
    }

    for (std::size_t i = 0; i < c.reports.size(); ++i) {
        const auto& r = c.reports[i];
        const std::string at = "report " + std::to_string(i) + " (" + to_string(r.id) + ")";
        ck.report(r, at);
        if (r.verdict == Verdict::skipped) continue;
        if (!c.quantum_locality) {
            out.failures.push_back(at + " has no locality certificate to refer to");
            continue;
        }
        if (r.id == BoundId::c_singleton || r.id == BoundId::c_cm) {
            auto it = r.inputs.find("code");
            if (it == r.inputs.end() || (it->second != 1 && it->second != 2)) {
                out.failures.push_back(at + " does not say which ingredient it covers");
                continue;
            }
            ck.classical_report(r, it->second == 1 ? q.c1 : q.c2, loc, at);
        } else {
            ck.quantum_report(r, q, loc, at);
        }
    }

    if (c.optimality) {
        if (c.quantum_locality && q.c1.cached_distance() && q.c2.cached_distance())
            ck.expect(to_json(pure_optimal_check(q, loc)) == to_json(*c.optimality),
                      "optimality verdict does not follow from the parameters");
        else
            out.failures.push_back("optimality verdict without locality or distances");
    }

    if (c.defining_set) {
        const auto& d = *c.defining_set;
        ck.expect(d.n == q.n, "defining set length differs from n");
        ck.expect(std::gcd<std::uint64_t>(d.n, d.q) == 1, "defining set modulus is not coprime to q");
        if (std::gcd<std::uint64_t>(d.n, d.q) == 1) {
            const auto closed = make_defining_set(d.n, d.q, d.members);
            ck.expect(closed.members == d.members, "defining set is not a union of cyclotomic cosets");
            ck.expect(is_dual_containing(closed), "defining set meets its negation");
        }
        if (c.bch) {
            const auto& b = *c.bch;
            bool run = std::gcd<std::uint64_t>(b.step, d.n) == 1 && b.lambda >= 1;
            for (std::uint64_t i = 0; run && i + 1 < b.lambda; ++i)
                run = d.contains(static_cast<std::uint32_t>((b.start + i * b.step) % d.n));
            ck.expect(run, "BCH progression is not contained in the defining set");
            if (q.c1.cached_distance())
                ck.expect(b.lambda <= q.d1(), "BCH bound exceeds the recorded distance");
        }
    } else {
        ck.expect(!c.bch, "BCH run without a defining set");
    }
    return out;
}

}  // namespace qlrc
