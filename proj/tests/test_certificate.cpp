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

#include <functional>

#include "doctest.h"
#include "qlrc/certificate.hpp"
#include "qlrc/errors.hpp"

using namespace qlrc;

namespace {

Certificate reload(const Certificate& c) { return certificate_from_json(Json::parse(canonical_dump(to_json(c)))); }

const FamilyResult& small_cyclic() {
    static const FamilyResult res = cyclic_family_one(13, 1, 3, 1);
    return res;
}

const FamilyResult& small_pair() {
    static const FamilyResult res = css_grs_pair_build(7, 3, 1, 4);
    return res;
}

// Applies `edit` to the serialized certificate and expects re-validation to
// fail, or loading to throw. Loading already rejects malformed input and
// distance witnesses that are not codewords of the stated weight.
void expect_rejected(const Certificate& c, const std::function<void(Json&)>& edit) {
    Json j = to_json(c);
    edit(j);
    try {
        const Certificate back = certificate_from_json(j);
        CHECK_FALSE(revalidate(back).ok());
    } catch (const Error&) {
    }
}

}  // namespace

TEST_CASE("field and code serialization") {
    auto f = Field::of_order(9);
    CHECK(to_json(*f) == Json::parse(R"({"p": 3, "m": 2, "modulus": [1, 0, 1]})"));
    CHECK(field_from_json(to_json(*f))->same_as(*f));

    auto c = LinearCode::from_generator(Matrix::from_rows(Field::of_order(2), {{1, 1, 0, 0}, {0, 1, 1, 0}}, 4));
    auto j = to_json(c);
    CHECK(j["n"] == 4);
    CHECK(j["k"] == 2);
    CHECK(j["generator"] == Json::parse("[[1, 0, 1, 0], [0, 1, 1, 0]]"));
    CHECK(j["cached_d"].is_null());
    CHECK(code_from_json(j) == c);

    auto certified = with_certified_distance(c);
    auto back = code_from_json(to_json(certified));
    REQUIRE(back.cached_distance());
    CHECK(back.cached_distance()->value == 2);
    CHECK(back.cached_distance()->provenance == Provenance::certified);

    j["generator"] = Json::parse("[[1, 1, 0, 0], [0, 1, 1, 0]]");
    CHECK_THROWS_AS(code_from_json(j), InputError);
    j["generator"] = Json::parse("[[1, 0, 1, 0], [0, 1, 2, 0]]");
    CHECK_THROWS_AS(code_from_json(j), InputError);
    j.erase("n");
    CHECK_THROWS_AS(code_from_json(j), InputError);
}

TEST_CASE("user code files") {
    auto g = code_from_user_json(Json::parse(R"({"q": 2, "generator": [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]]})"));
    CHECK(g.length() == 4);
    CHECK(g.dimension() == 3);
    auto h = code_from_user_json(Json::parse(R"({"q": 2, "parity_check": [[1, 1, 1, 1]]})"));
    CHECK(g == h);
    CHECK_FALSE(code_from_user_json(to_json(with_certified_distance(g))).cached_distance());

    CHECK_THROWS_AS(code_from_user_json(Json::parse(R"({"q": 6, "generator": [[1]]})")), InputError);
    CHECK_THROWS_AS(code_from_user_json(Json::parse(R"({"q": 2})")), InputError);
    CHECK_THROWS_AS(code_from_user_json(Json::parse(R"({"q": 2, "generator": [[1, 1], [1]]})")), InputError);
    CHECK_THROWS_AS(code_from_user_json(Json::parse(R"({"q": 2, "generator": [[1, 1]], "parity_check": [[1, 1]]})")),
                    InputError);
    CHECK_THROWS_AS(code_from_user_json(Json::parse(R"({"q": 3, "generator": [[1, -1]]})")), InputError);
}

TEST_CASE("reports round trip") {
    BoundReport r;
    r.id = BoundId::q_cm;
    r.inputs = {{"k1", 3}, {"delta", 2}};
    r.bound = 7;
    r.achieved = 6;
    r.verdict = Verdict::satisfied_strict;
    r.oracle = Provider::upper;
    r.note = "x";
    const auto back = report_from_json(to_json(r));
    CHECK(to_json(back) == to_json(r));
    auto j = to_json(r);
    j["verdict"] = "fine";
    CHECK_THROWS_AS(report_from_json(j), InputError);
}

TEST_CASE("family certificates round trip byte for byte") {
    for (const FamilyResult* res : {&small_cyclic(), &small_pair()}) {
        Certificate c = family_certificate(*res);
        c.wall_us = 1234;
        c.work = {56, 78};
        const std::string text = canonical_dump(to_json(c));
        const Certificate back = certificate_from_json(Json::parse(text));
        CHECK(canonical_dump(to_json(back)) == text);
        const auto v = revalidate(back);
        CHECK(v.ok());
        for (const auto& f : v.failures) MESSAGE(f);
        CHECK(back.all_hold());
        CHECK(back.reports.size() == res->certification.reports.size());
        for (std::size_t i = 0; i < back.reports.size(); ++i)
            CHECK(back.reports[i].verdict == res->certification.reports[i].verdict);
    }
}

TEST_CASE("canonical form") {
    const std::string text = canonical_dump(to_json(family_certificate(small_cyclic())));
    CHECK(text.back() == '\n');
    CHECK(text.find('.') == std::string::npos);  // no floating-point values
    // keys appear in sorted order at the top level
    const auto a = text.find("\"bch\""), b = text.find("\"checks\""), c = text.find("\"version\"");
    CHECK(a < b);
    CHECK(b < c);
    CHECK(Json::parse(text)["field"] == Json::parse(R"({"p": 13, "m": 1, "modulus": [0, 1]})"));
}

TEST_CASE("tampered certificates are rejected") {
    const Certificate c = family_certificate(small_pair());
    REQUIRE(revalidate(reload(c)).ok());

    expect_rejected(c, [](Json& j) { j["quantum"]["delta"]["value"] = 2; });
    expect_rejected(c, [](Json& j) { j["quantum"]["kappa"] = 2; });
    expect_rejected(c, [](Json& j) { j["quantum"]["purity"] = "impure"; });
    expect_rejected(c, [](Json& j) {
        auto& w = j["quantum"]["delta"]["witnesses"][0];
        w[0] = (w[0].get<int>() + 1) % 7;
    });
    expect_rejected(c, [](Json& j) {
        auto& w = j["quantum"]["locality_certificate"]["witnesses"][2]["word1"];
        w[0] = (w[0].get<int>() + 1) % 7;
    });
    expect_rejected(c, [](Json& j) { j["quantum"]["locality_certificate"]["r"] = 3; });
    expect_rejected(c, [](Json& j) { j["quantum"]["C1"]["cached_d"]["value"] = 4; });
    expect_rejected(c, [](Json& j) { j["reports"][0]["verdict"] = "satisfied_strict"; });
    expect_rejected(c, [](Json& j) { j["reports"][0]["bound"] = 4; });
    expect_rejected(c, [](Json& j) { j["reports"][2]["achieved"] = 0; });
    expect_rejected(c, [](Json& j) { j["optimality"]["condition_b"] = false; });
    expect_rejected(c, [](Json& j) { j["locality_certificates"][1]["witnesses"][0]["weight"] = 9; });
    expect_rejected(c, [](Json& j) { j["status"] = "unknown"; });
    expect_rejected(c, [](Json& j) { j["version"] = 2; });
    expect_rejected(c, [](Json& j) { j.erase("reports"); });

    const Certificate cyc = family_certificate(small_cyclic());
    expect_rejected(cyc, [](Json& j) { j["defining_set"]["members"] = Json::array({1, 3}); });
    expect_rejected(cyc, [](Json& j) { j["bch"]["lambda"] = 3; });
    expect_rejected(cyc, [](Json& j) { j["defining_set"] = nullptr; });
}

TEST_CASE("classical certificate") {
    auto c = with_certified_distance(code_from_user_json(Json::parse(R"({"q": 2, "parity_check": [[1, 1, 1, 1]]})")));
    auto loc = locality_certificate(c, 3);
    REQUIRE(loc.certificate);
    Certificate cert;
    cert.construction = "classical";
    cert.codes = {c};
    cert.locality = {*loc.certificate};
    cert.reports = classify_classical(c, *loc.certificate);
    CHECK(cert.reports.size() == 2);
    const auto back = reload(cert);
    CHECK(revalidate(back).ok());
    CHECK(canonical_dump(to_json(back)) == canonical_dump(to_json(cert)));

    Json j = to_json(cert);
    j["codes"][0]["cached_d"]["witness"] = Json::array({1, 0, 0, 0});
    CHECK_THROWS_AS(certificate_from_json(j), VerificationFailure);
    j = to_json(cert);
    j["reports"][0]["inputs"]["k"] = 2;
    CHECK_FALSE(revalidate(certificate_from_json(j)).ok());
}

TEST_CASE("partial CSS certificate") {
    auto h = code_from_user_json(
        Json::parse(R"({"q": 2, "parity_check": [[1,0,1,0,1,0,1],[0,1,1,0,0,1,1],[0,0,0,1,1,1,1]]})"));
    Certificate c;
    c.construction = "css";
    c.complete = false;
    c.quantum = css_claimed(h, h, 3);
    const auto back = reload(c);
    CHECK(revalidate(back).ok());
    CHECK_FALSE(back.complete);
    CHECK(back.quantum->delta_provenance == Provenance::claimed);

    c.complete = true;
    CHECK_FALSE(revalidate(reload(c)).ok());
}

TEST_CASE("oracle work counters") {
    const auto before = oracle_work();
    auto c = LinearCode::from_generator(Matrix::from_rows(Field::of_order(3), {{1, 1, 1}}, 3));
    min_weight(c);
    low_weight_search(c, 3, {}, true);
    const auto after = oracle_work();
    CHECK(after.codewords - before.codewords == 3);
    CHECK(after.supports - before.supports == 7);
}
