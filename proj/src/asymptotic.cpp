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

#include "qlrc/asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "qlrc/errors.hpp"

namespace qlrc {

namespace {

void check_rq(unsigned r, std::uint64_t q) {
    if (r < 1) throw InputError("locality must be at least 1");
    if (q < 2) throw InputError("field order must be at least 2");
}

double clamp_rate(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

RateLine dimension_form_line(unsigned r) {
    check_rq(r, 2);
    const double rr = r, s = (rr + 1) * (rr + 1);
    return {rr * rr / s, -rr * (2 * rr + 1) / s};
}

RateLine distance_form_line(unsigned r) {
    check_rq(r, 2);
    const double rr = r;
    return {rr / (rr + 2), -2 * rr / (rr + 2)};
}

RateLine cm_form_line(unsigned r, std::uint64_t q) {
    check_rq(r, q);
    const double rr = r, qq = static_cast<double>(q);
    return {rr / (rr + 2), -2 * rr / (rr + 2) * qq / (qq - 1)};
}

AsymptoticPoint asym_bounds(unsigned r, std::uint64_t q, double delta) {
    check_rq(r, q);
    if (!(delta >= 0 && delta <= 1)) throw InputError("relative distance must lie in [0, 1]");
    return {delta, clamp_rate(dimension_form_line(r).at(delta)), clamp_rate(distance_form_line(r).at(delta)),
            clamp_rate(cm_form_line(r, q).at(delta))};
}

Fraction crossover_delta(unsigned r, std::uint64_t q) {
    check_rq(r, q);
    const auto qq = static_cast<std::int64_t>(q);
    const std::int64_t rr = r;
    const std::int64_t num = qq - 1;
    const std::int64_t den = 2 * qq * (rr + 1) * (rr + 1) - (qq - 1) * (rr + 2) * (2 * rr + 1);
    if (den <= 0) throw PreconditionError("crossover denominator is not positive for r = " + std::to_string(r) +
                                          ", q = " + std::to_string(q));
    const std::int64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

std::vector<AsymptoticPoint> emit_curves(unsigned r, std::uint64_t q, double step, double max) {
    if (!(step > 0)) throw InputError("grid step must be positive");
    std::vector<AsymptoticPoint> out;
    for (std::size_t i = 0;; ++i) {
        const double delta = static_cast<double>(i) * step;
        if (delta > max + 1e-9) break;
        out.push_back(asym_bounds(r, q, std::min(delta, 1.0)));
    }
    return out;
}

std::string curves_csv(const std::vector<AsymptoticPoint>& rows) {
    std::string out = "delta,r_dim,r_dist,r_cm\n";
    char buf[128];
    for (const auto& p : rows) {
        std::snprintf(buf, sizeof buf, "%.12f,%.12f,%.12f,%.12f\n", p.delta, p.r_dim, p.r_dist, p.r_cm);
        out += buf;
    }
    return out;
}

}  // namespace qlrc
