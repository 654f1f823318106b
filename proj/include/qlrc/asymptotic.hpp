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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qlrc {

/// Rate bound R(Delta) = intercept + slope * Delta before clamping.
struct RateLine {
    double intercept = 0;
    double slope = 0;
    double at(double delta) const { return intercept + slope * delta; }
};

/// (r/(r+1))^2 - r(2r+1)/(r+1)^2 Delta, from the dimension form.
RateLine dimension_form_line(unsigned r);
/// r/(r+2) - 2r/(r+2) Delta, from the distance form.
RateLine distance_form_line(unsigned r);
/// r/(r+2) - 2r/(r+2) q/(q-1) Delta, from the CM form.
RateLine cm_form_line(unsigned r, std::uint64_t q);

struct AsymptoticPoint {
    double delta = 0;
    double r_dim = 0;
    double r_dist = 0;
    double r_cm = 0;
};

/// All three rate bounds at Delta, clamped to [0, 1]. Requires r >= 1,
/// q >= 2 and 0 <= Delta <= 1.
AsymptoticPoint asym_bounds(unsigned r, std::uint64_t q, double delta);

struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// (q-1) / (2q(r+1)^2 - (q-1)(r+2)(2r+1)) in lowest terms: above this the CM
/// form is below the dimension form. Throws PreconditionError when the
/// denominator is not positive.
Fraction crossover_delta(unsigned r, std::uint64_t q);

/// Points Delta = i * step for i = 0, 1, ... while Delta <= max + 1e-9.
std::vector<AsymptoticPoint> emit_curves(unsigned r, std::uint64_t q, double step, double max = 0.5);

/// "delta,r_dim,r_dist,r_cm" followed by one line per point, 12 decimals.
std::string curves_csv(const std::vector<AsymptoticPoint>& rows);

}  // namespace qlrc
