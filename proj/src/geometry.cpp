/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "srde/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace srde {

namespace {

constexpr int kLanczosG = 7;
constexpr double kLanczos[kLanczosG + 2] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Gamma(twice_x / 2) by the recurrence Gamma(x+1) = x Gamma(x), starting
// from Gamma(1) = 1 or Gamma(1/2) = sqrt(pi). Exact up to rounding of the
// running product.
double gamma_of_half(int twice_x) {
    double g = (twice_x % 2 == 0) ? 1.0 : std::sqrt(std::numbers::pi);
    for (int t = (twice_x % 2 == 0) ? 2 : 1; t < twice_x; t += 2) {
        g *= 0.5 * t;
    }
    return g;
}

}  // namespace

double gamma_function(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("gamma_function: argument must be positive, got " +
                                std::to_string(x));
    }
    if (x < 0.5) {
        // Reflection keeps the Lanczos series on arguments >= 0.5.
        return std::numbers::pi /
               (std::sin(std::numbers::pi * x) * gamma_function(1.0 - x));
    }
    const double z = x - 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < kLanczosG + 2; ++i) {
        acc += kLanczos[i] / (z + i);
    }
    const double t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) *
           std::exp(-t) * acc;
}

DimensionContext::DimensionContext(int m) : m_(m) {
    if (m < 1) {
        throw std::invalid_argument("DimensionContext: m must be >= 1, got " +
                                    std::to_string(m));
    }
    const double pi_half_m = std::pow(std::numbers::pi, 0.5 * m);
    volume_coeff_ = pi_half_m / gamma_of_half(m + 2);
    surface_coeff_ = 2.0 * pi_half_m / gamma_of_half(m);
    if (!std::isfinite(volume_coeff_) || !std::isfinite(surface_coeff_) ||
        volume_coeff_ <= 0.0 || surface_coeff_ <= 0.0) {
        throw std::invalid_argument(
            "DimensionContext: sphere constants not representable for m = " +
            std::to_string(m));
    }
}

double sphere_volume(const DimensionContext& ctx, double r) {
    if (!(r >= 0.0)) {
        throw std::domain_error("sphere_volume: radius must be >= 0, got " +
                                std::to_string(r));
    }
    return ctx.volume_coeff() * std::pow(r, ctx.dimension());
}

double theorem1_factor(const DimensionContext& ctx) {
    return ctx.volume_coeff();
}

double super_radius(std::span<const double> s, std::span<const double> origin,
                    const DimensionContext& ctx) {
    const auto m = static_cast<std::size_t>(ctx.dimension());
    if (s.size() != m || origin.size() != m) {
        throw std::invalid_argument(
            "super_radius: vector dimensions " + std::to_string(s.size()) + "/" +
            std::to_string(origin.size()) + " do not match context dimension " +
            std::to_string(m));
    }
    double sq = 0.0;
    for (std::size_t d = 0; d < m; ++d) {
        const double diff = s[d] - origin[d];
        sq += diff * diff;
    }
    return std::pow(std::sqrt(sq), ctx.dimension());
}

}  // namespace srde
