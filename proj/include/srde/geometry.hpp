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
#pragma once

#include <span>

namespace srde {

/// Gamma function for positive real arguments, Lanczos approximation
/// (g = 7, 9-term series). Accurate to better than 1e-12 relative on
/// (0, 50]. Throws std::domain_error for x <= 0.
double gamma_function(double x);

/// Sphere constants of an m-dimensional Euclidean space, precomputed once.
///
/// volume_coeff  = pi^{m/2} / Gamma(m/2 + 1)   (unit-ball volume)
/// surface_coeff = 2 pi^{m/2} / Gamma(m/2)     (unit-sphere surface area)
///
/// Both Gamma values are integer or half-integer arguments and are computed
/// by the exact recurrence, not the Lanczos series.
class DimensionContext {
public:
    explicit DimensionContext(int m);

    int dimension() const { return m_; }
    double volume_coeff() const { return volume_coeff_; }
    double surface_coeff() const { return surface_coeff_; }

private:
    int m_;
    double volume_coeff_;
    double surface_coeff_;
};

/// Volume of the m-ball of radius r: volume_coeff * r^m. r must be >= 0.
double sphere_volume(const DimensionContext& ctx, double r);

/// The constant relating the super-radius density at zero to the point
/// density: pi^{m/2} / Gamma(m/2 + 1). Equals sphere_volume(ctx, 1).
double theorem1_factor(const DimensionContext& ctx);

/// The super-radius of s relative to origin: ||s - origin||^m.
/// Both vectors must have length ctx.dimension().
double super_radius(std::span<const double> s, std::span<const double> origin,
                    const DimensionContext& ctx);

}  // namespace srde
