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

#include <vector>

namespace srde {

/// Maximum supported truncation order. Radii live in [0, theta] with
/// theta < 1/2, so higher powers are numerically unidentifiable.
inline constexpr int kMaxSeriesOrder = 8;

/// A truncated power-series model of the super-radius density
///
///   f_Z(z) = (beta/m) * sum_{j=0}^{q} lambda[j] * z^{j/m},  z in [0, theta^m]
///
/// lambda[0] is the pointwise density estimate at the frame origin.
class SeriesCoefficients {
public:
    SeriesCoefficients(std::vector<double> lambda, int m, double theta);

    const std::vector<double>& lambda() const { return lambda_; }
    int order() const { return static_cast<int>(lambda_.size()) - 1; }
    int dimension() const { return m_; }
    double theta() const { return theta_; }
    double z_max() const { return z_max_; }  // theta^m
    double surface_coeff() const { return beta_; }

private:
    std::vector<double> lambda_;
    int m_;
    double theta_;
    double z_max_;
    double beta_;
};

/// Density f_Z(z) = (beta/m) sum_j lambda_j z^{j/m}.
/// z outside [0, theta^m] is a domain error.
double fz_at(const SeriesCoefficients& coeffs, double z);

/// Distribution function F_Z(z) = beta sum_j lambda_j z^{1+j/m} / (m+j).
/// F_Z(0) = 0 and F_Z(theta^m) = 1 for a properly normalized series.
double Fz_at(const SeriesCoefficients& coeffs, double z);

/// Weights a_j = beta * theta^{m+j} / (m+j), so the unit-integral
/// constraint reads sum_j a_j lambda_j = 1.
std::vector<double> normalization_weights(int m, int q, double theta);

/// sum_j a_j lambda_j - 1; zero for a normalized series.
double constraint_residual(const SeriesCoefficients& coeffs);

/// Integral of fz_at over [0, theta^m] by an n-node trapezoid rule under
/// the exact substitution z = r^m (the integrand in r is a polynomial, so
/// the rule converges cleanly; a uniform grid in z would be defeated by
/// the z^{j/m} cusp at zero for m >= 2).
double quadrature_normalization(const SeriesCoefficients& coeffs, int nodes = 1024);

}  // namespace srde
