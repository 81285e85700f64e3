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
#include "srde/series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "srde/geometry.hpp"

namespace srde {

namespace {

double horner(const std::vector<double>& c, double r) {
    double acc = c.back();
    for (auto it = c.rbegin() + 1; it != c.rend(); ++it) {
        acc = acc * r + *it;
    }
    return acc;
}

void check_domain(const SeriesCoefficients& coeffs, double z, const char* op) {
    if (!(z >= 0.0) || z > coeffs.z_max()) {
        throw std::domain_error(std::string(op) + ": z = " + std::to_string(z) +
                                " outside [0, theta^m] = [0, " +
                                std::to_string(coeffs.z_max()) + "]");
    }
}

}  // namespace

SeriesCoefficients::SeriesCoefficients(std::vector<double> lambda, int m,
                                       double theta)
    : lambda_(std::move(lambda)), m_(m), theta_(theta) {
    if (lambda_.empty()) {
        throw std::invalid_argument("SeriesCoefficients: empty coefficient vector");
    }
    if (static_cast<int>(lambda_.size()) - 1 > kMaxSeriesOrder) {
        throw std::invalid_argument("SeriesCoefficients: order exceeds " +
                                    std::to_string(kMaxSeriesOrder));
    }
    if (m < 1) {
        throw std::invalid_argument("SeriesCoefficients: m must be >= 1");
    }
    if (!(theta > 0.0 && theta < 0.5)) {
        throw std::invalid_argument("SeriesCoefficients: theta must lie in (0, 0.5), got " +
                                    std::to_string(theta));
    }
    z_max_ = std::pow(theta_, m_);
    beta_ = DimensionContext(m_).surface_coeff();
}

double fz_at(const SeriesCoefficients& coeffs, double z) {
    check_domain(coeffs, z, "fz_at");
    const double r = std::pow(z, 1.0 / coeffs.dimension());
    return coeffs.surface_coeff() / coeffs.dimension() * horner(coeffs.lambda(), r);
}

double Fz_at(const SeriesCoefficients& coeffs, double z) {
    check_domain(coeffs, z, "Fz_at");
    if (z == 0.0) {
        return 0.0;
    }
    const int m = coeffs.dimension();
    const double r = std::pow(z, 1.0 / m);
    // beta * z * sum_j lambda_j r^j / (m+j), with z = r^m.
    const auto& lam = coeffs.lambda();
    double acc = lam.back() / (m + coeffs.order());
    for (int j = coeffs.order() - 1; j >= 0; --j) {
        acc = acc * r + lam[j] / (m + j);
    }
    return coeffs.surface_coeff() * z * acc;
}

std::vector<double> normalization_weights(int m, int q, double theta) {
    if (m < 1 || q < 0 || q > kMaxSeriesOrder || !(theta > 0.0 && theta < 0.5)) {
        throw std::invalid_argument("normalization_weights: bad (m, q, theta)");
    }
    const double beta = DimensionContext(m).surface_coeff();
    std::vector<double> a(q + 1);
    double theta_pow = std::pow(theta, m);
    for (int j = 0; j <= q; ++j) {
        a[j] = beta * theta_pow / (m + j);
        theta_pow *= theta;
    }
    return a;
}

double constraint_residual(const SeriesCoefficients& coeffs) {
    const auto a = normalization_weights(coeffs.dimension(), coeffs.order(),
                                         coeffs.theta());
    double acc = 0.0;
    for (int j = 0; j <= coeffs.order(); ++j) {
        acc += a[j] * coeffs.lambda()[j];
    }
    return acc - 1.0;
}

double quadrature_normalization(const SeriesCoefficients& coeffs, int nodes) {
    if (nodes < 2) {
        throw std::invalid_argument("quadrature_normalization: need >= 2 nodes");
    }
    // integral of f_Z(r^m) * m r^{m-1} dr over [0, theta].
    const int m = coeffs.dimension();
    const double h = coeffs.theta() / (nodes - 1);
    double acc = 0.0;
    for (int i = 0; i < nodes; ++i) {
        const double r = (i == nodes - 1) ? coeffs.theta() : i * h;
        const double z = std::pow(r, m);
        const double g = fz_at(coeffs, z) * m * std::pow(r, m - 1);
        acc += (i == 0 || i == nodes - 1) ? 0.5 * g : g;
    }
    return acc * h;
}

}  // namespace srde
