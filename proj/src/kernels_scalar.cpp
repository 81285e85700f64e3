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
#include "srde/kernels.hpp"

namespace srde::kernels::scalar {

void squared_distances(const double* points, std::size_t n, std::size_t m,
                       const double* query, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        const double* p = points + i * m;
        double acc = 0.0;
        for (std::size_t d = 0; d < m; ++d) {
            const double diff = p[d] - query[d];
            acc += diff * diff;
        }
        out[i] = acc;
    }
}

void scaled_squared_distances(const double* points, std::size_t n,
                              std::size_t m, const double* query,
                              const double* inv_bandwidth, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        const double* p = points + i * m;
        double acc = 0.0;
        for (std::size_t d = 0; d < m; ++d) {
            const double diff = (p[d] - query[d]) * inv_bandwidth[d];
            acc += diff * diff;
        }
        out[i] = acc;
    }
}

void polynomial_eval(const double* x, std::size_t n, const double* coeffs,
                     int degree, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        double acc = coeffs[degree];
        for (int j = degree - 1; j >= 0; --j) {
            acc = acc * x[i] + coeffs[j];
        }
        out[i] = acc;
    }
}

void weighted_power_sums(const double* x, const double* w, std::size_t n,
                         int degree, double* sums) {
    for (int j = 0; j <= degree; ++j) {
        sums[j] = 0.0;
    }
    for (std::size_t i = 0; i < n; ++i) {
        double term = w[i];
        for (int j = 0; j < degree; ++j) {
            sums[j] += term;
            term *= x[i];
        }
        sums[degree] += term;
    }
}

}  // namespace srde::kernels::scalar
