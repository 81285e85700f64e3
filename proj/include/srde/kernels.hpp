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

#include <cstddef>
#include <string>
#include <vector>

namespace srde::kernels {

/// Arithmetic inner loops shared by the estimator, the neighbor scan and
/// the KDE baseline. Every kernel has a scalar reference implementation
/// and, on x86-64, an AVX2 variant. The backend is picked once at startup
/// (best supported wins); SRDE_KERNELS=scalar|avx2 overrides, and
/// set_backend() switches explicitly.

enum class Backend { scalar, avx2 };

Backend active_backend();
bool set_backend(Backend b);  // false when the backend is not available
const char* backend_name(Backend b);
std::vector<Backend> supported_backends();

/// out[i] = sum_d (points[i*m + d] - query[d])^2
void squared_distances(const double* points, std::size_t n, std::size_t m,
                       const double* query, double* out);

/// out[i] = sum_d ((points[i*m + d] - query[d]) * inv_bandwidth[d])^2
void scaled_squared_distances(const double* points, std::size_t n,
                              std::size_t m, const double* query,
                              const double* inv_bandwidth, double* out);

/// out[i] = coeffs[0] + coeffs[1] x[i] + ... + coeffs[degree] x[i]^degree
/// (Horner evaluation).
void polynomial_eval(const double* x, std::size_t n, const double* coeffs,
                     int degree, double* out);

/// sums[j] = sum_i w[i] * x[i]^j for j = 0..degree.
void weighted_power_sums(const double* x, const double* w, std::size_t n,
                         int degree, double* sums);

/// Reference implementations, always available; the ground truth for the
/// backend equivalence tests.
namespace scalar {
void squared_distances(const double* points, std::size_t n, std::size_t m,
                       const double* query, double* out);
void scaled_squared_distances(const double* points, std::size_t n,
                              std::size_t m, const double* query,
                              const double* inv_bandwidth, double* out);
void polynomial_eval(const double* x, std::size_t n, const double* coeffs,
                     int degree, double* out);
void weighted_power_sums(const double* x, const double* w, std::size_t n,
                         int degree, double* sums);
}  // namespace scalar

#ifdef SRDE_WITH_AVX2
namespace avx2 {
void squared_distances(const double* points, std::size_t n, std::size_t m,
                       const double* query, double* out);
void scaled_squared_distances(const double* points, std::size_t n,
                              std::size_t m, const double* query,
                              const double* inv_bandwidth, double* out);
void polynomial_eval(const double* x, std::size_t n, const double* coeffs,
                     int degree, double* out);
void weighted_power_sums(const double* x, const double* w, std::size_t n,
                         int degree, double* sums);
}  // namespace avx2
#endif

}  // namespace srde::kernels
