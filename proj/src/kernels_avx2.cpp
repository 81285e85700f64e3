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

#ifdef SRDE_WITH_AVX2

#include <immintrin.h>

// The map-style kernels (distances, Horner) vectorize ACROSS points, one
// point per lane, so per-element operation order matches the scalar
// reference exactly; mul+add is used instead of FMA for the same reason
// (this translation unit is built with -ffp-contract=off). Only the
// power-sum reduction accumulates in a different order than scalar.

namespace srde::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

inline __m256i stride_index(std::size_t m) {
    return _mm256_setr_epi64x(0, static_cast<long long>(m),
                              static_cast<long long>(2 * m),
                              static_cast<long long>(3 * m));
}

}  // namespace

void squared_distances(const double* points, std::size_t n, std::size_t m,
                       const double* query, double* out) {
    const __m256i idx = stride_index(m);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const double* base = points + i * m;
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t d = 0; d < m; ++d) {
            const __m256d pv = _mm256_i64gather_pd(base + d, idx, 8);
            const __m256d diff = _mm256_sub_pd(pv, _mm256_set1_pd(query[d]));
            acc = _mm256_add_pd(acc, _mm256_mul_pd(diff, diff));
        }
        _mm256_storeu_pd(out + i, acc);
    }
    if (i < n) {
        scalar::squared_distances(points + i * m, n - i, m, query, out + i);
    }
}

void scaled_squared_distances(const double* points, std::size_t n,
                              std::size_t m, const double* query,
                              const double* inv_bandwidth, double* out) {
    const __m256i idx = stride_index(m);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const double* base = points + i * m;
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t d = 0; d < m; ++d) {
            const __m256d pv = _mm256_i64gather_pd(base + d, idx, 8);
            __m256d diff = _mm256_sub_pd(pv, _mm256_set1_pd(query[d]));
            diff = _mm256_mul_pd(diff, _mm256_set1_pd(inv_bandwidth[d]));
            acc = _mm256_add_pd(acc, _mm256_mul_pd(diff, diff));
        }
        _mm256_storeu_pd(out + i, acc);
    }
    if (i < n) {
        scalar::scaled_squared_distances(points + i * m, n - i, m, query,
                                         inv_bandwidth, out + i);
    }
}

void polynomial_eval(const double* x, std::size_t n, const double* coeffs,
                     int degree, double* out) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xv = _mm256_loadu_pd(x + i);
        __m256d acc = _mm256_set1_pd(coeffs[degree]);
        for (int j = degree - 1; j >= 0; --j) {
            acc = _mm256_add_pd(_mm256_mul_pd(acc, xv), _mm256_set1_pd(coeffs[j]));
        }
        _mm256_storeu_pd(out + i, acc);
    }
    if (i < n) {
        scalar::polynomial_eval(x + i, n - i, coeffs, degree, out + i);
    }
}

void weighted_power_sums(const double* x, const double* w, std::size_t n,
                         int degree, double* sums) {
    __m256d acc[9];  // degree is capped at 8 by the series order limit
    for (int j = 0; j <= degree; ++j) {
        acc[j] = _mm256_setzero_pd();
    }
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xv = _mm256_loadu_pd(x + i);
        __m256d term = _mm256_loadu_pd(w + i);
        for (int j = 0; j < degree; ++j) {
            acc[j] = _mm256_add_pd(acc[j], term);
            term = _mm256_mul_pd(term, xv);
        }
        acc[degree] = _mm256_add_pd(acc[degree], term);
    }
    for (int j = 0; j <= degree; ++j) {
        sums[j] = hsum(acc[j]);
    }
    for (; i < n; ++i) {
        double term = w[i];
        for (int j = 0; j < degree; ++j) {
            sums[j] += term;
            term *= x[i];
        }
        sums[degree] += term;
    }
}

}  // namespace srde::kernels::avx2

#endif  // SRDE_WITH_AVX2
