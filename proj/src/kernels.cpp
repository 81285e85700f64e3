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

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace srde::kernels {

namespace {

struct Dispatch {
    void (*squared_distances)(const double*, std::size_t, std::size_t,
                              const double*, double*);
    void (*scaled_squared_distances)(const double*, std::size_t, std::size_t,
                                     const double*, const double*, double*);
    void (*polynomial_eval)(const double*, std::size_t, const double*, int,
                            double*);
    void (*weighted_power_sums)(const double*, const double*, std::size_t, int,
                                double*);
};

constexpr Dispatch kScalarTable = {
    &scalar::squared_distances,
    &scalar::scaled_squared_distances,
    &scalar::polynomial_eval,
    &scalar::weighted_power_sums,
};

#ifdef SRDE_WITH_AVX2
constexpr Dispatch kAvx2Table = {
    &avx2::squared_distances,
    &avx2::scaled_squared_distances,
    &avx2::polynomial_eval,
    &avx2::weighted_power_sums,
};
#endif

bool avx2_available() {
#ifdef SRDE_WITH_AVX2
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend pick_default() {
    if (const char* env = std::getenv("SRDE_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) {
            return Backend::scalar;
        }
        if (std::strcmp(env, "avx2") == 0 && avx2_available()) {
            return Backend::avx2;
        }
        // "auto" or anything unrecognized falls through to detection.
    }
    return avx2_available() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend> g_backend{pick_default()};

const Dispatch& table() {
    switch (g_backend.load(std::memory_order_relaxed)) {
#ifdef SRDE_WITH_AVX2
        case Backend::avx2:
            return kAvx2Table;
#endif
        default:
            return kScalarTable;
    }
}

}  // namespace

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

bool set_backend(Backend b) {
    if (b == Backend::avx2 && !avx2_available()) {
        return false;
    }
    g_backend.store(b, std::memory_order_relaxed);
    return true;
}

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::avx2:
            return "avx2";
        default:
            return "scalar";
    }
}

std::vector<Backend> supported_backends() {
    std::vector<Backend> out{Backend::scalar};
    if (avx2_available()) {
        out.push_back(Backend::avx2);
    }
    return out;
}

void squared_distances(const double* points, std::size_t n, std::size_t m,
                       const double* query, double* out) {
    table().squared_distances(points, n, m, query, out);
}

void scaled_squared_distances(const double* points, std::size_t n,
                              std::size_t m, const double* query,
                              const double* inv_bandwidth, double* out) {
    table().scaled_squared_distances(points, n, m, query, inv_bandwidth, out);
}

void polynomial_eval(const double* x, std::size_t n, const double* coeffs,
                     int degree, double* out) {
    table().polynomial_eval(x, n, coeffs, degree, out);
}

void weighted_power_sums(const double* x, const double* w, std::size_t n,
                         int degree, double* sums) {
    table().weighted_power_sums(x, w, n, degree, sums);
}

}  // namespace srde::kernels
