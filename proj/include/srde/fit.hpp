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

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "srde/series.hpp"

namespace srde {

/// The optimizer failed to produce a positive, normalized series.
class FitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FitOptions {
    double gradient_tolerance = 1e-8;
    int max_iterations = 500;
    int random_starts = 4;       // perturbed restarts besides the flat start
    std::uint64_t seed = 0x53524445;  // fixed so fits are reproducible
    int positivity_grid = 256;   // uniform check points over [0, theta]
};

struct FitResult {
    SeriesCoefficients coefficients;
    double log_likelihood = 0.0;  // sum_i ln(sum_j lambda_j r_i^j) at optimum
    int iterations = 0;
    int best_start = 0;
    std::vector<std::string> warnings;
};

/// Maximum-likelihood fit of the lambda-series to radii in [0, theta].
///
/// Maximizes sum_i ln(sum_j lambda_j r_i^j) subject to the unit-integral
/// constraint on f_Z. The constraint is eliminated by solving it for
/// lambda_0, leaving a smooth concave problem in (lambda_1..lambda_q)
/// solved by BFGS with an extended-value objective (-inf wherever the
/// series is nonpositive at a sample radius). Deterministic for identical
/// inputs and options.
FitResult fit_series(std::span<const double> radii, int m, int q, double theta,
                     const FitOptions& options = {});

struct DensityEstimate {
    double value = 0.0;          // corrected density; equals lambda0 when no
                                 // frame correction applies
    double lambda0 = 0.0;
    double log_likelihood = 0.0;
    SeriesCoefficients coefficients{{0.0}, 1, 0.25};
    double kth_distance = 0.0;   // R of the neighborhood frame, 0 when unused
    int neighbors_used = 0;
    bool degenerate = false;     // infinite-density sentinel
    std::vector<std::string> warnings;
};

/// Pointwise density at the frame origin: runs fit_series and reports
/// lambda_0 as the estimate in the scaled frame. Callers owning a
/// neighborhood frame apply the truncation and Jacobian corrections.
DensityEstimate density_at_origin(std::span<const double> radii, int m, int q,
                                  double theta, const FitOptions& options = {});

struct FunctionFit {
    std::vector<double> lambda;  // lambda[0] estimates h at the frame origin
    double objective = 0.0;      // sum of absolute residuals at the solution
    std::vector<std::string> warnings;
};

/// Pointwise function-value estimation: fits sum_j lambda_j r^j to the
/// observed values by least absolute deviations (iteratively reweighted
/// least squares with 1e-8 smoothing). No normalization constraint.
/// A rank-deficient design yields the minimum-norm solution and a warning.
FunctionFit fit_function_series(std::span<const double> radii,
                                std::span<const double> values, int m, int q,
                                double theta);

}  // namespace srde
