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
#include "srde/fit.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "srde/kernels.hpp"

namespace srde {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_inputs(std::span<const double> radii, int m, int q, double theta) {
    if (m < 1) {
        throw std::invalid_argument("fit: m must be >= 1");
    }
    if (q < 0 || q > kMaxSeriesOrder) {
        throw std::invalid_argument("fit: series order q must lie in [0, " +
                                    std::to_string(kMaxSeriesOrder) + "], got " +
                                    std::to_string(q));
    }
    if (!(theta > 0.0 && theta < 0.5)) {
        throw std::invalid_argument("fit: theta must lie in (0, 0.5), got " +
                                    std::to_string(theta));
    }
    if (radii.empty()) {
        throw std::invalid_argument("fit: empty radius sample");
    }
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] >= 0.0) || radii[i] > theta) {
            throw std::invalid_argument("fit: radius " + std::to_string(radii[i]) +
                                        " at index " + std::to_string(i) +
                                        " outside [0, theta]");
        }
    }
}

// The reduced problem after eliminating lambda_0 through the unit-integral
// constraint: x = (lambda_1..lambda_q), lambda_0 = (1 - sum a_j x_j) / a_0.
struct Likelihood {
    std::span<const double> radii;
    int q;
    std::vector<double> a;          // normalization weights
    std::vector<double> grid;       // positivity check radii over [0, theta]
    double penalty = 0.0;           // weight of the grid-positivity penalty

    mutable std::vector<double> p_samples;
    mutable std::vector<double> p_grid;
    mutable std::vector<double> weights;

    Likelihood(std::span<const double> r, int q_, std::vector<double> a_,
               std::vector<double> grid_)
        : radii(r), q(q_), a(std::move(a_)), grid(std::move(grid_)),
          p_samples(r.size()), p_grid(grid.size()), weights(r.size()) {}

    void lambda_of(const Eigen::VectorXd& x, std::vector<double>& lam) const {
        lam.resize(q + 1);
        double dot = 0.0;
        for (int j = 1; j <= q; ++j) {
            lam[j] = x[j - 1];
            dot += a[j] * x[j - 1];
        }
        lam[0] = (1.0 - dot) / a[0];
    }

    // Negative log-likelihood, +inf wherever the series is nonpositive at a
    // sample radius (extended-value objective).
    double value(const std::vector<double>& lam) const {
        kernels::polynomial_eval(radii.data(), radii.size(), lam.data(), q,
                                 p_samples.data());
        double nll = 0.0;
        for (double p : p_samples) {
            if (!(p > 0.0)) {
                return kInf;
            }
            nll -= std::log(p);
        }
        if (penalty > 0.0) {
            kernels::polynomial_eval(grid.data(), grid.size(), lam.data(), q,
                                     p_grid.data());
            double viol = 0.0;
            for (double p : p_grid) {
                const double v = std::max(0.0, -p);
                viol += v * v;
            }
            nll += penalty * viol;
        }
        return nll;
    }

    // Gradient of the negative log-likelihood in x; valid only after a
    // finite value() call (p_samples holds positive series values).
    void gradient(const std::vector<double>& lam, Eigen::VectorXd& g) const {
        const std::size_t n = radii.size();
        for (std::size_t i = 0; i < n; ++i) {
            weights[i] = 1.0 / p_samples[i];
        }
        std::vector<double> sums(q + 1);
        kernels::weighted_power_sums(radii.data(), weights.data(), n, q,
                                     sums.data());
        g.resize(q);
        for (int j = 1; j <= q; ++j) {
            g[j - 1] = -(sums[j] - a[j] / a[0] * sums[0]);
        }
        if (penalty > 0.0) {
            kernels::polynomial_eval(grid.data(), grid.size(), lam.data(), q,
                                     p_grid.data());
            std::vector<double> vio(grid.size());
            for (std::size_t i = 0; i < grid.size(); ++i) {
                vio[i] = std::max(0.0, -p_grid[i]);
            }
            std::vector<double> t(q + 1);
            kernels::weighted_power_sums(grid.data(), vio.data(), grid.size(), q,
                                         t.data());
            for (int j = 1; j <= q; ++j) {
                g[j - 1] += -2.0 * penalty * (t[j] - a[j] / a[0] * t[0]);
            }
        }
    }

    double grid_min(const std::vector<double>& lam) const {
        kernels::polynomial_eval(grid.data(), grid.size(), lam.data(), q,
                                 p_grid.data());
        return *std::min_element(p_grid.begin(), p_grid.end());
    }
};

struct BfgsOutcome {
    Eigen::VectorXd x;
    double nll = kInf;
    int iterations = 0;
};

// BFGS with backtracking Armijo line search on the extended-value
// objective. The log of a linear function is concave, so any feasible
// start reaches the constrained optimum.
BfgsOutcome minimize(const Likelihood& prob, Eigen::VectorXd x,
                     const FitOptions& opt) {
    const int q = prob.q;
    std::vector<double> lam;
    BfgsOutcome out;

    prob.lambda_of(x, lam);
    double f = prob.value(lam);
    if (!std::isfinite(f)) {
        return out;  // infeasible start, nll stays +inf
    }
    Eigen::VectorXd g(q);
    prob.gradient(lam, g);

    Eigen::MatrixXd h_inv = Eigen::MatrixXd::Identity(q, q);
    Eigen::VectorXd x_new(q), g_new(q);

    int iter = 0;
    for (; iter < opt.max_iterations; ++iter) {
        if (g.norm() < opt.gradient_tolerance) {
            break;
        }
        Eigen::VectorXd d = -h_inv * g;
        double slope = g.dot(d);
        if (slope >= 0.0) {
            h_inv.setIdentity();
            d = -g;
            slope = g.dot(d);
        }
        double step = 1.0;
        double f_new = kInf;
        bool accepted = false;
        for (int half = 0; half < 60; ++half) {
            x_new = x + step * d;
            prob.lambda_of(x_new, lam);
            f_new = prob.value(lam);
            if (std::isfinite(f_new) && f_new <= f + 1e-4 * step * slope) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            break;
        }
        prob.gradient(lam, g_new);
        const Eigen::VectorXd s = x_new - x;
        const Eigen::VectorXd y = g_new - g;
        const double sy = s.dot(y);
        if (sy > 1e-12 * s.norm() * y.norm()) {
            const Eigen::VectorXd hy = h_inv * y;
            const double yhy = y.dot(hy);
            h_inv += ((sy + yhy) / (sy * sy)) * (s * s.transpose()) -
                     (hy * s.transpose() + s * hy.transpose()) / sy;
        }
        x = x_new;
        g = g_new;
        f = f_new;
    }

    out.x = x;
    out.nll = f;
    out.iterations = iter;
    return out;
}

std::vector<double> positivity_grid(double theta, int points) {
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i) {
        grid[i] = theta * i / (points - 1);
    }
    grid.back() = theta;
    return grid;
}

double log_likelihood_of(const Likelihood& prob, const std::vector<double>& lam) {
    const double nll_pen = prob.value(lam);
    if (!std::isfinite(nll_pen)) {
        return -kInf;
    }
    double ll = 0.0;
    for (double p : prob.p_samples) {
        ll += std::log(p);
    }
    return ll;
}

}  // namespace

FitResult fit_series(std::span<const double> radii, int m, int q, double theta,
                     const FitOptions& options) {
    validate_inputs(radii, m, q, theta);

    std::vector<std::string> warnings;
    if (radii.size() < static_cast<std::size_t>(q) + 1) {
        warnings.push_back("sample size " + std::to_string(radii.size()) +
                           " below recommended q+1 = " + std::to_string(q + 1));
    }

    auto a = normalization_weights(m, q, theta);
    const double lambda0_flat = 1.0 / a[0];  // the q = 0 solution

    if (q == 0) {
        SeriesCoefficients coeffs({lambda0_flat}, m, theta);
        FitResult result{std::move(coeffs),
                         static_cast<double>(radii.size()) * std::log(lambda0_flat),
                         0, 0, std::move(warnings)};
        return result;
    }

    Likelihood prob(radii, q, a, positivity_grid(theta, options.positivity_grid));

    // Multi-start: the always-feasible flat solution plus seeded
    // perturbations, shrunk toward it until feasible.
    std::vector<Eigen::VectorXd> starts;
    starts.emplace_back(Eigen::VectorXd::Zero(q));
    std::mt19937_64 rng(options.seed);
    auto next_normal = [&rng]() {
        // Box-Muller on explicit 53-bit uniforms; keeps restarts identical
        // across standard library implementations.
        const double u1 = 1.0 - std::ldexp(static_cast<double>(rng() >> 11), -53);
        const double u2 = std::ldexp(static_cast<double>(rng() >> 11), -53);
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    };
    std::vector<double> lam;
    for (int s = 0; s < options.random_starts; ++s) {
        Eigen::VectorXd x(q);
        double theta_pow = theta;
        for (int j = 1; j <= q; ++j) {
            x[j - 1] = 0.3 * lambda0_flat * next_normal() / theta_pow;
            theta_pow *= theta;
        }
        for (int shrink = 0; shrink < 60; ++shrink) {
            prob.lambda_of(x, lam);
            if (std::isfinite(prob.value(lam))) {
                break;
            }
            x *= 0.5;
        }
        prob.lambda_of(x, lam);
        if (std::isfinite(prob.value(lam))) {
            starts.push_back(std::move(x));
        }
    }

    BfgsOutcome best;
    int best_start = 0;
    for (std::size_t s = 0; s < starts.size(); ++s) {
        BfgsOutcome candidate = minimize(prob, starts[s], options);
        if (candidate.nll < best.nll) {
            best = std::move(candidate);
            best_start = static_cast<int>(s);
        }
    }
    if (!std::isfinite(best.nll)) {
        throw FitError("fit_series: no feasible positive series found");
    }

    prob.lambda_of(best.x, lam);

    // The extended-value objective enforces positivity at sample radii only;
    // check the whole interval and push back with a penalty if needed.
    if (prob.grid_min(lam) < 0.0) {
        warnings.push_back("series dipped negative between samples; penalized refit");
        bool repaired = false;
        Eigen::VectorXd x = best.x;
        for (double penalty = 1e4; penalty <= 1e12; penalty *= 100.0) {
            prob.penalty = penalty;
            BfgsOutcome refit = minimize(prob, x, options);
            if (std::isfinite(refit.nll)) {
                x = refit.x;
                best.iterations += refit.iterations;
            }
            prob.penalty = 0.0;
            prob.lambda_of(x, lam);
            if (prob.grid_min(lam) >= -1e-12 * std::max(1.0, std::abs(lam[0]))) {
                best.x = x;
                repaired = true;
                break;
            }
        }
        if (!repaired) {
            throw FitError("fit_series: positivity on [0, theta] could not be enforced");
        }
        prob.lambda_of(best.x, lam);
    }

    const double ll = log_likelihood_of(prob, lam);
    FitResult result{SeriesCoefficients(lam, m, theta), ll, best.iterations,
                     best_start, std::move(warnings)};
    return result;
}

DensityEstimate density_at_origin(std::span<const double> radii, int m, int q,
                                  double theta, const FitOptions& options) {
    FitResult fit = fit_series(radii, m, q, theta, options);
    DensityEstimate est;
    est.lambda0 = fit.coefficients.lambda()[0];
    est.value = est.lambda0;
    est.log_likelihood = fit.log_likelihood;
    est.coefficients = std::move(fit.coefficients);
    est.neighbors_used = static_cast<int>(radii.size());
    est.warnings = std::move(fit.warnings);
    return est;
}

FunctionFit fit_function_series(std::span<const double> radii,
                                std::span<const double> values, int m, int q,
                                double theta) {
    validate_inputs(radii, m, q, theta);
    if (values.size() != radii.size()) {
        throw std::invalid_argument("fit_function_series: radii/values length mismatch");
    }

    const auto n = static_cast<Eigen::Index>(radii.size());
    const int cols = q + 1;
    Eigen::MatrixXd design(n, cols);
    Eigen::VectorXd rhs(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double power = 1.0;
        for (int j = 0; j < cols; ++j) {
            design(i, j) = power;
            power *= radii[i];
        }
        rhs[i] = values[i];
    }

    FunctionFit fit;
    auto cod = design.completeOrthogonalDecomposition();
    if (cod.rank() < cols) {
        fit.warnings.push_back("rank-deficient design (rank " +
                               std::to_string(cod.rank()) + " of " +
                               std::to_string(cols) + "); minimum-norm solution");
    }
    Eigen::VectorXd x = cod.solve(rhs);

    // IRLS for the least-absolute-deviations objective.
    constexpr double kSmoothing = 1e-8;
    constexpr int kMaxIterations = 100;
    Eigen::VectorXd residual(n), w(n);
    for (int iter = 0; iter < kMaxIterations; ++iter) {
        residual = rhs - design * x;
        for (Eigen::Index i = 0; i < n; ++i) {
            w[i] = std::sqrt(1.0 / std::sqrt(residual[i] * residual[i] +
                                             kSmoothing * kSmoothing));
        }
        Eigen::MatrixXd weighted = w.asDiagonal() * design;
        Eigen::VectorXd target = w.asDiagonal() * rhs;
        Eigen::VectorXd x_new =
            weighted.completeOrthogonalDecomposition().solve(target);
        const double delta = (x_new - x).cwiseAbs().maxCoeff();
        x = x_new;
        if (delta < 1e-12 * (1.0 + x.cwiseAbs().maxCoeff())) {
            break;
        }
    }

    residual = rhs - design * x;
    fit.lambda.assign(x.data(), x.data() + cols);
    fit.objective = residual.cwiseAbs().sum();
    return fit;
}

}  // namespace srde
