// Copyright 2026 The QRS Workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrs/waterfill.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <Eigen/Eigenvalues>

#include "qrs/errors.hpp"

namespace qrs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_pair(const AmplitudeVector &pi, const AmplitudeVector &sigma) {
    if (pi.size() == 0 || pi.size() != sigma.size()) {
        throw InvalidInput("pi and sigma must have the same positive length");
    }
    if (std::abs(pi.norm() - 1.0) > kConstructionTolerance || std::abs(sigma.norm() - 1.0) > kConstructionTolerance) {
        throw InvalidInput("pi and sigma must be unit vectors");
    }
}

double p_of_epsilon(const AmplitudeVector &sigma, const AmplitudeVector &eps) {
    double n = eps.norm();
    if (n == 0) {
        throw InvalidInput("epsilon vanishes; p is undefined");
    }
    double c = sigma.dot(eps) / n;
    return c * c;
}

// Past gamma_max on the sigma > 0 support, the only freedom left is how much
// of pi to admit on coordinates where sigma vanishes.
AmplitudeVector overflow_epsilon(const AmplitudeVector &pi, const AmplitudeVector &sigma, double level) {
    std::vector<double> e(pi.size());
    for (std::size_t k = 0; k < pi.size(); ++k) {
        e[k] = sigma[k] > 0 ? pi[k] : std::min(pi[k], level);
    }
    return AmplitudeVector(std::move(e));
}

// Largest x in [lo, hi] with f(x) >= target, for f non-increasing.
double bisect(const std::function<double(double)> &f, double lo, double hi, double target, int &iterations) {
    iterations = 0;
    while (iterations < kMaxBisectionIterations) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        ++iterations;
        if (f(mid) >= target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if (std::abs(f(lo) - target) > kBisectionTolerance) {
        throw NumericalError("water-filling bisection did not converge");
    }
    return lo;
}

}  // namespace

WaterFillBounds compute_bounds(const AmplitudeVector &pi, const AmplitudeVector &sigma) {
    validate_pair(pi, sigma);
    double sp = sigma.dot(pi);
    WaterFillBounds b{sp * sp, 0.0, kInf, 0.0};
    for (std::size_t k = 0; k < pi.size(); ++k) {
        if (pi[k] <= 0) {
            continue;
        }
        b.p_max += sigma[k] * sigma[k];
        double ratio = sigma[k] > 0 ? pi[k] / sigma[k] : kInf;
        b.gamma_min = std::min(b.gamma_min, ratio);
        b.gamma_max = std::max(b.gamma_max, ratio);
    }
    return b;
}

AmplitudeVector epsilon_of_gamma(const AmplitudeVector &pi, const AmplitudeVector &sigma, double gamma) {
    if (pi.size() != sigma.size()) {
        throw InvalidInput("pi and sigma must have the same length");
    }
    if (!(gamma >= 0)) {
        throw InvalidInput("gamma must be nonnegative");
    }
    std::vector<double> e(pi.size());
    for (std::size_t k = 0; k < pi.size(); ++k) {
        e[k] = std::isinf(gamma) ? pi[k] : std::min(pi[k], gamma * sigma[k]);
    }
    return AmplitudeVector(std::move(e));
}

double p_of_gamma(const AmplitudeVector &pi, const AmplitudeVector &sigma, double gamma) {
    return p_of_epsilon(sigma, epsilon_of_gamma(pi, sigma, gamma));
}

WaterFillSolution waterfill(const AmplitudeVector &pi, const AmplitudeVector &sigma, double p) {
    WaterFillBounds b = compute_bounds(pi, sigma);
    if (!(p >= b.p_min - kEndpointTolerance && p <= b.p_max + kEndpointTolerance)) {
        throw InfeasibleProbability("target p outside [p_min, p_max]", p, b.p_min, b.p_max);
    }
    auto finish = [&](double gamma, AmplitudeVector eps, int iterations) {
        double achieved = p_of_epsilon(sigma, eps);
        double objective = eps.norm() * eps.norm();
        return WaterFillSolution{gamma, std::move(eps), achieved, objective, b, iterations};
    };

    if (p <= b.p_min + kEndpointTolerance) {
        return finish(b.gamma_max, pi, 0);
    }
    if (p >= b.p_max - kEndpointTolerance) {
        std::vector<double> e(pi.size(), 0.0);
        for (std::size_t k = 0; k < pi.size(); ++k) {
            e[k] = pi[k] > 0 ? b.gamma_min * sigma[k] : 0.0;
        }
        return finish(b.gamma_min, AmplitudeVector(std::move(e)), 0);
    }

    // gamma beyond which every sigma_k > 0 coordinate is saturated.
    double gamma_sat = 0;
    double overflow_cap = 0;
    for (std::size_t k = 0; k < pi.size(); ++k) {
        if (sigma[k] > 0) {
            gamma_sat = std::max(gamma_sat, pi[k] / sigma[k]);
        } else {
            overflow_cap = std::max(overflow_cap, pi[k]);
        }
    }
    int iterations = 0;
    if (p_of_gamma(pi, sigma, gamma_sat) <= p) {
        auto f = [&](double g) { return p_of_gamma(pi, sigma, g); };
        double g = bisect(f, b.gamma_min, gamma_sat, p, iterations);
        return finish(g, epsilon_of_gamma(pi, sigma, g), iterations);
    }
    auto f = [&](double level) { return p_of_epsilon(sigma, overflow_epsilon(pi, sigma, level)); };
    double level = bisect(f, 0.0, overflow_cap, p, iterations);
    return finish(kInf, overflow_epsilon(pi, sigma, level), iterations);
}

DualWitness dual_witness(
    const AmplitudeVector &pi, const AmplitudeVector &sigma, double p, const WaterFillSolution &solution) {
    validate_pair(pi, sigma);
    const AmplitudeVector &eps = solution.epsilon;
    if (eps.size() != pi.size()) {
        throw InvalidInput("solution does not match the instance");
    }
    const std::size_t n = pi.size();
    const double norm2 = eps.norm() * eps.norm();
    const double se = sigma.dot(eps);

    // rho_k stands for sigma_k / eps_k. An unsaturated coordinate with
    // sigma_k = 0 has eps_k = gamma sigma_k in the limit, so rho_k = 1/gamma.
    std::vector<double> rho(n, kInf);
    double weighted = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (pi[k] <= 0) {
            continue;
        }
        if (eps[k] > 0) {
            rho[k] = sigma[k] / eps[k];
        } else if (sigma[k] == 0) {
            rho[k] = 1.0 / solution.gamma_bar;
        } else {
            throw InvalidInput("epsilon vanishes where pi and sigma do not");
        }
        weighted += rho[k] * pi[k] * pi[k];
    }

    DualWitness w{std::vector<double>(n, kInf), 0.0, 0.0};
    if (1.0 - norm2 <= 1e-14) {
        for (std::size_t k = 0; k < n; ++k) {
            if (pi[k] > 0) {
                w.lambda[k] = 1.0;
                w.objective += pi[k] * pi[k];
            }
        }
        return w;
    }
    double denominator = p - se * weighted;
    if (std::abs(denominator) <= 1e-14) {
        throw InvalidInput("no finite dual witness at p = p_max");
    }
    w.mu = (1.0 - norm2) / denominator;
    for (std::size_t k = 0; k < n; ++k) {
        if (pi[k] > 0) {
            w.lambda[k] = w.mu * (rho[k] * se - p) + 1.0;
            // Off the cap the exact value is 0; the cancellation residue grows
            // with mu and may land below it.
            if (eps[k] < pi[k]) {
                w.lambda[k] = std::max(w.lambda[k], 0.0);
            }
            w.objective += w.lambda[k] * pi[k] * pi[k];
        }
    }
    return w;
}

CertificateReport verify_duality(const AmplitudeVector &pi, const AmplitudeVector &sigma, double p) {
    WaterFillSolution sol = waterfill(pi, sigma, p);
    const WaterFillBounds &b = sol.bounds;
    CertificateReport r{};
    r.p = p;
    r.solution = sol;
    r.primal_objective = sol.objective;
    r.mode = CertificateReport::Mode::kInterior;
    if (p <= b.p_min + kEndpointTolerance) {
        r.mode = CertificateReport::Mode::kLowerEndpoint;
    } else if (p >= b.p_max - kEndpointTolerance) {
        r.mode = CertificateReport::Mode::kUpperEndpoint;
    }

    const AmplitudeVector &eps = sol.epsilon;
    r.diagonal_slack = kInf;
    for (std::size_t k = 0; k < pi.size(); ++k) {
        r.diagonal_slack = std::min(r.diagonal_slack, pi[k] * pi[k] - eps[k] * eps[k]);
    }
    double se = sigma.dot(eps);
    r.trace_slack = se * se - p * sol.objective;
    if (r.diagonal_slack < -kPrimalSlackTolerance) {
        r.violations.push_back("primal diagonal constraint violated");
    }
    if (r.trace_slack < -kPrimalSlackTolerance) {
        r.violations.push_back("primal trace constraint violated");
    }

    if (r.mode == CertificateReport::Mode::kUpperEndpoint) {
        // The dual optimum is approached only as mu grows without bound.
        r.dual_available = false;
        r.min_multiplier = 0;
        r.min_eigenvalue = 0;
        double closed_form = b.gamma_min * b.gamma_min * b.p_max;
        r.relative_gap = std::abs(closed_form - sol.objective) / std::max(1.0, closed_form);
        if (r.relative_gap > kGapTolerance) {
            r.violations.push_back("endpoint objective differs from gamma_min^2 p_max");
        }
        return r;
    }

    r.dual_available = true;
    r.witness = dual_witness(pi, sigma, p, sol);
    r.min_multiplier = r.witness.mu;
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < pi.size(); ++k) {
        if (pi[k] > 0) {
            support.push_back(k);
            r.min_multiplier = std::min(r.min_multiplier, r.witness.lambda[k]);
        }
    }
    const auto m = static_cast<Eigen::Index>(support.size());
    Eigen::MatrixXd slack(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            double s = -r.witness.mu * sigma[support[i]] * sigma[support[j]];
            if (i == j) {
                s += r.witness.lambda[support[i]] - 1.0 + r.witness.mu * p;
            }
            slack(i, j) = s;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(slack, Eigen::EigenvaluesOnly);
    r.min_eigenvalue = solver.eigenvalues().minCoeff();
    r.relative_gap =
        std::abs(r.witness.objective - r.primal_objective) / std::max(std::abs(r.primal_objective), 1e-300);

    if (r.min_multiplier < -kMultiplierTolerance) {
        r.violations.push_back("negative dual multiplier");
    }
    if (r.min_eigenvalue < -kEigenvalueTolerance) {
        r.violations.push_back("dual slack matrix not positive semidefinite");
    }
    if (r.relative_gap > kGapTolerance) {
        r.violations.push_back("duality gap exceeds tolerance");
    }
    return r;
}

std::string to_string(CertificateReport::Mode mode) {
    switch (mode) {
        case CertificateReport::Mode::kInterior:
            return "interior";
        case CertificateReport::Mode::kLowerEndpoint:
            return "p_min";
        case CertificateReport::Mode::kUpperEndpoint:
            return "p_max";
    }
    return "unknown";
}

}  // namespace qrs
