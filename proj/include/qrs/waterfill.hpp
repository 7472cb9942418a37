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

#ifndef QRS_WATERFILL_HPP
#define QRS_WATERFILL_HPP

#include <string>
#include <vector>

#include "qrs/amplitudes.hpp"

namespace qrs {

inline constexpr double kBisectionTolerance = 1e-10;
inline constexpr int kMaxBisectionIterations = 200;
/// Targets this close to p_min or p_max take the closed-form endpoint.
inline constexpr double kEndpointTolerance = 1e-12;

struct WaterFillBounds {
    double p_min;
    double p_max;
    double gamma_min;
    /// +infinity when some sigma_k = 0 has pi_k > 0.
    double gamma_max;
};

/// Both inputs must be unit vectors of equal length.
WaterFillBounds compute_bounds(const AmplitudeVector &pi, const AmplitudeVector &sigma);

/// eps_k = min(pi_k, gamma * sigma_k).
AmplitudeVector epsilon_of_gamma(const AmplitudeVector &pi, const AmplitudeVector &sigma, double gamma);

/// (sigma . eps / |eps|)^2 at eps = epsilon_of_gamma. Throws InvalidInput when
/// eps vanishes.
double p_of_gamma(const AmplitudeVector &pi, const AmplitudeVector &sigma, double gamma);

/// The unique maximizer of |eps| subject to eps_k <= pi_k and
/// sigma . eps / |eps| >= sqrt(p).
struct WaterFillSolution {
    /// +infinity once every sigma_k > 0 coordinate is saturated and the
    /// remaining mass sits on coordinates with sigma_k = 0.
    double gamma_bar;
    AmplitudeVector epsilon;
    /// (sigma . eps / |eps|)^2, never below the requested p by more than
    /// rounding.
    double p_achieved;
    /// |eps|^2, the value of the relaxed program.
    double objective;
    WaterFillBounds bounds;
    int iterations;
};

/// Throws InfeasibleProbability outside [p_min, p_max].
WaterFillSolution waterfill(const AmplitudeVector &pi, const AmplitudeVector &sigma, double p);

/// Multipliers for the dual program min sum lambda_k pi_k^2 subject to
/// Lambda - I + mu (p I - sigma sigma^T) >= 0. Entries with pi_k = 0 do not
/// enter the objective and are reported as +infinity.
struct DualWitness {
    std::vector<double> lambda;
    double mu;
    double objective;
};

/// Closed-form witness for `solution`. At p = p_min it is (lambda = 1, mu = 0).
/// Throws InvalidInput at p = p_max, where no finite witness exists.
DualWitness dual_witness(
    const AmplitudeVector &pi, const AmplitudeVector &sigma, double p, const WaterFillSolution &solution);

struct CertificateReport {
    enum class Mode { kInterior, kLowerEndpoint, kUpperEndpoint };

    Mode mode;
    double p;
    WaterFillSolution solution;
    double primal_objective;
    /// min_k (pi_k^2 - eps_k^2).
    double diagonal_slack;
    /// (sigma . eps)^2 - p |eps|^2.
    double trace_slack;
    bool dual_available;
    DualWitness witness;
    double min_multiplier;
    /// Smallest eigenvalue of the dual slack matrix on the support of pi.
    double min_eigenvalue;
    double relative_gap;
    std::vector<std::string> violations;

    bool pass() const {
        return violations.empty();
    }
};

inline constexpr double kGapTolerance = 1e-8;
inline constexpr double kMultiplierTolerance = 1e-12;
inline constexpr double kEigenvalueTolerance = 1e-10;
inline constexpr double kPrimalSlackTolerance = 1e-12;

/// Solves, builds the witness, and checks primal feasibility, dual
/// feasibility and the gap. At p = p_max the dual is replaced by the
/// closed-form value gamma_min^2 p_max.
CertificateReport verify_duality(const AmplitudeVector &pi, const AmplitudeVector &sigma, double p);

std::string to_string(CertificateReport::Mode mode);

}  // namespace qrs

#endif
