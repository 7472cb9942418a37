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

#ifndef QRS_AMPLIFICATION_HPP
#define QRS_AMPLIFICATION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qrs/amplitudes.hpp"
#include "qrs/oracles.hpp"
#include "qrs/statevector.hpp"

namespace qrs {

/// Per-index coin rotation
///     |k>|0> -> |k>(sqrt(1 - s_k^2)|0> + s_k|1>)
/// on the last register (a qubit), with k read from the registers just before
/// it. For resampling s_k = eps_k / pi_k.
class CoinRotation {
   public:
    explicit CoinRotation(std::vector<double> sines);

    std::size_t size() const {
        return sines_.size();
    }
    const std::vector<double> &sines() const {
        return sines_;
    }

   private:
    std::vector<double> sines_;
};

/// s_k = eps_k / pi_k, identity where pi_k = 0. Requires eps <= pi.
CoinRotation rotation_R(const AmplitudeVector &pi, const AmplitudeVector &epsilon);

QuantumState apply_rotation(const QuantumState &state, const CoinRotation &rotation, bool inverse);

/// R (O x I)|0..0>|0> = sum_k |xi_k>|k>(sqrt(pi_k^2 - eps_k^2)|0> + eps_k|1>).
/// One query.
QuantumState build_state_psi_eps(const Preparation &oracle, const CoinRotation &rotation);

/// `iterations` rounds of
///     Z_coin, R^dagger, reflection, R
/// times -1 (a global phase), so the good component follows
/// sin((2t+1) theta) with a positive sign.
/// The reflection either spans the whole state (target |pi^xi>|0>) or every
/// register but the coin (target |pi^xi>), in which case it runs controlled on
/// coin = 0. One reflection application per round.
QuantumState subroutine_sqrs(
    const QuantumState &state,
    const CoinRotation &rotation,
    const ReflectionOracle &reflection,
    std::uint64_t iterations);

/// Angles that turn a sin(theta) = |eps| overlap into an exact rotation onto
/// the good subspace after `iterations` rounds.
struct ExactAngles {
    double theta;
    std::uint64_t iterations;
    double theta_tilde;
    /// sin(theta_tilde) / sin(theta), in [1/2, 1].
    double r;
};

ExactAngles exact_angles(double epsilon_norm);

struct ExactPlan {
    double p;
    /// Water-filling solution, or pi itself at or below p_min.
    AmplitudeVector epsilon;
    /// r * epsilon; the vector the coin rotation uses.
    AmplitudeVector epsilon_scaled;
    ExactAngles angles;
    bool lower_endpoint;

    /// 2 per round plus the initial preparation.
    std::uint64_t queries() const {
        return 2 * angles.iterations + 1;
    }
};

/// Throws InfeasibleProbability for p > p_max. Any p <= p_min yields the
/// one-query plan that prepares pi and forces the coin to |1>.
ExactPlan plan_exact(const AmplitudeVector &pi, const AmplitudeVector &sigma, double p);

/// Plan for an arbitrary eps <= pi; `p` is recorded as given.
ExactPlan plan_for_epsilon(const AmplitudeVector &pi, const AmplitudeVector &epsilon, double p);

struct RunResult {
    /// Post-measurement state over the oracle registers and the coin.
    QuantumState final_state;
    bool accept;
    /// Exact Born probability of coin = 1 before measuring.
    double accept_probability;
    std::uint64_t queries;
    std::uint64_t iterations;
    /// Re <reference | final_state>, when a reference was supplied.
    std::optional<double> success_overlap;
};

/// Exact amplification with a preparation oracle. `reference` is the
/// verification target sum_k sigma_k |xi_k>|k>|1>; the algorithm never reads it.
RunResult run_aqrs(
    const Preparation &oracle,
    const AmplitudeVector &pi,
    const ExactPlan &plan,
    Rng &rng,
    const std::optional<QuantumState> &reference = std::nullopt);

RunResult run_aqrs(
    const Preparation &oracle,
    const AmplitudeVector &pi,
    const AmplitudeVector &sigma,
    double p,
    Rng &rng,
    const std::optional<QuantumState> &reference = std::nullopt);

/// sum_k w_k |xi_k>|k> on registers [d, n]. A fixture for building
/// verification targets; `w` must be a unit vector.
QuantumState hidden_superposition(const AmplitudeVector &w, const HiddenStates &xi);

}  // namespace qrs

#endif
