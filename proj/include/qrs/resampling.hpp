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

#ifndef QRS_RESAMPLING_HPP
#define QRS_RESAMPLING_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "qrs/amplification.hpp"
#include "qrs/amplitudes.hpp"
#include "qrs/oracles.hpp"
#include "qrs/statevector.hpp"

namespace qrs {

/// Known ratios tau_k in [0, 1] with max_k tau_k = 1.
class RatioVector {
   public:
    explicit RatioVector(std::vector<double> values);

    std::size_t size() const {
        return values_.size();
    }
    double operator[](std::size_t k) const {
        return values_[k];
    }
    const std::vector<double> &values() const {
        return values_;
    }

   private:
    std::vector<double> values_;
};

/// Level lengths T_l = ceil(c^l); `r` scales every coin sine so that
/// |eps| <= sqrt(3)/2.
struct Schedule {
    double c = 8.0 / 7.0;
    double delta = 0.25;
    double r = std::sqrt(3.0) / 2.0;
    int max_level = 60;
};

std::uint64_t level_length(const Schedule &schedule, int level);

/// 1/2 + 1/(2 T |eps|), clamped to 1. Requires 0 < |eps| <= sqrt(3)/2.
double level_failure_bound(std::uint64_t length, double epsilon_norm);

/// s_k = r min(1, alpha tau_k). Requires alpha >= 1.
CoinRotation resampling_rotation(const RatioVector &tau, double alpha, const Schedule &schedule = {});

/// eps = pi o (coin sines); the vector the run effectively resamples to.
AmplitudeVector resampling_epsilon(
    const AmplitudeVector &pi, const RatioVector &tau, double alpha, const Schedule &schedule = {});

/// sigma = pi o tau / |pi o tau|. For verification only.
AmplitudeVector resampling_target(const AmplitudeVector &pi, const RatioVector &tau);

/// Upper bound on the expected number of reflections, 128 / |eps|.
double expected_query_bound(double epsilon_norm);

struct LevelRecord {
    int level;
    std::uint64_t length;
    std::uint64_t rounds;
    bool accepted;
};

struct ResamplingResult {
    /// Post-measurement state; the coin is |1>.
    QuantumState final_state;
    std::uint64_t queries;
    std::uint64_t reflections;
    /// -1 when the first coin measurement already succeeded.
    int accepted_level;
    std::vector<LevelRecord> levels;
};

/// Resampling from one copy of |pi^xi> and a reflection oracle. `initial`
/// lacks the coin; the reflection targets either |pi^xi> (same registers as
/// `initial`) or |pi^xi>|0>. Throws NumericalError if no level up to
/// schedule.max_level accepts.
ResamplingResult run_asqrs(
    const QuantumState &initial,
    const ReflectionOracle &reflection,
    const RatioVector &tau,
    double alpha,
    Rng &rng,
    const Schedule &schedule = {});

}  // namespace qrs

#endif
