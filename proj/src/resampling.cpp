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

#include "qrs/resampling.hpp"

#include <algorithm>
#include <string>

namespace qrs {

RatioVector::RatioVector(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw InvalidInput("tau is empty");
    }
    double top = 0;
    for (double t : values_) {
        if (!(t >= 0 && t <= 1 + kConstructionTolerance)) {
            throw InvalidInput("tau entries must lie in [0, 1]");
        }
        top = std::max(top, t);
    }
    if (std::abs(top - 1.0) > kConstructionTolerance) {
        throw InvalidInput("max tau must equal 1");
    }
    for (double &t : values_) {
        t = std::min(t, 1.0);
    }
}

std::uint64_t level_length(const Schedule &schedule, int level) {
    if (level < 0) {
        throw InvalidInput("negative level");
    }
    // Exact powers such as c^0 must not round up.
    double v = std::pow(schedule.c, level);
    return static_cast<std::uint64_t>(std::ceil(v - 1e-9 * v));
}

double level_failure_bound(std::uint64_t length, double epsilon_norm) {
    if (!(epsilon_norm > 0 && epsilon_norm <= std::sqrt(3.0) / 2 + kConstructionTolerance)) {
        throw InvalidInput("failure bound needs 0 < |eps| <= sqrt(3)/2");
    }
    if (length == 0) {
        throw InvalidInput("level length must be positive");
    }
    return std::min(1.0, 0.5 + 1.0 / (2.0 * static_cast<double>(length) * epsilon_norm));
}

CoinRotation resampling_rotation(const RatioVector &tau, double alpha, const Schedule &schedule) {
    if (!(alpha >= 1)) {
        throw InvalidInput("alpha must be at least 1");
    }
    if (!(schedule.r > 0 && schedule.r <= 1)) {
        throw InvalidInput("schedule r must lie in (0, 1]");
    }
    std::vector<double> s(tau.size());
    for (std::size_t k = 0; k < tau.size(); ++k) {
        s[k] = schedule.r * std::min(1.0, alpha * tau[k]);
    }
    return CoinRotation(std::move(s));
}

AmplitudeVector resampling_epsilon(
    const AmplitudeVector &pi, const RatioVector &tau, double alpha, const Schedule &schedule) {
    if (pi.size() != tau.size()) {
        throw InvalidInput("pi and tau differ in length");
    }
    CoinRotation rot = resampling_rotation(tau, alpha, schedule);
    std::vector<double> e(pi.size());
    for (std::size_t k = 0; k < pi.size(); ++k) {
        e[k] = pi[k] * rot.sines()[k];
    }
    return AmplitudeVector(std::move(e));
}

AmplitudeVector resampling_target(const AmplitudeVector &pi, const RatioVector &tau) {
    if (pi.size() != tau.size()) {
        throw InvalidInput("pi and tau differ in length");
    }
    std::vector<double> v(pi.size());
    for (std::size_t k = 0; k < pi.size(); ++k) {
        v[k] = pi[k] * tau[k];
    }
    return AmplitudeVector(std::move(v)).normalized();
}

double expected_query_bound(double epsilon_norm) {
    return 128.0 / epsilon_norm;
}

ResamplingResult run_asqrs(
    const QuantumState &initial,
    const ReflectionOracle &reflection,
    const RatioVector &tau,
    double alpha,
    Rng &rng,
    const Schedule &schedule) {
    std::vector<std::size_t> with_coin = initial.register_dims();
    with_coin.push_back(2);
    if (reflection.dims() != initial.register_dims() && reflection.dims() != with_coin) {
        throw InvalidInput("reflection oracle does not match the initial state");
    }
    const std::size_t coin = with_coin.size() - 1;
    const std::uint64_t queries_before = reflection.queries();
    const std::uint64_t reflections_before = reflection.applications();
    CoinRotation rotation = resampling_rotation(tau, alpha, schedule);

    QuantumState s = apply_rotation(initial.with_register(2), rotation, false);
    Measurement m = measure_register(s, coin, rng);
    ResamplingResult result{m.post_state, 0, 0, -1, {}};
    auto finish = [&]() {
        result.queries = reflection.queries() - queries_before;
        result.reflections = reflection.applications() - reflections_before;
        return result;
    };
    if (m.outcome == 1) {
        return finish();
    }
    s = m.post_state;
    for (int level = 0; level <= schedule.max_level; ++level) {
        std::uint64_t length = level_length(schedule, level);
        std::uint64_t rounds = std::uniform_int_distribution<std::uint64_t>(1, length)(rng);
        s = subroutine_sqrs(s, rotation, reflection, rounds);
        m = measure_register(s, coin, rng);
        result.levels.push_back(LevelRecord{level, length, rounds, m.outcome == 1});
        if (m.outcome == 1) {
            result.final_state = m.post_state;
            result.accepted_level = level;
            return finish();
        }
        s = m.post_state;
    }
    throw NumericalError("resampling did not accept by level " + std::to_string(schedule.max_level));
}

}  // namespace qrs
