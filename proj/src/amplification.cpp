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

#include "qrs/amplification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qrs/waterfill.hpp"

namespace qrs {

CoinRotation::CoinRotation(std::vector<double> sines) : sines_(std::move(sines)) {
    if (sines_.empty()) {
        throw InvalidInput("coin rotation needs at least one index");
    }
    for (double &s : sines_) {
        if (!(s >= 0 && s <= 1 + kConstructionTolerance)) {
            throw InvalidInput("coin rotation sine outside [0, 1]");
        }
        s = std::min(s, 1.0);
    }
}

CoinRotation rotation_R(const AmplitudeVector &pi, const AmplitudeVector &epsilon) {
    if (pi.size() != epsilon.size()) {
        throw InvalidInput("pi and epsilon must have the same length");
    }
    std::vector<double> s(pi.size(), 0.0);
    for (std::size_t k = 0; k < pi.size(); ++k) {
        if (pi[k] > 0) {
            s[k] = epsilon[k] / pi[k];
        } else if (epsilon[k] > 0) {
            throw InvalidInput("epsilon_k > 0 where pi_k = 0");
        }
    }
    return CoinRotation(std::move(s));
}

namespace {

void check_index_layout(const QuantumState &state, std::size_t n) {
    const auto &dims = state.register_dims();
    if (dims.size() < 2 || dims.back() != 2) {
        throw InvalidInput("last register must be the coin qubit");
    }
    std::size_t product = 1;
    for (std::size_t r = dims.size() - 1; r-- > 0;) {
        product *= dims[r];
        if (product == n) {
            return;
        }
        if (product > n) {
            break;
        }
    }
    throw InvalidInput("no trailing registers match the rotation's index dimension");
}

}  // namespace

QuantumState apply_rotation(const QuantumState &state, const CoinRotation &rotation, bool inverse) {
    const std::size_t n = rotation.size();
    check_index_layout(state, n);
    Eigen::VectorXcd v = state.amplitudes();
    const double sign = inverse ? -1.0 : 1.0;
    for (std::size_t i = 0; i < state.size(); i += 2) {
        double s = sign * rotation.sines()[(i / 2) % n];
        double c = std::sqrt(std::max(0.0, 1.0 - s * s));
        auto a0 = v[static_cast<Eigen::Index>(i)];
        auto a1 = v[static_cast<Eigen::Index>(i + 1)];
        v[static_cast<Eigen::Index>(i)] = c * a0 - s * a1;
        v[static_cast<Eigen::Index>(i + 1)] = s * a0 + c * a1;
    }
    return QuantumState(state.register_dims(), std::move(v));
}

QuantumState build_state_psi_eps(const Preparation &oracle, const CoinRotation &rotation) {
    std::vector<std::size_t> dims = oracle.dims();
    const std::size_t k = dims.size();
    dims.push_back(2);
    QuantumState s = QuantumState::basis(dims);
    s = oracle.apply(s, {0, k}, false);
    return apply_rotation(s, rotation, false);
}

QuantumState subroutine_sqrs(
    const QuantumState &state,
    const CoinRotation &rotation,
    const ReflectionOracle &reflection,
    std::uint64_t iterations) {
    const auto &dims = state.register_dims();
    const std::size_t coin = dims.size() - 1;
    RegisterRange range{0, dims.size()};
    Controls controls;
    if (reflection.dims().size() == coin) {
        range.count = coin;
        controls = {Control{coin, 0}};
    }
    QuantumState s = state;
    for (std::uint64_t t = 0; t < iterations; ++t) {
        s = reflect_coin_z(s);
        s = apply_rotation(s, rotation, true);
        s = reflection.apply(s, range, controls);
        s = apply_rotation(s, rotation, false);
        // Global sign of the standard Grover iterate; keeps the good
        // component at amplitude +sin((2t+1) theta).
        s = QuantumState(s.register_dims(), -s.amplitudes());
    }
    return s;
}

ExactAngles exact_angles(double epsilon_norm) {
    if (!(epsilon_norm > 0 && epsilon_norm <= 1 + kConstructionTolerance)) {
        throw InvalidInput("|epsilon| must lie in (0, 1]");
    }
    ExactAngles a{};
    // asin loses half the digits near 1; a unit vector means no rounds.
    a.theta = epsilon_norm >= 1 - kConstructionTolerance ? std::numbers::pi / 2 : std::asin(epsilon_norm);
    // The slack keeps exact integers from rounding up to the next round.
    double x = std::numbers::pi / (4 * a.theta) - 0.5;
    a.iterations = static_cast<std::uint64_t>(std::max(0.0, std::ceil(x - 1e-12)));
    a.theta_tilde = std::numbers::pi / (2.0 * static_cast<double>(2 * a.iterations + 1));
    a.r = std::min(1.0, std::sin(a.theta_tilde) / std::sin(a.theta));
    return a;
}

ExactPlan plan_for_epsilon(const AmplitudeVector &pi, const AmplitudeVector &epsilon, double p) {
    rotation_R(pi, epsilon);
    ExactAngles angles = exact_angles(epsilon.norm());
    return ExactPlan{p, epsilon, epsilon.scaled(angles.r), angles, false};
}

ExactPlan plan_exact(const AmplitudeVector &pi, const AmplitudeVector &sigma, double p) {
    WaterFillBounds b = compute_bounds(pi, sigma);
    if (p > b.p_max + kEndpointTolerance) {
        throw InfeasibleProbability("target p exceeds p_max", p, b.p_min, b.p_max);
    }
    if (p <= b.p_min + kEndpointTolerance) {
        ExactPlan plan = plan_for_epsilon(pi, pi, p);
        plan.lower_endpoint = true;
        return plan;
    }
    return plan_for_epsilon(pi, waterfill(pi, sigma, p).epsilon, p);
}

RunResult run_aqrs(
    const Preparation &oracle,
    const AmplitudeVector &pi,
    const ExactPlan &plan,
    Rng &rng,
    const std::optional<QuantumState> &reference) {
    const std::uint64_t start = oracle.queries();
    CoinRotation rotation = rotation_R(pi, plan.epsilon_scaled);
    QuantumState s = build_state_psi_eps(oracle, rotation);

    std::vector<std::size_t> dims = s.register_dims();
    ReflectionOracle reflection(
        dims,
        [&oracle](const QuantumState &state, RegisterRange range, const Controls &controls) {
            return reflect_via_preparation(oracle, state, range, controls);
        },
        oracle.counter());
    s = subroutine_sqrs(s, rotation, reflection, plan.angles.iterations);

    const std::size_t coin = dims.size() - 1;
    double accept_probability = outcome_probabilities(s, coin)[1];
    Measurement m = measure_register(s, coin, rng);
    RunResult result{m.post_state, m.outcome == 1, accept_probability, oracle.queries() - start, plan.angles.iterations, {}};
    if (reference) {
        result.success_overlap = overlap(*reference, m.post_state).real();
    }
    return result;
}

RunResult run_aqrs(
    const Preparation &oracle,
    const AmplitudeVector &pi,
    const AmplitudeVector &sigma,
    double p,
    Rng &rng,
    const std::optional<QuantumState> &reference) {
    return run_aqrs(oracle, pi, plan_exact(pi, sigma, p), rng, reference);
}

QuantumState hidden_superposition(const AmplitudeVector &w, const HiddenStates &xi) {
    xi.validate();
    if (w.size() != xi.size()) {
        throw InvalidInput("weights and hidden states differ in length");
    }
    const std::size_t n = w.size();
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(xi.dim * n));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t a = 0; a < xi.dim; ++a) {
            v[static_cast<Eigen::Index>(a * n + k)] = w[k] * xi.states[k][static_cast<Eigen::Index>(a)];
        }
    }
    return QuantumState({xi.dim, n}, std::move(v));
}

}  // namespace qrs
