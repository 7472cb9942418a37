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

#ifndef QRS_METROPOLIS_HPP
#define QRS_METROPOLIS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qrs/resampling.hpp"
#include "qrs/spectral.hpp"
#include "qrs/statevector.hpp"

namespace qrs {

/// Hamiltonian H = sum_j E_j |psi_j><psi_j| with a set of move gates C_l.
/// Register layout of a move: [gate, system, energy E_i, energy E_j] plus the
/// coin. Energy registers hold eigenvalue indices.
struct MetropolisInstance {
    std::vector<double> energies;
    /// Column j is psi_j.
    Eigen::MatrixXcd eigenvectors;
    std::vector<Eigen::MatrixXcd> gates;
    double beta;
    std::size_t start;

    /// Nondegenerate spectrum, orthonormal basis, unitary gates, beta >= 0.
    void validate() const;
    std::size_t dim() const {
        return energies.size();
    }
};

/// `gate_count` Haar-random gates drawn from `gate_seed`; standard eigenbasis
/// unless `basis_seed` is given.
MetropolisInstance make_metropolis_instance(
    std::vector<double> energies,
    double beta,
    std::size_t start,
    std::uint64_t gate_seed,
    std::size_t gate_count = 2,
    std::optional<std::uint64_t> basis_seed = std::nullopt);

struct MoveWeights {
    /// f_ij = min(1, exp(beta (E_i - E_j))).
    std::vector<double> acceptance;
    /// w(j, l) = sqrt(f_ij / |C|) <psi_j|C_l|psi_i>.
    Eigen::MatrixXcd w;
    double norm;
    /// sum_l |w_jl|^2 / |w|^2.
    std::vector<double> transition;
};

MoveWeights move_weights(const MetropolisInstance &instance, std::size_t i);

/// Row i is the move distribution out of eigenstate i.
Eigen::MatrixXd transition_matrix(const MetropolisInstance &instance);

/// sum_{j,l} w_jl / |w| |l>|psi_j>|E_i>|E_j>, the state the resampling step
/// must produce. For verification only.
QuantumState move_target(const MetropolisInstance &instance, std::size_t i);

/// E_H|psi_j>|0> = |psi_j>|j>.
EigenLabelOracle energy_oracle(const MetropolisInstance &instance);

/// Steps 1-2 of a move on registers [gate, system, E_i, E_j]: uniform gate
/// register, controlled gates, then E_H into the E_j register. One E_H query.
QuantumState prepare_move(
    const QuantumState &state,
    const std::vector<Eigen::MatrixXcd> &gates,
    const EigenLabelOracle &energy,
    bool inverse,
    const Controls &controls = {});

/// Reflection through the step-2 state of a move out of eigenstate i. Undoes
/// steps 1-2, recomputes the energy of the system register, flips the sign
/// where the gate register is 0 and that energy is E_i, then redoes steps
/// 1-2. Four E_H queries per application; it acts as the exact reflection on
/// every state reachable from the step-2 state.
ReflectionOracle reflect_through_initial(
    const std::vector<Eigen::MatrixXcd> &gates, const EigenLabelOracle &energy, std::size_t i);

struct MoveResult {
    std::size_t j;
    /// Resampled state over [gate, system, E_i, E_j, coin] before measuring E_j.
    QuantumState pre_measurement;
    /// Exact distribution of the E_j measurement.
    std::vector<double> outcome_probabilities;
    /// The new eigenstate on the system register.
    QuantumState post_state;
    /// E_H and E_H^dagger applications.
    std::uint64_t queries;
    std::uint64_t reflections;
    int accepted_level;
};

/// One move out of `input`, which must be the eigenstate with index i. The
/// move never rejects: resampling runs with alpha = 1.
MoveResult metropolis_move(
    const MetropolisInstance &instance,
    const EigenLabelOracle &energy,
    const QuantumState &input,
    std::size_t i,
    Rng &rng,
    const Schedule &schedule = {});

/// Move out of psi_i, with a fresh energy oracle.
MoveResult metropolis_move(const MetropolisInstance &instance, std::size_t i, Rng &rng);

struct ChainResult {
    /// Visited eigenstate indices, starting with instance.start.
    std::vector<std::size_t> path;
    std::vector<std::uint64_t> histogram;
    /// E_H queries of each move, in order.
    std::vector<std::uint64_t> move_queries;
    std::uint64_t queries;
};

ChainResult run_chain(const MetropolisInstance &instance, std::uint64_t steps, Rng &rng);

}  // namespace qrs

#endif
