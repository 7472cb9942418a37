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

#ifndef QRS_LINEAR_SYSTEM_HPP
#define QRS_LINEAR_SYSTEM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qrs/resampling.hpp"
#include "qrs/spectral.hpp"
#include "qrs/statevector.hpp"

namespace qrs {

/// Hermitian A = sum_j lambda_j |psi_j><psi_j| with a right-hand side given
/// by its eigenbasis amplitudes b_j = <psi_j|b>, real and nonnegative.
struct LinearSystem {
    std::vector<double> eigenvalues;
    /// Column j is psi_j.
    Eigen::MatrixXcd eigenvectors;
    std::vector<double> b;
    double kappa;

    /// Distinct eigenvalues in [1/kappa, 1], orthonormal basis, unit b.
    void validate() const;
    std::size_t dim() const {
        return eigenvalues.size();
    }
    /// |b> = sum_j b_j |psi_j>.
    Eigen::VectorXcd rhs() const;
    /// A^-1 |b>, normalized.
    Eigen::VectorXcd solution() const;
};

/// Standard eigenbasis, or a Haar-random one when `basis_seed` is given.
LinearSystem make_linear_system(
    std::vector<double> eigenvalues,
    std::vector<double> b,
    double kappa,
    std::optional<std::uint64_t> basis_seed = std::nullopt);

/// Eigenvalue grid read by the label register: the spectrum in increasing
/// order, preceded by 1/kappa when the spectrum misses it so that the largest
/// ratio tau is exactly 1.
struct LabelGrid {
    std::vector<double> values;
    /// Grid index of each eigenvalue.
    std::vector<std::size_t> label_of;
};

LabelGrid label_grid(const LinearSystem &system);

/// E_A|psi_j>|0> = |psi_j>|label(lambda_j)>.
EigenLabelOracle phase_estimation_unitary(const LinearSystem &system);

struct TruncatedWeights {
    std::vector<double> w;
    std::vector<double> w_tilde;
    /// w.w~ / (|w| |w~|), the closed form stated for the success probability.
    double p_stated;
    /// Its square: the probability that the output equals A^-1 b.
    double p_squared;
    /// kappa~ / |w~|, the query scale.
    double query_scale;
};

/// w_j = b_j / lambda_j, w~_j = b_j / max(1/kappa~, lambda_j). Requires
/// kappa~ in [1, kappa].
TruncatedWeights truncated_weights(const LinearSystem &system, double kappa_tilde);

struct LinearSolveResult {
    /// Output state on the system register.
    QuantumState solution;
    TruncatedWeights weights;
    /// |<x|solution>| with x = A^-1 b normalized.
    double overlap;
    /// overlap^2, read from exact amplitudes.
    double p_measured;
    std::uint64_t reflections;
    std::uint64_t label_queries;
    std::uint64_t rhs_queries;
    int accepted_level;

    std::uint64_t queries() const {
        return label_queries + rhs_queries;
    }
};

/// Phase estimation, resampling of the eigenvalue register with
/// tau = 1/(kappa lambda) and alpha = kappa/kappa~, then undoing phase
/// estimation. |b> is accessed only through its reflection.
LinearSolveResult solve_qle(
    const LinearSystem &system, double kappa_tilde, Rng &rng, const Schedule &schedule = {});

}  // namespace qrs

#endif
