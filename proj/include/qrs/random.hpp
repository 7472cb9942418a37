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

#ifndef QRS_RANDOM_HPP
#define QRS_RANDOM_HPP

#include <cstdint>

#include "qrs/amplitudes.hpp"
#include "qrs/statevector.hpp"

namespace qrs {

/// Independent stream for trial `trial` of a run seeded with `seed`.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

Eigen::MatrixXcd gaussian_matrix(std::size_t rows, std::size_t cols, Rng &rng);

/// Haar-distributed unitary (QR of a complex Gaussian with the R-diagonal
/// phases divided out).
Eigen::MatrixXcd haar_unitary(std::size_t dim, Rng &rng);

/// Unit vector of absolute Gaussian entries. Each entry is zeroed with
/// probability `zero_fraction`, keeping at least one nonzero.
AmplitudeVector random_amplitudes(std::size_t n, Rng &rng, double zero_fraction = 0.0);

HiddenStates random_hidden_states(std::size_t n, std::size_t dim, Rng &rng);

}  // namespace qrs

#endif
