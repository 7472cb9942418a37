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

#ifndef QRS_SPECTRAL_HPP
#define QRS_SPECTRAL_HPP

#include <memory>
#include <vector>

#include "qrs/oracles.hpp"
#include "qrs/statevector.hpp"

namespace qrs {

/// Ideal phase estimation for an operator with eigenbasis {psi_j}:
///     |psi_j>|m> -> |psi_j>|m + label_j mod L>,
/// so |psi_j>|0> -> |psi_j>|label_j>. The eigenbasis stays hidden. Forward
/// and inverse applications each cost one query.
class EigenLabelOracle {
   public:
    /// Columns of `eigenvectors` are the psi_j and must be orthonormal.
    EigenLabelOracle(Eigen::MatrixXcd eigenvectors, std::vector<std::size_t> labels, std::size_t label_dim);

    std::size_t dim() const {
        return static_cast<std::size_t>(basis_.rows());
    }
    std::size_t label_dim() const {
        return label_dim_;
    }
    /// The two registers need not be adjacent.
    QuantumState apply(
        const QuantumState &state,
        std::size_t eigen_reg,
        std::size_t label_reg,
        bool inverse,
        const Controls &controls = {}) const;
    const std::shared_ptr<QueryCounter> &counter() const {
        return counter_;
    }
    std::uint64_t queries() const {
        return counter_->count();
    }

   private:
    Eigen::MatrixXcd basis_;
    std::vector<std::size_t> labels_;
    std::size_t label_dim_;
    std::shared_ptr<QueryCounter> counter_;
};

/// |m> -> |m + shift mod dim>.
Eigen::MatrixXcd cyclic_shift(std::size_t dim, std::size_t shift);

/// Unitary whose first column is the uniform superposition (the unitary DFT).
Eigen::MatrixXcd uniform_preparation(std::size_t dim);

}  // namespace qrs

#endif
