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

#include "qrs/spectral.hpp"

#include <cmath>
#include <numbers>

namespace qrs {

EigenLabelOracle::EigenLabelOracle(Eigen::MatrixXcd eigenvectors, std::vector<std::size_t> labels, std::size_t label_dim)
    : basis_(std::move(eigenvectors)),
      labels_(std::move(labels)),
      label_dim_(label_dim),
      counter_(std::make_shared<QueryCounter>()) {
    const auto d = basis_.rows();
    if (d == 0 || basis_.cols() != d) {
        throw InvalidInput("eigenvector matrix must be square and nonempty");
    }
    if ((basis_.adjoint() * basis_ - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() > kConstructionTolerance) {
        throw InvalidInput("eigenvectors are not orthonormal");
    }
    if (labels_.size() != static_cast<std::size_t>(d) || label_dim_ == 0) {
        throw InvalidInput("need one label per eigenvector");
    }
    for (std::size_t l : labels_) {
        if (l >= label_dim_) {
            throw InvalidInput("label outside the label register");
        }
    }
}

QuantumState EigenLabelOracle::apply(
    const QuantumState &state, std::size_t eigen_reg, std::size_t label_reg, bool inverse, const Controls &controls) const {
    const auto &dims = state.register_dims();
    if (eigen_reg >= dims.size() || label_reg >= dims.size() || eigen_reg == label_reg ||
        dims[eigen_reg] != dim() || dims[label_reg] != label_dim_) {
        throw InvalidInput("label oracle applied to mismatched registers");
    }
    counter_->record();
    QuantumState s = apply_unitary(state, basis_.adjoint(), {eigen_reg, 1}, controls);
    for (std::size_t j = 0; j < labels_.size(); ++j) {
        std::size_t shift = inverse ? (label_dim_ - labels_[j]) % label_dim_ : labels_[j];
        if (shift == 0) {
            continue;
        }
        Controls c = controls;
        c.push_back(Control{eigen_reg, j});
        s = apply_unitary(s, cyclic_shift(label_dim_, shift), {label_reg, 1}, c);
    }
    return apply_unitary(s, basis_, {eigen_reg, 1}, controls);
}

Eigen::MatrixXcd cyclic_shift(std::size_t dim, std::size_t shift) {
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t m = 0; m < dim; ++m) {
        p(static_cast<Eigen::Index>((m + shift) % dim), static_cast<Eigen::Index>(m)) = 1.0;
    }
    return p;
}

Eigen::MatrixXcd uniform_preparation(std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXcd f(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = 0; b < n; ++b) {
            double angle = 2.0 * std::numbers::pi * static_cast<double>(a * b) / static_cast<double>(dim);
            f(a, b) = std::polar(scale, angle);
        }
    }
    return f;
}

}  // namespace qrs
