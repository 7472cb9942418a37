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

#include "qrs/oracles.hpp"

#include <cmath>

#include "qrs/random.hpp"

namespace qrs {

PreparationOracle::PreparationOracle(const AmplitudeVector &pi, const HiddenStates &xi, std::uint64_t completion_seed)
    : counter_(std::make_shared<QueryCounter>()) {
    xi.validate();
    if (pi.size() == 0 || xi.size() != pi.size()) {
        throw InvalidInput("pi and xi must have the same positive length");
    }
    if (xi.dim > kMaxHiddenDim) {
        throw InvalidInput("hidden register dimension exceeds 8");
    }
    if (std::abs(pi.norm() - 1.0) > kConstructionTolerance) {
        throw InvalidInput("pi is not normalized");
    }
    const std::size_t d = xi.dim;
    const std::size_t n = pi.size();
    dims_ = {d, n};
    const auto dim = static_cast<Eigen::Index>(d * n);

    Eigen::VectorXcd first = Eigen::VectorXcd::Zero(dim);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t a = 0; a < d; ++a) {
            first[static_cast<Eigen::Index>(a * n + k)] = pi[k] * xi.states[k][static_cast<Eigen::Index>(a)];
        }
    }

    // QR of [first | random] orthonormalizes the random columns against the
    // first one; only the phase of column 0 needs restoring.
    Rng rng(completion_seed);
    Eigen::MatrixXcd basis = gaussian_matrix(d * n, d * n, rng);
    basis.col(0) = first;
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(basis);
    unitary_ = qr.householderQ();
    Complex r00 = qr.matrixQR()(0, 0);
    unitary_.col(0) *= r00 / std::abs(r00);

    double defect = (unitary_.adjoint() * unitary_ - Eigen::MatrixXcd::Identity(dim, dim)).norm();
    if (defect > 1e-10 || (unitary_.col(0) - first).norm() > 1e-10) {
        throw NumericalError("preparation oracle completion failed");
    }
}

QuantumState PreparationOracle::apply(
    const QuantumState &state, RegisterRange target, bool inverse, const Controls &controls) const {
    if (target.count != dims_.size() || target.first + target.count > state.register_count() ||
        state.register_dims()[target.first] != dims_[0] || state.register_dims()[target.first + 1] != dims_[1]) {
        throw InvalidInput("preparation oracle applied to mismatched registers");
    }
    counter_->record();
    if (inverse) {
        return apply_unitary(state, unitary_.adjoint(), target, controls);
    }
    return apply_unitary(state, unitary_, target, controls);
}

ReflectionOracle::ReflectionOracle(std::vector<std::size_t> dims, Implementation impl, std::shared_ptr<QueryCounter> counter)
    : dims_(std::move(dims)),
      impl_(std::move(impl)),
      counter_(std::move(counter)),
      applications_(std::make_shared<QueryCounter>()) {
    total_dim(dims_);
    if (!impl_ || !counter_) {
        throw InvalidInput("reflection oracle needs an implementation and a counter");
    }
}

ReflectionOracle ReflectionOracle::through_state(const QuantumState &target) {
    auto counter = std::make_shared<QueryCounter>();
    Eigen::VectorXcd v = target.amplitudes();
    return ReflectionOracle(
        target.register_dims(),
        [v, counter](const QuantumState &s, RegisterRange range, const Controls &controls) {
            counter->record();
            return reflect_about(s, v, range, controls);
        },
        counter);
}

QuantumState ReflectionOracle::apply(const QuantumState &state, RegisterRange target, const Controls &controls) const {
    for (std::size_t i = 0; i < target.count; ++i) {
        if (target.first + i >= state.register_count() || state.register_dims()[target.first + i] != dims_.at(i)) {
            throw InvalidInput("reflection oracle applied to mismatched registers");
        }
    }
    if (target.count != dims_.size()) {
        throw InvalidInput("reflection oracle applied to the wrong number of registers");
    }
    applications_->record();
    return impl_(state, target, controls);
}

QuantumState reflect_via_preparation(
    const Preparation &prep, const QuantumState &state, RegisterRange target, const Controls &controls) {
    if (target.count != prep.dims().size() + 1) {
        throw InvalidInput("preparation reflection spans the oracle registers and one coin");
    }
    RegisterRange prep_range{target.first, target.count - 1};
    QuantumState s = prep.apply(state, prep_range, true, controls);
    s = flip_zero(s, target, controls);
    return prep.apply(s, prep_range, false, controls);
}

ReflectionOracle reflection_from_preparation(std::shared_ptr<const Preparation> prep) {
    if (!prep) {
        throw InvalidInput("null preparation oracle");
    }
    std::vector<std::size_t> dims = prep->dims();
    dims.push_back(2);
    auto counter = prep->counter();
    return ReflectionOracle(
        std::move(dims),
        [prep](const QuantumState &s, RegisterRange range, const Controls &controls) {
            return reflect_via_preparation(*prep, s, range, controls);
        },
        std::move(counter));
}

QuantumState apply_oracle(const QuantumState &state, const Preparation &oracle, bool inverse, RegisterRange target) {
    return oracle.apply(state, target, inverse);
}

QuantumState apply_oracle(const QuantumState &state, const ReflectionOracle &oracle, bool, RegisterRange target) {
    return oracle.apply(state, target);
}

}  // namespace qrs
