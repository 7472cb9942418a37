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

#ifndef QRS_AMPLITUDES_HPP
#define QRS_AMPLITUDES_HPP

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace qrs {

inline constexpr double kConstructionTolerance = 1e-12;

/// Nonnegative real amplitudes. Normalization is checked only by `unit`.
class AmplitudeVector {
   public:
    AmplitudeVector() = default;
    explicit AmplitudeVector(std::vector<double> values);

    /// Rejects negative entries and vectors whose norm is off by more than
    /// kConstructionTolerance.
    static AmplitudeVector unit(std::vector<double> values);

    std::size_t size() const {
        return values_.size();
    }
    double operator[](std::size_t k) const {
        return values_[k];
    }
    const std::vector<double> &values() const {
        return values_;
    }
    double norm() const;
    double dot(const AmplitudeVector &other) const;
    AmplitudeVector scaled(double factor) const;
    AmplitudeVector normalized() const;

   private:
    std::vector<double> values_;
};

/// The normalized states |xi_k> of dimension d, one per index k. The
/// algorithms never see these; only oracles and test fixtures do.
struct HiddenStates {
    std::size_t dim = 1;
    std::vector<Eigen::VectorXcd> states;

    std::size_t size() const {
        return states.size();
    }
    /// Throws InvalidInput on dimension mismatch or a non-unit state.
    void validate() const;
};

}  // namespace qrs

#endif
