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

#include "qrs/amplitudes.hpp"

#include <cmath>
#include <string>

#include "qrs/errors.hpp"

namespace qrs {

AmplitudeVector::AmplitudeVector(std::vector<double> values) : values_(std::move(values)) {
    for (double v : values_) {
        if (!std::isfinite(v) || v < 0) {
            throw InvalidInput("amplitudes must be finite and nonnegative");
        }
    }
}

AmplitudeVector AmplitudeVector::unit(std::vector<double> values) {
    AmplitudeVector result(std::move(values));
    if (result.size() == 0) {
        throw InvalidInput("amplitude vector is empty");
    }
    if (std::abs(result.norm() - 1.0) > kConstructionTolerance) {
        throw InvalidInput("amplitude vector is not normalized (norm " + std::to_string(result.norm()) + ")");
    }
    return result;
}

double AmplitudeVector::norm() const {
    double s = 0;
    for (double v : values_) {
        s += v * v;
    }
    return std::sqrt(s);
}

double AmplitudeVector::dot(const AmplitudeVector &other) const {
    if (other.size() != size()) {
        throw InvalidInput("amplitude vectors differ in length");
    }
    double s = 0;
    for (std::size_t k = 0; k < size(); ++k) {
        s += values_[k] * other.values_[k];
    }
    return s;
}

AmplitudeVector AmplitudeVector::scaled(double factor) const {
    std::vector<double> out(values_);
    for (double &v : out) {
        v *= factor;
    }
    return AmplitudeVector(std::move(out));
}

AmplitudeVector AmplitudeVector::normalized() const {
    double n = norm();
    if (n == 0) {
        throw InvalidInput("cannot normalize a zero vector");
    }
    return scaled(1.0 / n);
}

void HiddenStates::validate() const {
    if (dim == 0) {
        throw InvalidInput("hidden state dimension must be positive");
    }
    for (const auto &s : states) {
        if (static_cast<std::size_t>(s.size()) != dim) {
            throw InvalidInput("hidden state has wrong dimension");
        }
        if (std::abs(s.norm() - 1.0) > kConstructionTolerance) {
            throw InvalidInput("hidden state is not normalized");
        }
    }
}

}  // namespace qrs
