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

#ifndef QRS_ERRORS_HPP
#define QRS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qrs {

/// Malformed input: bad shapes, negative amplitudes, non-normalized vectors.
class InvalidInput : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A target success probability outside [p_min, p_max]. Carries the interval
/// so callers can apply their own endpoint behavior.
class InfeasibleProbability : public std::out_of_range {
   public:
    InfeasibleProbability(const std::string &what, double p, double p_min, double p_max)
        : std::out_of_range(what), p_(p), p_min_(p_min), p_max_(p_max) {
    }
    double p() const {
        return p_;
    }
    double p_min() const {
        return p_min_;
    }
    double p_max() const {
        return p_max_;
    }

   private:
    double p_;
    double p_min_;
    double p_max_;
};

/// A numerical invariant failed (norm drift, non-unitary oracle, degenerate
/// measurement). Never recovered from.
class NumericalError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace qrs

#endif
