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

#ifndef QRS_ORACLES_HPP
#define QRS_ORACLES_HPP

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "qrs/amplitudes.hpp"
#include "qrs/statevector.hpp"

namespace qrs {

/// Largest hidden-register dimension accepted by PreparationOracle.
inline constexpr std::size_t kMaxHiddenDim = 8;

/// Monotone, shared by an oracle and its inverse.
class QueryCounter {
   public:
    void record(std::uint64_t n = 1) {
        count_.fetch_add(n, std::memory_order_relaxed);
    }
    std::uint64_t count() const {
        return count_.load(std::memory_order_relaxed);
    }

   private:
    std::atomic<std::uint64_t> count_{0};
};

/// A black-box unitary O with O|0..0> equal to the state being sampled.
/// Each application, forward or inverse, costs one query.
class Preparation {
   public:
    virtual ~Preparation() = default;
    /// Register layout the oracle acts on.
    virtual const std::vector<std::size_t> &dims() const = 0;
    virtual QuantumState apply(
        const QuantumState &state,
        RegisterRange target,
        bool inverse,
        const Controls &controls = {}) const = 0;
    /// Charged once per application, shared by the oracle and its inverse.
    virtual const std::shared_ptr<QueryCounter> &counter() const = 0;
    std::uint64_t queries() const {
        return counter()->count();
    }
};

/// O|0_d>|0_n> = sum_k pi_k |xi_k>|k>, completed to a full unitary from a
/// seeded random basis. Acts on registers [d, n].
class PreparationOracle final : public Preparation {
   public:
    PreparationOracle(const AmplitudeVector &pi, const HiddenStates &xi, std::uint64_t completion_seed);

    const std::vector<std::size_t> &dims() const override {
        return dims_;
    }
    QuantumState apply(
        const QuantumState &state,
        RegisterRange target,
        bool inverse,
        const Controls &controls = {}) const override;
    const std::shared_ptr<QueryCounter> &counter() const override {
        return counter_;
    }

   private:
    std::vector<std::size_t> dims_;
    Eigen::MatrixXcd unitary_;
    std::shared_ptr<QueryCounter> counter_;
};

/// I - 2|phi><phi| for a state the caller cannot read. `queries()` reports the
/// counter the construction charges, which need not be one per application.
class ReflectionOracle {
   public:
    using Implementation = std::function<QuantumState(const QuantumState &, RegisterRange, const Controls &)>;

    ReflectionOracle(std::vector<std::size_t> dims, Implementation impl, std::shared_ptr<QueryCounter> counter);

    /// Reflection through a fixed target; one query per application.
    static ReflectionOracle through_state(const QuantumState &target);

    const std::vector<std::size_t> &dims() const {
        return dims_;
    }
    QuantumState apply(
        const QuantumState &state, RegisterRange target, const Controls &controls = {}) const;
    std::uint64_t queries() const {
        return counter_->count();
    }
    std::uint64_t applications() const {
        return applications_->count();
    }

   private:
    std::vector<std::size_t> dims_;
    Implementation impl_;
    std::shared_ptr<QueryCounter> counter_;
    std::shared_ptr<QueryCounter> applications_;
};

/// (O x I)(I - 2|0..0><0..0|)(O x I)^dagger on the preparation's registers
/// followed by one more register (the coin). Two preparation queries.
QuantumState reflect_via_preparation(
    const Preparation &prep, const QuantumState &state, RegisterRange target, const Controls &controls);

/// Reflection through O|0..0>|0>, charging the preparation's counter. The
/// returned oracle keeps `prep` alive.
ReflectionOracle reflection_from_preparation(std::shared_ptr<const Preparation> prep);

QuantumState apply_oracle(const QuantumState &state, const Preparation &oracle, bool inverse, RegisterRange target);
/// Reflections are self-inverse; `inverse` is accepted for symmetry.
QuantumState apply_oracle(const QuantumState &state, const ReflectionOracle &oracle, bool inverse, RegisterRange target);

}  // namespace qrs

#endif
