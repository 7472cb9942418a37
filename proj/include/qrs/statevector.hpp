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

#ifndef QRS_STATEVECTOR_HPP
#define QRS_STATEVECTOR_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qrs/errors.hpp"

namespace qrs {

using Complex = std::complex<double>;
using Rng = std::mt19937_64;

/// Allowed drift of the state norm after any operation.
inline constexpr double kDriftTolerance = 1e-10;
/// Outcomes sampled with probability below this are treated as a bug.
inline constexpr double kDegenerateProbability = 1e-14;

/// A contiguous block of registers, counted from the most significant one.
struct RegisterRange {
    std::size_t first = 0;
    std::size_t count = 1;
};

/// Restricts an operation to the basis states where register `reg` holds
/// `value`.
struct Control {
    std::size_t reg;
    std::size_t value;
};

/// All controls must hold for an operation to act.
using Controls = std::vector<Control>;

/// Dense normalized statevector over labeled registers. Register 0 is the most
/// significant digit of the flattened index. Values are immutable; every
/// operation returns a new state and re-checks the norm.
class QuantumState {
   public:
    QuantumState(std::vector<std::size_t> register_dims, Eigen::VectorXcd amplitudes);

    static QuantumState basis(std::vector<std::size_t> register_dims, std::size_t index = 0);

    const std::vector<std::size_t> &register_dims() const {
        return dims_;
    }
    const Eigen::VectorXcd &amplitudes() const {
        return amps_;
    }
    std::size_t size() const {
        return static_cast<std::size_t>(amps_.size());
    }
    std::size_t register_count() const {
        return dims_.size();
    }
    Complex operator[](std::size_t index) const {
        return amps_[static_cast<Eigen::Index>(index)];
    }

    /// Distance between flattened indices that differ by one in `reg`.
    std::size_t stride(std::size_t reg) const;
    std::size_t digit(std::size_t index, std::size_t reg) const;
    std::size_t range_dim(RegisterRange range) const;

    /// |this> (x) |other>, with other's registers appended.
    QuantumState tensor(const QuantumState &other) const;
    /// Appends a register of dimension `dim` prepared in |value>.
    QuantumState with_register(std::size_t dim, std::size_t value = 0) const;

   private:
    std::vector<std::size_t> dims_;
    Eigen::VectorXcd amps_;
};

/// Product of register dimensions; throws InvalidInput on a zero dimension.
std::size_t total_dim(const std::vector<std::size_t> &register_dims);

/// Applies `fn` to every slice of the state along `range`. A slice is the
/// sub-vector obtained by fixing all registers outside the range. Slices that
/// fail any control are left untouched.
template <typename SliceFn>
QuantumState transform_slices(
    const QuantumState &state, RegisterRange range, const Controls &controls, SliceFn &&fn) {
    const auto &dims = state.register_dims();
    if (range.count == 0 || range.first + range.count > dims.size()) {
        throw InvalidInput("register range out of bounds");
    }
    for (const Control &c : controls) {
        if (c.reg >= dims.size() || c.value >= dims[c.reg] ||
            (c.reg >= range.first && c.reg < range.first + range.count)) {
            throw InvalidInput("control register invalid or inside target range");
        }
    }
    const std::size_t mid = state.range_dim(range);
    const std::size_t low = state.stride(range.first + range.count - 1);
    const std::size_t high = state.size() / (mid * low);

    Eigen::VectorXcd out = state.amplitudes();
    Eigen::VectorXcd slice(static_cast<Eigen::Index>(mid));
    for (std::size_t h = 0; h < high; ++h) {
        for (std::size_t l = 0; l < low; ++l) {
            const std::size_t base = h * mid * low + l;
            bool active = true;
            for (const Control &c : controls) {
                active = active && state.digit(base, c.reg) == c.value;
            }
            if (!active) {
                continue;
            }
            for (std::size_t m = 0; m < mid; ++m) {
                slice[static_cast<Eigen::Index>(m)] = out[static_cast<Eigen::Index>(base + m * low)];
            }
            fn(slice);
            for (std::size_t m = 0; m < mid; ++m) {
                out[static_cast<Eigen::Index>(base + m * low)] = slice[static_cast<Eigen::Index>(m)];
            }
        }
    }
    return QuantumState(dims, std::move(out));
}

QuantumState apply_unitary(
    const QuantumState &state,
    const Eigen::MatrixXcd &unitary,
    RegisterRange range,
    const Controls &controls = {});

/// Multiplies basis state m of the range by phases[m].
QuantumState apply_phases(
    const QuantumState &state,
    const std::vector<Complex> &phases,
    RegisterRange range,
    const Controls &controls = {});

/// I - 2|t><t| on the range. `target` must be normalized.
QuantumState reflect_about(
    const QuantumState &state,
    const Eigen::VectorXcd &target,
    RegisterRange range,
    const Controls &controls = {});

/// I - 2|0..0><0..0| on the range.
QuantumState flip_zero(const QuantumState &state, RegisterRange range, const Controls &controls = {});

/// H tensored over the qubits of `reg`; its dimension must be a power of two.
QuantumState hadamard_all(const QuantumState &state, std::size_t reg, const Controls &controls = {});

/// Pauli Z on the last register, which must be a qubit.
QuantumState reflect_coin_z(const QuantumState &state);

/// Pauli X on a qubit register.
QuantumState flip_qubit(const QuantumState &state, std::size_t reg);

/// In-place fast Walsh-Hadamard butterfly, unnormalized.
template <typename Vector>
void walsh_hadamard_in_place(Vector &v) {
    const auto n = static_cast<std::size_t>(v.size());
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                auto a = v[j];
                auto b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
}

std::vector<double> outcome_probabilities(const QuantumState &state, std::size_t reg);

struct Measurement {
    std::size_t outcome;
    QuantumState post_state;
    /// Exact Born probability of `outcome`.
    double probability;
};

/// Samples from the Born distribution; outcomes below kDegenerateProbability
/// are never drawn.
Measurement measure_register(const QuantumState &state, std::size_t reg, Rng &rng);

/// Projects onto `outcome` of `reg` and renormalizes, without sampling.
Measurement postselect(const QuantumState &state, std::size_t reg, std::size_t outcome);

/// <a|b>. Register layouts must agree.
Complex overlap(const QuantumState &a, const QuantumState &b);

/// The state of `keep`, assuming the full state is a product across `keep`
/// and the remaining registers. The phase is fixed by the largest slice.
/// Throws NumericalError if the state is entangled beyond `tolerance`.
QuantumState factor_out(const QuantumState &state, RegisterRange keep, double tolerance = 1e-9);

}  // namespace qrs

#endif
