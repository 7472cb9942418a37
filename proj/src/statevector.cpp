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

#include "qrs/statevector.hpp"

#include <cmath>
#include <string>

namespace qrs {

std::size_t total_dim(const std::vector<std::size_t> &register_dims) {
    if (register_dims.empty()) {
        throw InvalidInput("a state needs at least one register");
    }
    std::size_t n = 1;
    for (std::size_t d : register_dims) {
        if (d == 0) {
            throw InvalidInput("register dimension must be positive");
        }
        n *= d;
    }
    return n;
}

QuantumState::QuantumState(std::vector<std::size_t> register_dims, Eigen::VectorXcd amplitudes)
    : dims_(std::move(register_dims)), amps_(std::move(amplitudes)) {
    if (total_dim(dims_) != static_cast<std::size_t>(amps_.size())) {
        throw InvalidInput("amplitude count does not match register dimensions");
    }
    double drift = std::abs(amps_.norm() - 1.0);
    if (!(drift <= kDriftTolerance)) {
        throw NumericalError("state norm drifted by " + std::to_string(drift));
    }
}

QuantumState QuantumState::basis(std::vector<std::size_t> register_dims, std::size_t index) {
    std::size_t n = total_dim(register_dims);
    if (index >= n) {
        throw InvalidInput("basis index out of range");
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
    v[static_cast<Eigen::Index>(index)] = 1.0;
    return QuantumState(std::move(register_dims), std::move(v));
}

std::size_t QuantumState::stride(std::size_t reg) const {
    std::size_t s = 1;
    for (std::size_t r = reg + 1; r < dims_.size(); ++r) {
        s *= dims_[r];
    }
    return s;
}

std::size_t QuantumState::digit(std::size_t index, std::size_t reg) const {
    return (index / stride(reg)) % dims_[reg];
}

std::size_t QuantumState::range_dim(RegisterRange range) const {
    std::size_t n = 1;
    for (std::size_t r = range.first; r < range.first + range.count; ++r) {
        n *= dims_.at(r);
    }
    return n;
}

QuantumState QuantumState::tensor(const QuantumState &other) const {
    std::vector<std::size_t> dims = dims_;
    dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
    Eigen::VectorXcd v(amps_.size() * other.amps_.size());
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
        v.segment(i * other.amps_.size(), other.amps_.size()) = amps_[i] * other.amps_;
    }
    return QuantumState(std::move(dims), std::move(v));
}

QuantumState QuantumState::with_register(std::size_t dim, std::size_t value) const {
    return tensor(QuantumState::basis({dim}, value));
}

QuantumState apply_unitary(
    const QuantumState &state, const Eigen::MatrixXcd &unitary, RegisterRange range, const Controls &controls) {
    auto mid = static_cast<Eigen::Index>(state.range_dim(range));
    if (unitary.rows() != mid || unitary.cols() != mid) {
        throw InvalidInput("unitary does not match the target registers");
    }
    Eigen::VectorXcd tmp(mid);
    return transform_slices(state, range, controls, [&](Eigen::VectorXcd &slice) {
        tmp.noalias() = unitary * slice;
        slice = tmp;
    });
}

QuantumState apply_phases(
    const QuantumState &state, const std::vector<Complex> &phases, RegisterRange range, const Controls &controls) {
    if (phases.size() != state.range_dim(range)) {
        throw InvalidInput("phase list does not match the target registers");
    }
    return transform_slices(state, range, controls, [&](Eigen::VectorXcd &slice) {
        for (Eigen::Index m = 0; m < slice.size(); ++m) {
            slice[m] *= phases[static_cast<std::size_t>(m)];
        }
    });
}

QuantumState reflect_about(
    const QuantumState &state, const Eigen::VectorXcd &target, RegisterRange range, const Controls &controls) {
    if (static_cast<std::size_t>(target.size()) != state.range_dim(range)) {
        throw InvalidInput("reflection target does not match the target registers");
    }
    return transform_slices(state, range, controls, [&](Eigen::VectorXcd &slice) {
        Complex c = target.dot(slice);
        slice -= 2.0 * c * target;
    });
}

QuantumState flip_zero(const QuantumState &state, RegisterRange range, const Controls &controls) {
    return transform_slices(state, range, controls, [](Eigen::VectorXcd &slice) { slice[0] = -slice[0]; });
}

QuantumState hadamard_all(const QuantumState &state, std::size_t reg, const Controls &controls) {
    std::size_t dim = state.register_dims().at(reg);
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        throw InvalidInput("Hadamard register dimension must be a power of two");
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    return transform_slices(state, {reg, 1}, controls, [&](Eigen::VectorXcd &slice) {
        walsh_hadamard_in_place(slice);
        slice *= scale;
    });
}

QuantumState reflect_coin_z(const QuantumState &state) {
    std::size_t coin = state.register_count() - 1;
    if (state.register_dims()[coin] != 2) {
        throw InvalidInput("last register is not a qubit");
    }
    return apply_phases(state, {1.0, -1.0}, {coin, 1});
}

QuantumState flip_qubit(const QuantumState &state, std::size_t reg) {
    if (state.register_dims().at(reg) != 2) {
        throw InvalidInput("register is not a qubit");
    }
    return transform_slices(state, {reg, 1}, {}, [](Eigen::VectorXcd &slice) { std::swap(slice[0], slice[1]); });
}

std::vector<double> outcome_probabilities(const QuantumState &state, std::size_t reg) {
    std::vector<double> probs(state.register_dims().at(reg), 0.0);
    for (std::size_t i = 0; i < state.size(); ++i) {
        probs[state.digit(i, reg)] += std::norm(state[i]);
    }
    return probs;
}

Measurement postselect(const QuantumState &state, std::size_t reg, std::size_t outcome) {
    auto probs = outcome_probabilities(state, reg);
    if (outcome >= probs.size()) {
        throw InvalidInput("measurement outcome out of range");
    }
    double p = probs[outcome];
    if (p < kDegenerateProbability) {
        throw NumericalError("post-measurement norm below threshold");
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(state.amplitudes().size());
    const double scale = 1.0 / std::sqrt(p);
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (state.digit(i, reg) == outcome) {
            v[static_cast<Eigen::Index>(i)] = state[i] * scale;
        }
    }
    return Measurement{outcome, QuantumState(state.register_dims(), std::move(v)), p};
}

Measurement measure_register(const QuantumState &state, std::size_t reg, Rng &rng) {
    auto probs = outcome_probabilities(state, reg);
    // Rounding residue must never be sampled.
    double total = 0;
    for (double &p : probs) {
        p = p < kDegenerateProbability ? 0.0 : p;
        total += p;
    }
    double u = std::uniform_real_distribution<double>(0.0, total)(rng);
    double cumulative = 0;
    std::size_t outcome = probs.size();
    for (std::size_t k = 0; k < probs.size(); ++k) {
        cumulative += probs[k];
        if (probs[k] > 0) {
            outcome = k;
            if (u < cumulative) {
                break;
            }
        }
    }
    return postselect(state, reg, outcome);
}

Complex overlap(const QuantumState &a, const QuantumState &b) {
    if (a.register_dims() != b.register_dims()) {
        throw InvalidInput("overlap of states with different register layouts");
    }
    return a.amplitudes().dot(b.amplitudes());
}

QuantumState factor_out(const QuantumState &state, RegisterRange keep, double tolerance) {
    std::vector<Eigen::VectorXcd> slices;
    transform_slices(state, keep, {}, [&](Eigen::VectorXcd &slice) { slices.push_back(slice); });
    std::size_t best = 0;
    for (std::size_t i = 1; i < slices.size(); ++i) {
        if (slices[i].squaredNorm() > slices[best].squaredNorm()) {
            best = i;
        }
    }
    Eigen::VectorXcd u = slices[best] / slices[best].norm();
    double residual = 0;
    for (const auto &s : slices) {
        residual += (s - u.dot(s) * u).squaredNorm();
    }
    if (residual > tolerance) {
        throw NumericalError("registers are entangled; cannot factor out");
    }
    std::vector<std::size_t> dims(
        state.register_dims().begin() + static_cast<std::ptrdiff_t>(keep.first),
        state.register_dims().begin() + static_cast<std::ptrdiff_t>(keep.first + keep.count));
    return QuantumState(std::move(dims), std::move(u));
}

}  // namespace qrs
