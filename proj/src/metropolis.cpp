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

#include "qrs/metropolis.hpp"

#include <algorithm>
#include <cmath>

#include "qrs/random.hpp"

namespace qrs {
namespace {

// Register positions within a move, offset by the first register of the range.
struct MoveRegisters {
    std::size_t gate, system, energy_i, energy_j;
};

MoveRegisters registers_at(std::size_t first) {
    return {first, first + 1, first + 2, first + 3};
}

QuantumState prepare_move_at(
    const QuantumState &state,
    const std::vector<Eigen::MatrixXcd> &gates,
    const EigenLabelOracle &energy,
    bool inverse,
    const Controls &controls,
    MoveRegisters reg) {
    const Eigen::MatrixXcd uniform = uniform_preparation(gates.size());
    auto controlled_gates = [&](const QuantumState &s, bool adjoint) {
        QuantumState out = s;
        for (std::size_t l = 0; l < gates.size(); ++l) {
            Controls c = controls;
            c.push_back(Control{reg.gate, l});
            out = apply_unitary(out, adjoint ? Eigen::MatrixXcd(gates[l].adjoint()) : gates[l], {reg.system, 1}, c);
        }
        return out;
    };
    if (!inverse) {
        QuantumState s = apply_unitary(state, uniform, {reg.gate, 1}, controls);
        s = controlled_gates(s, false);
        return energy.apply(s, reg.system, reg.energy_j, false, controls);
    }
    QuantumState s = energy.apply(state, reg.system, reg.energy_j, true, controls);
    s = controlled_gates(s, true);
    return apply_unitary(s, uniform.adjoint(), {reg.gate, 1}, controls);
}

double acceptance(double beta, double from, double to) {
    return std::min(1.0, std::exp(beta * (from - to)));
}

}  // namespace

void MetropolisInstance::validate() const {
    const std::size_t d = energies.size();
    if (d == 0 || d > kMaxHiddenDim) {
        throw InvalidInput("Hamiltonian dimension must lie in 1..8");
    }
    for (std::size_t j = 0; j < d; ++j) {
        if (!std::isfinite(energies[j])) {
            throw InvalidInput("energies must be finite");
        }
        for (std::size_t i = 0; i < j; ++i) {
            if (std::abs(energies[i] - energies[j]) <= kConstructionTolerance) {
                throw InvalidInput("energies must be nondegenerate");
            }
        }
    }
    const auto n = static_cast<Eigen::Index>(d);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    if (eigenvectors.rows() != n || eigenvectors.cols() != n ||
        (eigenvectors.adjoint() * eigenvectors - id).cwiseAbs().maxCoeff() > kConstructionTolerance) {
        throw InvalidInput("eigenvectors must form an orthonormal basis");
    }
    if (gates.empty() || gates.size() > kMaxHiddenDim) {
        throw InvalidInput("gate set size must lie in 1..8");
    }
    for (const auto &g : gates) {
        if (g.rows() != n || g.cols() != n || (g.adjoint() * g - id).cwiseAbs().maxCoeff() > kConstructionTolerance) {
            throw InvalidInput("gates must be unitary on the system register");
        }
    }
    if (!(beta >= 0) || !std::isfinite(beta)) {
        throw InvalidInput("beta must be finite and nonnegative");
    }
    if (start >= d) {
        throw InvalidInput("start index out of range");
    }
}

MetropolisInstance make_metropolis_instance(
    std::vector<double> energies,
    double beta,
    std::size_t start,
    std::uint64_t gate_seed,
    std::size_t gate_count,
    std::optional<std::uint64_t> basis_seed) {
    const std::size_t d = energies.size();
    Rng rng(gate_seed);
    std::vector<Eigen::MatrixXcd> gates;
    for (std::size_t l = 0; l < gate_count; ++l) {
        gates.push_back(haar_unitary(d, rng));
    }
    const auto n = static_cast<Eigen::Index>(d);
    Eigen::MatrixXcd basis = Eigen::MatrixXcd::Identity(n, n);
    if (basis_seed) {
        Rng b(*basis_seed);
        basis = haar_unitary(d, b);
    }
    MetropolisInstance instance{std::move(energies), std::move(basis), std::move(gates), beta, start};
    instance.validate();
    return instance;
}

MoveWeights move_weights(const MetropolisInstance &instance, std::size_t i) {
    instance.validate();
    const std::size_t d = instance.dim();
    if (i >= d) {
        throw InvalidInput("eigenstate index out of range");
    }
    const std::size_t gates = instance.gates.size();
    MoveWeights mw;
    mw.w = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(gates));
    const Eigen::VectorXcd psi_i = instance.eigenvectors.col(static_cast<Eigen::Index>(i));
    for (std::size_t j = 0; j < d; ++j) {
        double f = acceptance(instance.beta, instance.energies[i], instance.energies[j]);
        mw.acceptance.push_back(f);
        const Eigen::VectorXcd psi_j = instance.eigenvectors.col(static_cast<Eigen::Index>(j));
        for (std::size_t l = 0; l < gates; ++l) {
            Complex c = psi_j.dot(instance.gates[l] * psi_i);
            mw.w(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)) =
                std::sqrt(f / static_cast<double>(gates)) * c;
        }
    }
    mw.norm = mw.w.norm();
    for (std::size_t j = 0; j < d; ++j) {
        mw.transition.push_back(mw.w.row(static_cast<Eigen::Index>(j)).squaredNorm() / (mw.norm * mw.norm));
    }
    return mw;
}

Eigen::MatrixXd transition_matrix(const MetropolisInstance &instance) {
    const auto d = static_cast<Eigen::Index>(instance.dim());
    Eigen::MatrixXd t(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        MoveWeights mw = move_weights(instance, static_cast<std::size_t>(i));
        for (Eigen::Index j = 0; j < d; ++j) {
            t(i, j) = mw.transition[static_cast<std::size_t>(j)];
        }
    }
    return t;
}

QuantumState move_target(const MetropolisInstance &instance, std::size_t i) {
    MoveWeights mw = move_weights(instance, i);
    const std::size_t d = instance.dim();
    const std::size_t gates = instance.gates.size();
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(gates * d * d * d));
    for (std::size_t l = 0; l < gates; ++l) {
        for (std::size_t j = 0; j < d; ++j) {
            Complex c = mw.w(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)) / mw.norm;
            for (std::size_t a = 0; a < d; ++a) {
                std::size_t index = ((l * d + a) * d + i) * d + j;
                v[static_cast<Eigen::Index>(index)] +=
                    c * instance.eigenvectors(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(j));
            }
        }
    }
    return QuantumState({gates, d, d, d}, std::move(v));
}

EigenLabelOracle energy_oracle(const MetropolisInstance &instance) {
    instance.validate();
    std::vector<std::size_t> labels(instance.dim());
    for (std::size_t j = 0; j < labels.size(); ++j) {
        labels[j] = j;
    }
    return EigenLabelOracle(instance.eigenvectors, std::move(labels), instance.dim());
}

QuantumState prepare_move(
    const QuantumState &state,
    const std::vector<Eigen::MatrixXcd> &gates,
    const EigenLabelOracle &energy,
    bool inverse,
    const Controls &controls) {
    return prepare_move_at(state, gates, energy, inverse, controls, registers_at(0));
}

ReflectionOracle reflect_through_initial(
    const std::vector<Eigen::MatrixXcd> &gates, const EigenLabelOracle &energy, std::size_t i) {
    const std::size_t d = energy.dim();
    if (i >= d || gates.empty()) {
        throw InvalidInput("reflection needs a valid eigenstate index and a gate set");
    }
    auto counter = std::make_shared<QueryCounter>();
    std::vector<Complex> flip(d, 1.0);
    flip[i] = -1.0;
    return ReflectionOracle(
        {gates.size(), d, d, d},
        [gates, &energy, i, flip, counter](const QuantumState &state, RegisterRange range, const Controls &controls) {
            counter->record();
            MoveRegisters reg = registers_at(range.first);
            QuantumState s = prepare_move_at(state, gates, energy, true, controls, reg);
            s = energy.apply(s, reg.system, reg.energy_j, false, controls);
            Controls at_start = controls;
            at_start.push_back(Control{reg.gate, 0});
            at_start.push_back(Control{reg.energy_i, i});
            s = apply_phases(s, flip, {reg.energy_j, 1}, at_start);
            s = energy.apply(s, reg.system, reg.energy_j, true, controls);
            return prepare_move_at(s, gates, energy, false, controls, reg);
        },
        counter);
}

MoveResult metropolis_move(
    const MetropolisInstance &instance,
    const EigenLabelOracle &energy,
    const QuantumState &input,
    std::size_t i,
    Rng &rng,
    const Schedule &schedule) {
    instance.validate();
    const std::size_t d = instance.dim();
    if (i >= d || input.register_dims() != std::vector<std::size_t>{d}) {
        throw InvalidInput("move input must be a system-register state with a valid index");
    }
    const std::uint64_t before = energy.queries();
    QuantumState s = QuantumState::basis({instance.gates.size()}, 0).tensor(input).with_register(d).with_register(d);
    s = energy.apply(s, 1, 2, false);
    s = prepare_move(s, instance.gates, energy, false);

    std::vector<double> tau(d * d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            tau[a * d + b] = std::sqrt(acceptance(instance.beta, instance.energies[a], instance.energies[b]));
        }
    }
    ReflectionOracle reflection = reflect_through_initial(instance.gates, energy, i);
    ResamplingResult r = run_asqrs(s, reflection, RatioVector(tau), 1.0, rng, schedule);

    std::vector<double> probs = outcome_probabilities(r.final_state, 3);
    Measurement m = measure_register(r.final_state, 3, rng);
    QuantumState out = energy.apply(m.post_state, 1, 3, true);
    QuantumState post = factor_out(out, {1, 1});
    return MoveResult{
        m.outcome, r.final_state, std::move(probs), post, energy.queries() - before, r.reflections, r.accepted_level};
}

MoveResult metropolis_move(const MetropolisInstance &instance, std::size_t i, Rng &rng) {
    EigenLabelOracle energy = energy_oracle(instance);
    QuantumState input({instance.dim()}, instance.eigenvectors.col(static_cast<Eigen::Index>(i)));
    return metropolis_move(instance, energy, input, i, rng);
}

ChainResult run_chain(const MetropolisInstance &instance, std::uint64_t steps, Rng &rng) {
    EigenLabelOracle energy = energy_oracle(instance);
    std::size_t i = instance.start;
    QuantumState state({instance.dim()}, instance.eigenvectors.col(static_cast<Eigen::Index>(i)));
    ChainResult chain{{i}, std::vector<std::uint64_t>(instance.dim(), 0), {}, 0};
    chain.histogram[i] = 1;
    for (std::uint64_t step = 0; step < steps; ++step) {
        MoveResult move = metropolis_move(instance, energy, state, i, rng);
        i = move.j;
        state = move.post_state;
        chain.path.push_back(i);
        ++chain.histogram[i];
        chain.move_queries.push_back(move.queries);
        chain.queries += move.queries;
    }
    return chain;
}

}  // namespace qrs
