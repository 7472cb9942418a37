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

#include "qrs/linear_system.hpp"

#include <algorithm>
#include <cmath>

#include "qrs/random.hpp"

namespace qrs {

void LinearSystem::validate() const {
    const std::size_t d = eigenvalues.size();
    if (d == 0 || d > kMaxHiddenDim) {
        throw InvalidInput("system dimension must lie in 1..8");
    }
    if (!(kappa >= 1)) {
        throw InvalidInput("kappa must be at least 1");
    }
    for (std::size_t j = 0; j < d; ++j) {
        double l = eigenvalues[j];
        if (!(l >= 1.0 / kappa - kConstructionTolerance && l <= 1 + kConstructionTolerance)) {
            throw InvalidInput("eigenvalues must lie in [1/kappa, 1]");
        }
        for (std::size_t i = 0; i < j; ++i) {
            if (std::abs(eigenvalues[i] - l) <= kConstructionTolerance) {
                throw InvalidInput("eigenvalues must be distinct");
            }
        }
    }
    const auto n = static_cast<Eigen::Index>(d);
    if (eigenvectors.rows() != n || eigenvectors.cols() != n ||
        (eigenvectors.adjoint() * eigenvectors - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() >
            kConstructionTolerance) {
        throw InvalidInput("eigenvectors must form an orthonormal basis");
    }
    if (b.size() != d) {
        throw InvalidInput("b must have one amplitude per eigenvector");
    }
    double norm2 = 0;
    for (double x : b) {
        if (!(x >= 0)) {
            throw InvalidInput("b amplitudes must be real and nonnegative");
        }
        norm2 += x * x;
    }
    if (std::abs(std::sqrt(norm2) - 1.0) > kConstructionTolerance) {
        throw InvalidInput("b is not normalized");
    }
}

Eigen::VectorXcd LinearSystem::rhs() const {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(eigenvectors.rows());
    for (std::size_t j = 0; j < b.size(); ++j) {
        v += b[j] * eigenvectors.col(static_cast<Eigen::Index>(j));
    }
    return v;
}

Eigen::VectorXcd LinearSystem::solution() const {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(eigenvectors.rows());
    for (std::size_t j = 0; j < b.size(); ++j) {
        v += (b[j] / eigenvalues[j]) * eigenvectors.col(static_cast<Eigen::Index>(j));
    }
    return v / v.norm();
}

LinearSystem make_linear_system(
    std::vector<double> eigenvalues, std::vector<double> b, double kappa, std::optional<std::uint64_t> basis_seed) {
    const auto n = static_cast<Eigen::Index>(eigenvalues.size());
    Eigen::MatrixXcd basis = Eigen::MatrixXcd::Identity(n, n);
    if (basis_seed) {
        Rng rng(*basis_seed);
        basis = haar_unitary(eigenvalues.size(), rng);
    }
    LinearSystem system{std::move(eigenvalues), std::move(basis), std::move(b), kappa};
    system.validate();
    return system;
}

LabelGrid label_grid(const LinearSystem &system) {
    LabelGrid grid;
    grid.values = system.eigenvalues;
    std::sort(grid.values.begin(), grid.values.end());
    const double floor = 1.0 / system.kappa;
    if (grid.values.front() - floor > kConstructionTolerance) {
        grid.values.insert(grid.values.begin(), floor);
    }
    for (double l : system.eigenvalues) {
        auto it = std::find(grid.values.begin(), grid.values.end(), l);
        grid.label_of.push_back(static_cast<std::size_t>(it - grid.values.begin()));
    }
    return grid;
}

EigenLabelOracle phase_estimation_unitary(const LinearSystem &system) {
    system.validate();
    LabelGrid grid = label_grid(system);
    return EigenLabelOracle(system.eigenvectors, grid.label_of, grid.values.size());
}

TruncatedWeights truncated_weights(const LinearSystem &system, double kappa_tilde) {
    if (!(kappa_tilde >= 1 && kappa_tilde <= system.kappa * (1 + kConstructionTolerance))) {
        throw InvalidInput("kappa~ must lie in [1, kappa]");
    }
    TruncatedWeights t{};
    double ww = 0, w2 = 0, t2 = 0;
    for (std::size_t j = 0; j < system.dim(); ++j) {
        double l = system.eigenvalues[j];
        t.w.push_back(system.b[j] / l);
        t.w_tilde.push_back(system.b[j] / std::max(1.0 / kappa_tilde, l));
        ww += t.w.back() * t.w_tilde.back();
        w2 += t.w.back() * t.w.back();
        t2 += t.w_tilde.back() * t.w_tilde.back();
    }
    t.p_stated = ww / std::sqrt(w2 * t2);
    t.p_squared = t.p_stated * t.p_stated;
    t.query_scale = kappa_tilde / std::sqrt(t2);
    return t;
}

LinearSolveResult solve_qle(const LinearSystem &system, double kappa_tilde, Rng &rng, const Schedule &schedule) {
    system.validate();
    TruncatedWeights weights = truncated_weights(system, kappa_tilde);
    LabelGrid grid = label_grid(system);
    const std::size_t d = system.dim();
    const std::size_t labels = grid.values.size();

    EigenLabelOracle ea(system.eigenvectors, grid.label_of, labels);
    QuantumState b_state({d}, system.rhs());
    ReflectionOracle ref_b = ReflectionOracle::through_state(b_state);

    // Reflection through E_A|b>|0>: E_A (ref_b on label = 0) E_A^dagger.
    auto counter = std::make_shared<QueryCounter>();
    ReflectionOracle reflection(
        {d, labels},
        [&ea, &ref_b, counter](const QuantumState &state, RegisterRange range, const Controls &controls) {
            counter->record();
            const std::size_t eig = range.first;
            const std::size_t lab = range.first + 1;
            QuantumState s = ea.apply(state, eig, lab, true, controls);
            Controls on_zero = controls;
            on_zero.push_back(Control{lab, 0});
            s = ref_b.apply(s, {eig, 1}, on_zero);
            return ea.apply(s, eig, lab, false, controls);
        },
        counter);

    std::vector<double> tau(labels);
    for (std::size_t m = 0; m < labels; ++m) {
        tau[m] = std::min(1.0, 1.0 / (system.kappa * grid.values[m]));
    }

    QuantumState initial = ea.apply(b_state.with_register(labels), 0, 1, false);
    ResamplingResult r = run_asqrs(initial, reflection, RatioVector(tau), system.kappa / kappa_tilde, rng, schedule);
    QuantumState out = ea.apply(r.final_state, 0, 1, true);
    QuantumState x = factor_out(out, {0, 1});

    double ov = std::abs(system.solution().dot(x.amplitudes()));
    return LinearSolveResult{
        x, weights, ov, ov * ov, r.reflections, ea.queries(), ref_b.queries(), r.accepted_level};
}

}  // namespace qrs
