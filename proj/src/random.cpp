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

#include "qrs/random.hpp"

#include <cmath>

namespace qrs {

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed),
        static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(trial),
        static_cast<std::uint32_t>(trial >> 32)};
    return Rng(seq);
}

Eigen::MatrixXcd gaussian_matrix(std::size_t rows, std::size_t cols, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            double re = normal(rng);
            double im = normal(rng);
            m(r, c) = Complex(re, im);
        }
    }
    return m;
}

Eigen::MatrixXcd haar_unitary(std::size_t dim, Rng &rng) {
    Eigen::MatrixXcd z = gaussian_matrix(dim, dim, rng);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < q.cols(); ++k) {
        Complex d = r(k, k);
        q.col(k) *= d / std::abs(d);
    }
    return q;
}

AmplitudeVector random_amplitudes(std::size_t n, Rng &rng, double zero_fraction) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<double> v(n);
    bool any = false;
    for (auto &x : v) {
        x = std::abs(normal(rng)) + 1e-3;
        if (uniform(rng) < zero_fraction) {
            x = 0;
        } else {
            any = true;
        }
    }
    if (!any) {
        v[0] = 1.0;
    }
    double s = 0;
    for (double x : v) {
        s += x * x;
    }
    for (auto &x : v) {
        x /= std::sqrt(s);
    }
    return AmplitudeVector::unit(std::move(v));
}

HiddenStates random_hidden_states(std::size_t n, std::size_t dim, Rng &rng) {
    HiddenStates xi;
    xi.dim = dim;
    for (std::size_t k = 0; k < n; ++k) {
        Eigen::VectorXcd v = gaussian_matrix(dim, 1, rng).col(0);
        xi.states.push_back(v / v.norm());
    }
    return xi;
}

}  // namespace qrs
