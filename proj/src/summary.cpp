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


#include "qrs/summary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qrs/errors.hpp"

namespace qrs {

namespace {

double nearest_rank(const std::vector<double> &sorted, double q) {
    auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(sorted.size())));
    return sorted[std::max<std::size_t>(rank, 1) - 1];
}

}  // namespace

Summary summarize(std::vector<double> values) {
    if (values.empty()) {
        throw InvalidInput("cannot summarize an empty list");
    }
    std::sort(values.begin(), values.end());
    const auto n = static_cast<double>(values.size());
    double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double se = 0;
    if (values.size() > 1) {
        double ss = 0;
        for (double v : values) {
            ss += (v - mean) * (v - mean);
        }
        se = std::sqrt(ss / (n - 1) / n);
    }
    return Summary{
        values.size(), mean, se, values.front(), nearest_rank(values, 0.5), nearest_rank(values, 0.9), values.back()};
}

}  // namespace qrs
