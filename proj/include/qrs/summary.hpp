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


#ifndef QRS_SUMMARY_HPP
#define QRS_SUMMARY_HPP

#include <cstddef>
#include <vector>

namespace qrs {

/// Aggregate of per-trial values. Percentiles use the nearest-rank rule.
struct Summary {
    std::size_t count;
    double mean;
    /// Sample standard deviation over sqrt(count); 0 for a single value.
    double standard_error;
    double min;
    double p50;
    double p90;
    double max;
};

/// Throws InvalidInput on an empty list.
Summary summarize(std::vector<double> values);

}  // namespace qrs

#endif
