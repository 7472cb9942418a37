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

#include "qrs/hidden_shift.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qrs/waterfill.hpp"

namespace qrs {
namespace {

int dot(std::uint64_t a, std::uint64_t b) {
    return std::popcount(a & b) & 1;
}

BooleanFunction random_function(int n, Rng &rng) {
    std::vector<std::uint8_t> t(std::size_t{1} << n);
    std::bernoulli_distribution coin(0.5);
    for (auto &v : t) {
        v = coin(rng);
    }
    return BooleanFunction(n, t);
}

BooleanFunction function_from_index(int n, std::uint64_t index) {
    std::vector<std::uint8_t> t(std::size_t{1} << n);
    for (std::size_t x = 0; x < t.size(); ++x) {
        t[x] = static_cast<std::uint8_t>((index >> x) & 1);
    }
    return BooleanFunction(n, t);
}

// x1 x2 + x3 x4 with x_{i+1} read from bit i.
BooleanFunction bent4() {
    std::vector<std::uint8_t> t(16);
    for (std::uint64_t x = 0; x < 16; ++x) {
        t[x] = static_cast<std::uint8_t>(((x & 1) & ((x >> 1) & 1)) ^ (((x >> 2) & 1) & ((x >> 3) & 1)));
    }
    return BooleanFunction(4, t);
}

BooleanFunction delta(int n) {
    std::vector<std::uint8_t> t(std::size_t{1} << n, 0);
    t[0] = 1;
    return BooleanFunction(n, t);
}

TEST(boolean_function, parsing) {
    BooleanFunction f = BooleanFunction::from_hex(4, "8ce0");
    ASSERT_EQ(f.to_bits(), "0000011100110001");
    ASSERT_EQ(BooleanFunction::from_bits(2, "0001").truth_table(), (std::vector<std::uint8_t>{0, 0, 0, 1}));
    ASSERT_EQ(BooleanFunction::from_hex(2, "8").to_bits(), "0001");
    ASSERT_THROW(BooleanFunction::from_hex(2, "18"), InvalidInput);
    ASSERT_THROW(BooleanFunction::from_hex(1, "4"), InvalidInput);
    ASSERT_THROW(BooleanFunction::from_hex(3, "g0"), InvalidInput);
    ASSERT_THROW(BooleanFunction::from_bits(2, "012"), InvalidInput);
    ASSERT_THROW(BooleanFunction(2, {0, 1, 0}), InvalidInput);
    ASSERT_THROW(BooleanFunction(21, {}), InvalidInput);
}

TEST(wht, examples) {
    BooleanFunction zero(3, std::vector<std::uint8_t>(8, 0));
    ASSERT_DOUBLE_EQ(zero.spectrum()[0], 1.0);
    for (std::size_t w = 1; w < 8; ++w) {
        ASSERT_DOUBLE_EQ(zero.spectrum()[w], 0.0);
    }
    BooleanFunction conj = BooleanFunction::from_bits(2, "0001");
    ASSERT_EQ(conj.spectrum(), (std::vector<double>{0.5, 0.5, 0.5, -0.5}));
    ASSERT_THROW(wht({1.0, 2.0, 3.0}), InvalidInput);
}

TEST(wht, equals_naive_sum) {
    Rng rng(81);
    for (int n = 0; n <= 10; ++n) {
        BooleanFunction f = random_function(n, rng);
        for (std::uint64_t w = 0; w < f.size(); ++w) {
            double sum = 0;
            for (std::uint64_t x = 0; x < f.size(); ++x) {
                sum += ((dot(w, x) + f(x)) & 1) ? -1.0 : 1.0;
            }
            ASSERT_NEAR(f.spectrum()[w], sum / static_cast<double>(f.size()), 1e-12) << n << " " << w;
        }
    }
}

TEST(wht, parseval_and_involution) {
    Rng rng(82);
    for (int i = 0; i < 1000; ++i) {
        BooleanFunction f = random_function(1 + i % 10, rng);
        double sum = 0;
        for (double c : f.spectrum()) {
            sum += c * c;
        }
        ASSERT_NEAR(sum, 1.0, 1e-12);
        std::vector<double> back = wht(f.spectrum());
        std::vector<double> signs = sign_vector(f);
        for (std::size_t x = 0; x < f.size(); ++x) {
            ASSERT_EQ(back[x] * static_cast<double>(f.size()), signs[x]);
        }
    }
}

TEST(wht, shift_covariance_exhaustive) {
    for (int n = 1; n <= 4; ++n) {
        const std::uint64_t functions = std::uint64_t{1} << (std::uint64_t{1} << n);
        for (std::uint64_t index = 0; index < functions; index += (n == 4 ? 7 : 1)) {
            BooleanFunction f = function_from_index(n, index);
            for (std::uint64_t s = 0; s < f.size(); ++s) {
                BooleanFunction shifted = f.shifted(s);
                const auto &g = shifted.spectrum();
                for (std::uint64_t w = 0; w < f.size(); ++w) {
                    ASSERT_EQ(g[w], (dot(w, s) ? -1.0 : 1.0) * f.spectrum()[w]);
                }
            }
        }
    }
}

TEST(influence, examples) {
    BooleanFunction parity = BooleanFunction::from_bits(2, "0110");
    ASSERT_EQ(influence(parity, 0), 0.0);
    ASSERT_EQ(influence(parity, 1), 1.0);
    ASSERT_EQ(influence(parity, 3), 0.0);
    ASSERT_EQ(min_influence(parity), 0.0);
    ASSERT_FALSE(promise_holds(parity, 3));
    ASSERT_TRUE(promise_holds(parity, 1));
    ASSERT_EQ(min_influence(bent4()), 0.5);
}

TEST(influence, min_influence_matches_brute_force) {
    Rng rng(83);
    for (int i = 0; i < 200; ++i) {
        BooleanFunction f = random_function(1 + i % 8, rng);
        double best = 1.0;
        for (std::uint64_t v = 1; v < f.size(); ++v) {
            best = std::min(best, influence(f, v));
        }
        ASSERT_EQ(min_influence(f), best);
    }
}

TEST(influence, shift_state_overlap_identity_exhaustive) {
    for (int n = 1; n <= 4; ++n) {
        const std::uint64_t functions = std::uint64_t{1} << (std::uint64_t{1} << n);
        for (std::uint64_t index = 0; index < functions; index += (n == 4 ? 97 : 1)) {
            BooleanFunction f = function_from_index(n, index);
            for (std::uint64_t s = 0; s < f.size(); ++s) {
                for (std::uint64_t v = 0; v < f.size(); ++v) {
                    ASSERT_NEAR(shift_state_overlap(f, s, v), 1 - 2 * influence(f, s ^ v), 1e-12);
                }
            }
        }
    }
}

TEST(prepare_psi_fhat, amplitudes) {
    BooleanFunction conj = BooleanFunction::from_bits(2, "0001");
    ShiftOracle zero(conj, 0);
    QuantumState s = prepare_psi_fhat(zero);
    for (std::size_t w = 0; w < 4; ++w) {
        ASSERT_NEAR(std::abs(s[w] - conj.spectrum()[w]), 0.0, 1e-15);
    }
    ASSERT_EQ(zero.queries(), 1u);

    ShiftOracle three(conj, 3);
    s = prepare_psi_fhat(three);
    std::vector<double> expected = {0.5, -0.5, -0.5, -0.5};
    for (std::size_t w = 0; w < 4; ++w) {
        ASSERT_NEAR(std::abs(s[w] - expected[w]), 0.0, 1e-15);
    }

    Rng rng(84);
    BooleanFunction f = random_function(5, rng);
    for (std::uint64_t shift = 0; shift < 32; ++shift) {
        QuantumState t = prepare_psi_fhat(ShiftOracle(f, shift));
        for (std::uint64_t w = 0; w < 32; ++w) {
            ASSERT_NEAR(std::abs(t[w] - (dot(w, shift) ? -1.0 : 1.0) * f.spectrum()[w]), 0.0, 1e-12);
        }
    }
}

TEST(spectrum_preparation, prepares_corrected_spectrum) {
    Rng rng(85);
    BooleanFunction f = random_function(4, rng);
    ShiftOracle oracle(f, 11);
    SpectrumPreparation prep(oracle, f);
    QuantumState out = prep.apply(QuantumState::basis({1, 16}), {0, 2}, false);
    for (std::uint64_t w = 0; w < 16; ++w) {
        ASSERT_NEAR(std::abs(out[w] - (dot(w, 11) ? -1.0 : 1.0) * std::abs(f.spectrum()[w])), 0.0, 1e-12);
    }
    QuantumState back = prep.apply(out, {0, 2}, true);
    ASSERT_NEAR(std::norm(back[0]), 1.0, 1e-12);
    ASSERT_EQ(prep.queries(), 2u);
}

TEST(run_bhsp, bent_function_needs_one_query_for_every_shift) {
    BooleanFunction f = bent4();
    Rng rng(86);
    for (std::uint64_t s = 0; s < 16; ++s) {
        ShiftOracle oracle(f, s);
        ShiftResult r = run_bhsp(oracle, f, 1.0, rng);
        ASSERT_TRUE(r.accept);
        ASSERT_EQ(r.s_hat, s);
        ASSERT_EQ(r.queries, 1u);
        ASSERT_EQ(oracle.queries(), 1u);
        ASSERT_NEAR(r.candidate_distribution[s], 1.0, 1e-12);
    }
}

TEST(run_bhsp, delta_functions_follow_the_grover_count) {
    Rng rng(87);
    for (int n = 2; n <= 8; ++n) {
        BooleanFunction f = delta(n);
        // Every |f^(w)| is at least 2^(1-n); the p = 1 vector is that floor everywhere.
        double norm = std::sqrt(static_cast<double>(f.size())) * std::pow(2.0, 1 - n);
        double theta = norm >= 1 ? std::numbers::pi / 2 : std::asin(norm);
        auto t = static_cast<std::uint64_t>(std::ceil(std::numbers::pi / (4 * theta) - 0.5 - 1e-12));
        std::uint64_t s = (std::uint64_t{1} << n) - 2;
        ShiftOracle oracle(f, s);
        ShiftResult r = run_bhsp(oracle, f, 1.0, rng);
        ASSERT_EQ(r.queries, 2 * t + 1) << n;
        ASSERT_TRUE(r.accept);
        ASSERT_EQ(r.s_hat, s);
        ASSERT_NEAR(r.candidate_distribution[s], 1.0, 1e-9);
    }
}

TEST(run_bhsp, success_probability_on_random_functions) {
    Rng rng(88);
    int checked = 0;
    for (int i = 0; checked < 20; ++i) {
        BooleanFunction f = random_function(6, rng);
        WaterFillBounds b = compute_bounds(spectrum_magnitudes(f), flat_target(6));
        if (b.p_max < 0.8) {
            continue;
        }
        std::uint64_t s = static_cast<std::uint64_t>(i * 37) % 64;
        ShiftOracle oracle(f, s);
        ShiftResult r = run_bhsp(oracle, f, 0.8, rng);
        ASSERT_TRUE(r.accept);
        ASSERT_GE(r.accept_probability, 1 - 1e-9);
        ASSERT_GE(r.candidate_distribution[s], 0.8 - 1e-9);
        ++checked;
    }
}

TEST(run_bhsp, infeasible_p_is_rejected) {
    BooleanFunction f = BooleanFunction::from_bits(3, "00000001");
    std::vector<std::uint8_t> t(8, 0);
    t[0] = t[1] = 1;
    BooleanFunction g(3, t);
    ShiftOracle oracle(g, 2);
    Rng rng(1);
    ASSERT_THROW(run_bhsp(oracle, g, 1.0, rng), InfeasibleProbability);
    ASSERT_NO_THROW(run_bhsp(ShiftOracle(f, 1), f, 1.0, rng));
}

TEST(check_shift, never_rejects_the_true_shift) {
    Rng rng(89);
    for (int n = 1; n <= 3; ++n) {
        const std::uint64_t functions = std::uint64_t{1} << (std::uint64_t{1} << n);
        for (std::uint64_t index = 0; index < functions; ++index) {
            BooleanFunction f = function_from_index(n, index);
            for (std::uint64_t s = 0; s < f.size(); ++s) {
                ShiftOracle oracle(f, s);
                CheckResult c = check_shift(oracle, f, s, 32, rng);
                ASSERT_TRUE(c.accept);
                ASSERT_EQ(c.queries, 32u);
                ASSERT_NEAR(c.round_accept_probability, 1.0, 1e-12);
            }
        }
    }
    for (int i = 0; i < 300; ++i) {
        BooleanFunction f = random_function(4, rng);
        std::uint64_t s = static_cast<std::uint64_t>(i) % 16;
        ShiftOracle oracle(f, s);
        ASSERT_TRUE(check_shift(oracle, f, s, 32, rng).accept);
    }
}

TEST(check_shift, accept_probability_is_one_minus_influence) {
    Rng rng(90);
    for (int i = 0; i < 100; ++i) {
        BooleanFunction f = random_function(3, rng);
        std::uint64_t s = static_cast<std::uint64_t>(i) % 8;
        std::uint64_t v = static_cast<std::uint64_t>(i * 3 + 1) % 8;
        CheckResult c = check_shift(ShiftOracle(f, s), f, v, 1, rng);
        ASSERT_NEAR(c.round_accept_probability, 1 - influence(f, s ^ v), 1e-12);
    }
    BooleanFunction f = bent4();
    CheckResult c = check_shift(ShiftOracle(f, 5), f, 6, 20, rng);
    ASSERT_NEAR(c.round_accept_probability, 0.5, 1e-12);
    ASSERT_NEAR(1 - std::pow(c.round_accept_probability, 20), 1 - std::pow(2.0, -20), 1e-15);
}

TEST(check_shift, rounds_bound_the_escape_probability) {
    ASSERT_EQ(check_rounds(0.5, 0.05), 6u);
    ASSERT_EQ(check_rounds(1.0, 0.9), 1u);
    ASSERT_THROW(check_rounds(0.0, 0.1), InvalidInput);
    ASSERT_THROW(check_rounds(0.5, 1.0), InvalidInput);
    for (double infl : {0.03, 0.1, 0.25, 0.5, 1.0}) {
        for (double delta : {1e-6, 1e-3, 0.05, 0.5}) {
            ASSERT_LE(std::pow(1 - infl, static_cast<double>(check_rounds(infl, delta))), delta);
        }
    }
}

TEST(cut_probability, bent_and_random) {
    CutProbability bent = cut_probability(bent4(), 1.0);
    ASSERT_NEAR(bent.p, 1.0, 1e-12);
    ASSERT_THROW(cut_probability(bent4(), 0.0), InvalidInput);

    Rng rng(91);
    BooleanFunction f = random_function(6, rng);
    CutProbability c = cut_probability(f, 0.5);
    double num = 0, den = 0;
    for (double x : f.spectrum()) {
        double e = std::min(std::abs(x), 0.5 / 8.0);
        num += e / 8.0;
        den += e * e;
    }
    ASSERT_NEAR(c.p, num * num / den, 1e-12);
    ASSERT_NEAR(c.p_l1, c.p, 1e-12);
}

TEST(boosted_bhsp, bent_needs_one_attempt_and_one_round) {
    BooleanFunction f = bent4();
    Rng rng(92);
    ShiftOracle oracle(f, 9);
    BoostResult r = boosted_bhsp(oracle, f, 1.0, 0.65, rng);
    ASSERT_EQ(r.s_hat, 9u);
    ASSERT_EQ(r.attempts, 1u);
    ASSERT_EQ(r.rounds_per_check, 1u);
    ASSERT_EQ(r.total_queries, 2u);
    ASSERT_NEAR(r.cut.p, 1.0, 1e-12);
}

TEST(boosted_bhsp, rejects_uncheckable_functions) {
    BooleanFunction parity = BooleanFunction::from_bits(2, "0110");
    Rng rng(1);
    ASSERT_THROW(boosted_bhsp(ShiftOracle(parity, 1), parity, 0.5, 0.1, rng), InvalidInput);
}

TEST(boosted_bhsp, failure_rate_within_delta) {
    Rng setup(93);
    BooleanFunction f = random_function(6, setup);
    while (min_influence(f) == 0) {
        f = random_function(6, setup);
    }
    const double delta = 0.05;
    const int runs = 2000;
    int wrong = 0;
    Rng rng(94);
    for (int i = 0; i < runs; ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(i) % 64;
        BoostResult r = boosted_bhsp(ShiftOracle(f, s), f, 0.5, delta, rng);
        wrong += r.s_hat != s;
    }
    double rate = static_cast<double>(wrong) / runs;
    ASSERT_LE(rate, delta + 3 * std::sqrt(delta * (1 - delta) / runs));
}

}  // namespace
}  // namespace qrs
