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

#ifndef QRS_HIDDEN_SHIFT_HPP
#define QRS_HIDDEN_SHIFT_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qrs/amplification.hpp"
#include "qrs/oracles.hpp"
#include "qrs/statevector.hpp"

namespace qrs {

/// Largest n for which spectra are computed.
inline constexpr int kMaxSpectrumBits = 20;
/// Largest n for which the hidden shift algorithm is simulated.
inline constexpr int kMaxSimulationBits = 12;

/// f : {0,1}^n -> {0,1} as a truth table indexed by x, bit i of x being x_{i+1}.
class BooleanFunction {
   public:
    BooleanFunction(int bits, std::vector<std::uint8_t> truth_table);

    /// 2^n / 4 hex digits (at least one), most significant first: the last
    /// digit holds f(3), f(2), f(1), f(0) from high bit to low.
    static BooleanFunction from_hex(int bits, const std::string &hex);
    /// 2^n characters '0'/'1', f(0) first.
    static BooleanFunction from_bits(int bits, const std::string &table);

    int bits() const {
        return bits_;
    }
    std::size_t size() const {
        return table_.size();
    }
    int operator()(std::uint64_t x) const {
        return table_[x];
    }
    const std::vector<std::uint8_t> &truth_table() const {
        return table_;
    }
    /// f^(w) = 2^-n sum_x (-1)^(w.x + f(x)); computed on construction.
    const std::vector<double> &spectrum() const {
        return spectrum_;
    }
    /// x -> f(x + s).
    BooleanFunction shifted(std::uint64_t s) const;
    std::string to_bits() const;

   private:
    int bits_;
    std::vector<std::uint8_t> table_;
    std::vector<double> spectrum_;
};

/// Normalized fast Walsh-Hadamard transform 2^-n sum_x (-1)^(w.x) F(x).
/// The length must be a power of two.
std::vector<double> wht(std::vector<double> values);

/// (-1)^f(x) as reals.
std::vector<double> sign_vector(const BooleanFunction &f);

/// Pr_x[f(x) != f(x + v)].
double influence(const BooleanFunction &f, std::uint64_t v);
/// Minimum influence over v != 0.
double min_influence(const BooleanFunction &f);
/// f(. + s) differs from f somewhere.
bool promise_holds(const BooleanFunction &f, std::uint64_t s);

/// Phase oracle O_s|x> = (-1)^f(x + s)|x> on a register of dimension 2^n.
/// f and s stay hidden; one query per application.
class ShiftOracle {
   public:
    ShiftOracle(BooleanFunction f, std::uint64_t shift);

    int bits() const {
        return bits_;
    }
    QuantumState apply(const QuantumState &state, std::size_t reg, const Controls &controls = {}) const;
    const std::shared_ptr<QueryCounter> &counter() const {
        return counter_;
    }
    std::uint64_t queries() const {
        return counter_->count();
    }

   private:
    int bits_;
    std::vector<Complex> phases_;
    std::shared_ptr<QueryCounter> counter_;
};

/// H O_s H |0> = sum_w (-1)^(w.s) f^(w) |w> on a register of dimension 2^n.
/// One query.
QuantumState prepare_psi_fhat(const ShiftOracle &oracle);

/// Preparation D H O_s H on registers [1, 2^n], where D is the known diagonal
/// sign of f^. It prepares sum_w |f^(w)| (-1)^(w.s) |w>, so pi_w = |f^(w)|
/// and xi_w = (-1)^(w.s). The sign correction costs no query.
class SpectrumPreparation final : public Preparation {
   public:
    SpectrumPreparation(const ShiftOracle &oracle, const BooleanFunction &f_public);

    const std::vector<std::size_t> &dims() const override {
        return dims_;
    }
    QuantumState apply(
        const QuantumState &state,
        RegisterRange target,
        bool inverse,
        const Controls &controls = {}) const override;
    const std::shared_ptr<QueryCounter> &counter() const override {
        return oracle_.counter();
    }

   private:
    const ShiftOracle &oracle_;
    std::vector<Complex> signs_;
    std::vector<std::size_t> dims_;
};

/// pi = |f^|.
AmplitudeVector spectrum_magnitudes(const BooleanFunction &f);
/// The flat target 2^(-n/2).
AmplitudeVector flat_target(int bits);

struct ShiftResult {
    std::uint64_t s_hat;
    bool accept;
    double accept_probability;
    std::uint64_t queries;
    std::uint64_t iterations;
    /// Exact distribution of the candidate after the final Hadamard
    /// transform, given the coin outcome that occurred.
    std::vector<double> candidate_distribution;
};

/// Resamples the corrected spectrum state toward the flat target with the
/// given plan, applies H and measures the candidate.
ShiftResult run_bhsp(const ShiftOracle &oracle, const BooleanFunction &f_public, const ExactPlan &plan, Rng &rng);

/// Plan from the water-filling vector for p. Throws InfeasibleProbability
/// above p_max.
ShiftResult run_bhsp(const ShiftOracle &oracle, const BooleanFunction &f_public, double p, Rng &rng);

/// <phi_f(a)|phi_f(b)> with phi_f(a) = 2^(-n/2) sum_x (-1)^f(x + a)|x>.
double shift_state_overlap(const BooleanFunction &f, std::uint64_t a, std::uint64_t b);

struct CheckResult {
    bool accept;
    std::uint64_t rounds_run;
    std::uint64_t queries;
    /// Exact per-round accept probability (1 + <phi_f(s)|phi_f(v)>)/2.
    double round_accept_probability;
};

/// Runs up to `rounds` rounds of the controlled test comparing |phi_f(s)>
/// (one query) with |phi_f(v)> (built from f_public). Stops at the first
/// rejection. Never rejects v = s.
CheckResult check_shift(
    const ShiftOracle &oracle, const BooleanFunction &f_public, std::uint64_t v, std::uint64_t rounds, Rng &rng);

/// ceil(ln(1/delta) / influence): a wrong candidate escapes with probability
/// at most delta.
std::uint64_t check_rounds(double min_influence, double delta);

/// eps_w = min(|f^(w)|, gamma / sqrt(2^n)).
std::vector<double> cut_spectrum(const BooleanFunction &f, double gamma);

struct CutProbability {
    /// (sigma . eps / |eps|)^2.
    double p;
    /// |eps / |eps||_1^2 / 2^n; equal to p by construction.
    double p_l1;
    double epsilon_norm;
};

CutProbability cut_probability(const BooleanFunction &f, double gamma);

/// Stops boosting after this many attempts.
inline constexpr std::uint64_t kMaxBoostAttempts = 100000;

struct BoostResult {
    std::uint64_t s_hat;
    std::uint64_t total_queries;
    std::uint64_t attempts;
    std::uint64_t rounds_per_check;
    CutProbability cut;
    double min_influence;
};

/// Repeats run_bhsp on the cut spectrum and verifies each accepted candidate
/// with ceil(ln(1/(delta p)) / I_f) check rounds, so the returned shift is
/// wrong with probability at most delta.
BoostResult boosted_bhsp(
    const ShiftOracle &oracle, const BooleanFunction &f_public, double gamma, double delta, Rng &rng);

}  // namespace qrs

#endif
