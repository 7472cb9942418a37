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

#include <algorithm>
#include <cmath>

#include "qrs/waterfill.hpp"

namespace qrs {
namespace {

void check_bits(int bits, int limit) {
    if (bits < 0 || bits > limit) {
        throw InvalidInput("number of bits must lie in 0.." + std::to_string(limit));
    }
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') {
        return c - '0';
    }
    if (c >= 'a' && c <= 'f') {
        return c - 'a' + 10;
    }
    if (c >= 'A' && c <= 'F') {
        return c - 'A' + 10;
    }
    throw InvalidInput(std::string("invalid hex digit '") + c + "'");
}

std::vector<Complex> shift_phases(const BooleanFunction &f, std::uint64_t s) {
    std::vector<Complex> phases(f.size());
    for (std::uint64_t x = 0; x < f.size(); ++x) {
        phases[x] = f(x ^ s) ? -1.0 : 1.0;
    }
    return phases;
}

}  // namespace

BooleanFunction::BooleanFunction(int bits, std::vector<std::uint8_t> truth_table)
    : bits_(bits), table_(std::move(truth_table)) {
    check_bits(bits_, kMaxSpectrumBits);
    if (table_.size() != (std::size_t{1} << bits_)) {
        throw InvalidInput("truth table length must be 2^n");
    }
    for (std::uint8_t v : table_) {
        if (v > 1) {
            throw InvalidInput("truth table entries must be 0 or 1");
        }
    }
    spectrum_ = wht(sign_vector(*this));
}

BooleanFunction BooleanFunction::from_hex(int bits, const std::string &hex) {
    check_bits(bits, kMaxSpectrumBits);
    const std::size_t size = std::size_t{1} << bits;
    const std::size_t digits = std::max<std::size_t>(1, size / 4);
    if (hex.size() != digits) {
        throw InvalidInput("hex truth table must have " + std::to_string(digits) + " digits");
    }
    std::vector<std::uint8_t> table(size);
    for (std::size_t k = 0; k < digits; ++k) {
        int value = hex_value(hex[digits - 1 - k]);
        for (std::size_t b = 0; b < 4; ++b) {
            int bit = (value >> b) & 1;
            std::size_t x = 4 * k + b;
            if (x < size) {
                table[x] = static_cast<std::uint8_t>(bit);
            } else if (bit) {
                throw InvalidInput("hex truth table sets bits beyond 2^n");
            }
        }
    }
    return BooleanFunction(bits, std::move(table));
}

BooleanFunction BooleanFunction::from_bits(int bits, const std::string &table) {
    check_bits(bits, kMaxSpectrumBits);
    std::vector<std::uint8_t> t;
    t.reserve(table.size());
    for (char c : table) {
        if (c != '0' && c != '1') {
            throw InvalidInput("bit truth table may contain only 0 and 1");
        }
        t.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BooleanFunction(bits, std::move(t));
}

BooleanFunction BooleanFunction::shifted(std::uint64_t s) const {
    if (s >= size()) {
        throw InvalidInput("shift outside the domain");
    }
    std::vector<std::uint8_t> t(size());
    for (std::uint64_t x = 0; x < size(); ++x) {
        t[x] = table_[x ^ s];
    }
    return BooleanFunction(bits_, std::move(t));
}

std::string BooleanFunction::to_bits() const {
    std::string out;
    for (std::uint8_t v : table_) {
        out.push_back(static_cast<char>('0' + v));
    }
    return out;
}

std::vector<double> wht(std::vector<double> values) {
    const std::size_t n = values.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw InvalidInput("transform length must be a power of two");
    }
    walsh_hadamard_in_place(values);
    const double scale = 1.0 / static_cast<double>(n);
    for (double &v : values) {
        v *= scale;
    }
    return values;
}

std::vector<double> sign_vector(const BooleanFunction &f) {
    std::vector<double> v(f.size());
    for (std::uint64_t x = 0; x < f.size(); ++x) {
        v[x] = f(x) ? -1.0 : 1.0;
    }
    return v;
}

double influence(const BooleanFunction &f, std::uint64_t v) {
    if (v >= f.size()) {
        throw InvalidInput("shift outside the domain");
    }
    std::uint64_t differ = 0;
    for (std::uint64_t x = 0; x < f.size(); ++x) {
        differ += f(x) != f(x ^ v);
    }
    return static_cast<double>(differ) / static_cast<double>(f.size());
}

double min_influence(const BooleanFunction &f) {
    if (f.size() < 2) {
        throw InvalidInput("minimum influence needs n >= 1");
    }
    // Autocorrelation sum_x F(x)F(x+v) / 2^n = sum_w f^(w)^2 (-1)^(w.v) = 1 - 2 I_f(v).
    std::vector<double> power(f.size());
    for (std::size_t w = 0; w < f.size(); ++w) {
        power[w] = f.spectrum()[w] * f.spectrum()[w];
    }
    walsh_hadamard_in_place(power);
    double best = 1.0;
    for (std::size_t v = 1; v < f.size(); ++v) {
        best = std::min(best, (1.0 - power[v]) / 2.0);
    }
    // Influences are multiples of 2^-n; snap away transform rounding.
    return std::round(best * static_cast<double>(f.size())) / static_cast<double>(f.size());
}

bool promise_holds(const BooleanFunction &f, std::uint64_t s) {
    return influence(f, s) > 0;
}

ShiftOracle::ShiftOracle(BooleanFunction f, std::uint64_t shift)
    : bits_(f.bits()), counter_(std::make_shared<QueryCounter>()) {
    check_bits(bits_, kMaxSimulationBits);
    if (shift >= f.size()) {
        throw InvalidInput("shift outside the domain");
    }
    phases_ = shift_phases(f, shift);
}

QuantumState ShiftOracle::apply(const QuantumState &state, std::size_t reg, const Controls &controls) const {
    if (reg >= state.register_count() || state.register_dims()[reg] != phases_.size()) {
        throw InvalidInput("shift oracle applied to a mismatched register");
    }
    counter_->record();
    return apply_phases(state, phases_, {reg, 1}, controls);
}

QuantumState prepare_psi_fhat(const ShiftOracle &oracle) {
    QuantumState s = QuantumState::basis({std::size_t{1} << oracle.bits()});
    s = hadamard_all(s, 0);
    s = oracle.apply(s, 0);
    return hadamard_all(s, 0);
}

SpectrumPreparation::SpectrumPreparation(const ShiftOracle &oracle, const BooleanFunction &f_public)
    : oracle_(oracle), dims_{1, f_public.size()} {
    if (f_public.bits() != oracle.bits()) {
        throw InvalidInput("public function and oracle differ in n");
    }
    for (double c : f_public.spectrum()) {
        signs_.push_back(c < 0 ? -1.0 : 1.0);
    }
}

QuantumState SpectrumPreparation::apply(
    const QuantumState &state, RegisterRange target, bool inverse, const Controls &controls) const {
    if (target.count != 2 || target.first + 2 > state.register_count() ||
        state.register_dims()[target.first] != 1 || state.register_dims()[target.first + 1] != dims_[1]) {
        throw InvalidInput("spectrum preparation applied to mismatched registers");
    }
    const std::size_t reg = target.first + 1;
    QuantumState s = state;
    if (inverse) {
        s = apply_phases(s, signs_, {reg, 1}, controls);
    }
    s = hadamard_all(s, reg, controls);
    s = oracle_.apply(s, reg, controls);
    s = hadamard_all(s, reg, controls);
    if (!inverse) {
        s = apply_phases(s, signs_, {reg, 1}, controls);
    }
    return s;
}

AmplitudeVector spectrum_magnitudes(const BooleanFunction &f) {
    std::vector<double> v;
    for (double c : f.spectrum()) {
        v.push_back(std::abs(c));
    }
    return AmplitudeVector(std::move(v));
}

AmplitudeVector flat_target(int bits) {
    const std::size_t n = std::size_t{1} << bits;
    return AmplitudeVector(std::vector<double>(n, 1.0 / std::sqrt(static_cast<double>(n))));
}

ShiftResult run_bhsp(const ShiftOracle &oracle, const BooleanFunction &f_public, const ExactPlan &plan, Rng &rng) {
    SpectrumPreparation prep(oracle, f_public);
    RunResult run = run_aqrs(prep, spectrum_magnitudes(f_public), plan, rng);
    QuantumState s = hadamard_all(run.final_state, 1);
    std::vector<double> dist = outcome_probabilities(s, 1);
    Measurement m = measure_register(s, 1, rng);
    return ShiftResult{m.outcome, run.accept, run.accept_probability, run.queries, run.iterations, std::move(dist)};
}

ShiftResult run_bhsp(const ShiftOracle &oracle, const BooleanFunction &f_public, double p, Rng &rng) {
    ExactPlan plan = plan_exact(spectrum_magnitudes(f_public), flat_target(f_public.bits()), p);
    return run_bhsp(oracle, f_public, plan, rng);
}

double shift_state_overlap(const BooleanFunction &f, std::uint64_t a, std::uint64_t b) {
    if (a >= f.size() || b >= f.size()) {
        throw InvalidInput("shift outside the domain");
    }
    double sum = 0;
    for (std::uint64_t x = 0; x < f.size(); ++x) {
        sum += f(x ^ a) == f(x ^ b) ? 1.0 : -1.0;
    }
    return sum / static_cast<double>(f.size());
}

CheckResult check_shift(
    const ShiftOracle &oracle, const BooleanFunction &f_public, std::uint64_t v, std::uint64_t rounds, Rng &rng) {
    if (rounds == 0) {
        throw InvalidInput("check needs at least one round");
    }
    if (f_public.bits() != oracle.bits() || v >= f_public.size()) {
        throw InvalidInput("candidate does not match the oracle");
    }
    const std::vector<Complex> candidate = shift_phases(f_public, v);
    CheckResult result{true, 0, 0, 0.0};
    const std::uint64_t before = oracle.queries();
    for (std::uint64_t r = 0; r < rounds; ++r) {
        // Ancilla |+>; |phi_f(s)> on ancilla 0, |phi_f(v)> on ancilla 1.
        QuantumState s = QuantumState::basis({2, f_public.size()});
        s = hadamard_all(s, 0);
        s = hadamard_all(s, 1);
        s = oracle.apply(s, 1, {Control{0, 0}});
        s = apply_phases(s, candidate, {1, 1}, {Control{0, 1}});
        s = hadamard_all(s, 0);
        if (r == 0) {
            result.round_accept_probability = outcome_probabilities(s, 0)[0];
        }
        ++result.rounds_run;
        if (measure_register(s, 0, rng).outcome == 1) {
            result.accept = false;
            break;
        }
    }
    result.queries = oracle.queries() - before;
    return result;
}

std::uint64_t check_rounds(double min_influence, double delta) {
    if (!(min_influence > 0 && min_influence <= 1)) {
        throw InvalidInput("minimum influence must lie in (0, 1]");
    }
    if (!(delta > 0 && delta < 1)) {
        throw InvalidInput("delta must lie in (0, 1)");
    }
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(std::log(1.0 / delta) / min_influence)));
}

std::vector<double> cut_spectrum(const BooleanFunction &f, double gamma) {
    if (!(gamma >= 0 && gamma <= 1)) {
        throw InvalidInput("gamma must lie in [0, 1]");
    }
    const double level = gamma / std::sqrt(static_cast<double>(f.size()));
    std::vector<double> e;
    for (double c : f.spectrum()) {
        e.push_back(std::min(std::abs(c), level));
    }
    return e;
}

CutProbability cut_probability(const BooleanFunction &f, double gamma) {
    std::vector<double> e = cut_spectrum(f, gamma);
    double l1 = 0, l2 = 0;
    for (double x : e) {
        l1 += x;
        l2 += x * x;
    }
    if (!(l2 > 0)) {
        throw InvalidInput("the cut removes every Fourier coefficient");
    }
    const double norm = std::sqrt(l2);
    const double n = static_cast<double>(f.size());
    const double overlap = l1 / (std::sqrt(n) * norm);
    return CutProbability{overlap * overlap, (l1 / norm) * (l1 / norm) / n, norm};
}

BoostResult boosted_bhsp(
    const ShiftOracle &oracle, const BooleanFunction &f_public, double gamma, double delta, Rng &rng) {
    const double influence_floor = min_influence(f_public);
    if (!(influence_floor > 0)) {
        throw InvalidInput("some nonzero shift leaves f invariant; candidates cannot be checked");
    }
    CutProbability cut = cut_probability(f_public, gamma);
    ExactPlan plan =
        plan_for_epsilon(spectrum_magnitudes(f_public), AmplitudeVector(cut_spectrum(f_public, gamma)), cut.p);
    BoostResult result{0, 0, 0, check_rounds(influence_floor, delta * cut.p), cut, influence_floor};
    while (result.attempts < kMaxBoostAttempts) {
        ++result.attempts;
        ShiftResult run = run_bhsp(oracle, f_public, plan, rng);
        result.total_queries += run.queries;
        if (!run.accept) {
            continue;
        }
        CheckResult check = check_shift(oracle, f_public, run.s_hat, result.rounds_per_check, rng);
        result.total_queries += check.queries;
        if (check.accept) {
            result.s_hat = run.s_hat;
            return result;
        }
    }
    throw NumericalError("boosting found no candidate that passes the check");
}

}  // namespace qrs
