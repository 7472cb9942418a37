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


#include "qrs/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "qrs/amplification.hpp"
#include "qrs/errors.hpp"
#include "qrs/hidden_shift.hpp"
#include "qrs/linear_system.hpp"
#include "qrs/metropolis.hpp"
#include "qrs/random.hpp"
#include "qrs/resampling.hpp"
#include "qrs/summary.hpp"
#include "qrs/waterfill.hpp"

namespace qrs::cli {

namespace {

using json = nlohmann::json;

const std::vector<std::string> kSubcommands = {
    "waterfill", "certify", "qrs", "sqrs", "qle", "qmm", "bhsp", "bhsp-boost"};

json read_instance(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot read instance file " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw InvalidInput("instance file is not valid JSON: " + std::string(e.what()));
    }
}

template <class T>
T field(const json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw InvalidInput(std::string("instance is missing \"") + key + "\"");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &) {
        throw InvalidInput(std::string("instance field \"") + key + "\" has the wrong type");
    }
}

template <class T>
T field_or(const json &j, const char *key, T fallback) {
    return j.contains(key) ? field<T>(j, key) : fallback;
}

template <class T>
std::optional<T> optional_field(const json &j, const char *key) {
    if (!j.contains(key)) {
        return std::nullopt;
    }
    return field<T>(j, key);
}

json to_json(const Summary &s) {
    return {{"count", s.count}, {"mean", s.mean}, {"standard_error", s.standard_error}, {"min", s.min},
            {"p50", s.p50},     {"p90", s.p90},   {"max", s.max}};
}

template <class T>
json summary_of(const std::vector<json> &rows, const char *key) {
    std::vector<double> v;
    v.reserve(rows.size());
    for (const auto &r : rows) {
        v.push_back(static_cast<double>(r.at(key).get<T>()));
    }
    return to_json(summarize(std::move(v)));
}

std::uint64_t total_of(const std::vector<json> &rows, const char *key) {
    std::uint64_t total = 0;
    for (const auto &r : rows) {
        total += r.at(key).get<std::uint64_t>();
    }
    return total;
}

std::uint64_t count_true(const std::vector<json> &rows, const char *key) {
    return static_cast<std::uint64_t>(
        std::count_if(rows.begin(), rows.end(), [key](const json &r) { return r.at(key).get<bool>(); }));
}

std::uint64_t seed_of(const ExperimentConfig &config) {
    if (!config.seed) {
        throw InvalidInput("--seed is required for " + config.subcommand);
    }
    return *config.seed;
}

/// Trial t always draws from trial_rng(seed, t); workers only change which
/// thread computes it.
std::vector<json> run_trials(const ExperimentConfig &config, const std::function<json(std::uint64_t, Rng &)> &body) {
    const std::uint64_t seed = seed_of(config);
    std::vector<json> rows(config.trials);
    std::vector<std::exception_ptr> errors(config.trials);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t t = next++; t < config.trials; t = next++) {
            try {
                Rng rng = trial_rng(seed, t);
                rows[t] = body(t, rng);
                rows[t]["trial"] = t;
            } catch (...) {
                errors[t] = std::current_exception();
            }
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(config.trials)));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < jobs; ++w) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &th : pool) {
        th.join();
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return rows;
}

AmplitudeVector unit_field(const json &inst, const char *key) {
    return AmplitudeVector::unit(field<std::vector<double>>(inst, key));
}

double target_p(const ExperimentConfig &config, const json &inst) {
    return config.p ? *config.p : field<double>(inst, "p");
}

json bounds_json(const WaterFillBounds &b) {
    return {{"p_min", b.p_min}, {"p_max", b.p_max}, {"gamma_min", b.gamma_min}, {"gamma_max", b.gamma_max}};
}

json waterfill_result(const ExperimentConfig &config, const json &inst, bool detailed) {
    AmplitudeVector pi = unit_field(inst, "pi");
    AmplitudeVector sigma = unit_field(inst, "sigma");
    CertificateReport rep = verify_duality(pi, sigma, target_p(config, inst));
    const WaterFillSolution &sol = rep.solution;
    json result = {
        {"p", rep.p},
        {"gamma_bar", sol.gamma_bar},
        {"epsilon", sol.epsilon.values()},
        {"epsilon_norm", sol.epsilon.norm()},
        {"objective", sol.objective},
        {"p_achieved", sol.p_achieved},
        {"bounds", bounds_json(sol.bounds)},
        {"dual", nullptr},
        {"certificate", rep.pass() ? "pass" : "fail"},
        {"mode", to_string(rep.mode)},
    };
    if (rep.dual_available) {
        result["dual"] = {{"lambda", rep.witness.lambda}, {"mu", rep.witness.mu}, {"objective", rep.witness.objective}};
    }
    if (detailed) {
        result["primal_objective"] = rep.primal_objective;
        result["diagonal_slack"] = rep.diagonal_slack;
        result["trace_slack"] = rep.trace_slack;
        result["min_multiplier"] = rep.min_multiplier;
        result["min_eigenvalue"] = rep.min_eigenvalue;
        result["relative_gap"] = rep.relative_gap;
        result["bisection_iterations"] = sol.iterations;
        result["violations"] = rep.violations;
    }
    return result;
}

struct Outcome {
    json result;
    std::vector<json> trials;
    json queries = json::object();
};

Outcome run_waterfill(const ExperimentConfig &config, const json &inst) {
    return {waterfill_result(config, inst, config.subcommand == "certify"), {}, json::object()};
}

Outcome run_qrs(const ExperimentConfig &config, const json &inst) {
    AmplitudeVector pi = unit_field(inst, "pi");
    AmplitudeVector sigma = unit_field(inst, "sigma");
    const auto d = field_or<std::size_t>(inst, "d", 1);
    ExactPlan plan = plan_exact(pi, sigma, target_p(config, inst));
    Outcome o;
    o.trials = run_trials(config, [&](std::uint64_t, Rng &rng) {
        HiddenStates xi = random_hidden_states(pi.size(), d, rng);
        PreparationOracle oracle(pi, xi, rng());
        QuantumState reference = hidden_superposition(sigma, xi).with_register(2, 1);
        RunResult r = run_aqrs(oracle, pi, plan, rng, reference);
        return json{{"accept", r.accept},
                    {"accept_probability", r.accept_probability},
                    {"queries", r.queries},
                    {"overlap", r.accept ? json(*r.success_overlap) : json(nullptr)}};
    });
    o.result = {
        {"p", plan.p},
        {"lower_endpoint", plan.lower_endpoint},
        {"epsilon", plan.epsilon.values()},
        {"epsilon_norm", plan.epsilon.norm()},
        {"theta", plan.angles.theta},
        {"theta_tilde", plan.angles.theta_tilde},
        {"r", plan.angles.r},
        {"iterations", plan.angles.iterations},
        {"planned_queries", plan.queries()},
        {"accepted", count_true(o.trials, "accept")},
        {"accept_probability", summary_of<double>(o.trials, "accept_probability")},
        {"queries", summary_of<std::uint64_t>(o.trials, "queries")},
    };
    o.queries = {{"preparation", total_of(o.trials, "queries")}};
    return o;
}

Outcome run_sqrs(const ExperimentConfig &config, const json &inst) {
    AmplitudeVector pi = unit_field(inst, "pi");
    RatioVector tau(field<std::vector<double>>(inst, "tau"));
    const auto alpha = field_or<double>(inst, "alpha", 1.0);
    const auto d = field_or<std::size_t>(inst, "d", 1);
    const Schedule schedule;
    const double eps_norm = resampling_epsilon(pi, tau, alpha, schedule).norm();
    AmplitudeVector sigma = resampling_target(pi, tau);
    Outcome o;
    o.trials = run_trials(config, [&](std::uint64_t, Rng &rng) {
        HiddenStates xi = random_hidden_states(pi.size(), d, rng);
        QuantumState initial = hidden_superposition(pi, xi);
        ReflectionOracle reflection = ReflectionOracle::through_state(initial);
        ResamplingResult r = run_asqrs(initial, reflection, tau, alpha, rng, schedule);
        QuantumState target = hidden_superposition(sigma, xi).with_register(2, 1);
        json levels = json::array();
        for (const LevelRecord &l : r.levels) {
            levels.push_back({l.level, l.length, l.rounds, l.accepted});
        }
        return json{{"queries", r.queries},
                    {"reflections", r.reflections},
                    {"accepted_level", r.accepted_level},
                    {"fidelity", std::abs(overlap(target, r.final_state))},
                    {"levels", levels}};
    });

    // Visits and failures per level, next to the per-level failure bound.
    std::vector<std::uint64_t> visits;
    std::vector<std::uint64_t> failures;
    std::vector<std::uint64_t> lengths;
    for (const auto &row : o.trials) {
        for (const auto &l : row.at("levels")) {
            auto level = l.at(0).get<std::size_t>();
            if (level >= visits.size()) {
                visits.resize(level + 1, 0);
                failures.resize(level + 1, 0);
                lengths.resize(level + 1, 0);
            }
            ++visits[level];
            failures[level] += l.at(3).get<bool>() ? 0 : 1;
            lengths[level] = l.at(1).get<std::uint64_t>();
        }
    }
    json level_table = json::array();
    for (std::size_t l = 0; l < visits.size(); ++l) {
        if (visits[l] > 0) {
            level_table.push_back({{"level", l},
                                   {"length", lengths[l]},
                                   {"visits", visits[l]},
                                   {"failures", failures[l]},
                                   {"failure_bound", level_failure_bound(lengths[l], eps_norm)}});
        }
    }
    o.result = {
        {"alpha", alpha},
        {"epsilon_norm", eps_norm},
        {"query_bound", expected_query_bound(eps_norm)},
        {"queries", summary_of<std::uint64_t>(o.trials, "queries")},
        {"fidelity", summary_of<double>(o.trials, "fidelity")},
        {"levels", level_table},
    };
    o.queries = {{"reflection", total_of(o.trials, "queries")}};
    return o;
}

Outcome run_qle(const ExperimentConfig &config, const json &inst) {
    LinearSystem system = make_linear_system(
        field<std::vector<double>>(inst, "lambda"),
        field<std::vector<double>>(inst, "b"),
        field<double>(inst, "kappa"),
        optional_field<std::uint64_t>(inst, "basis_seed"));
    const auto kappa_tilde = field<double>(inst, "kappa_tilde");
    TruncatedWeights weights = truncated_weights(system, kappa_tilde);
    Outcome o;
    o.trials = run_trials(config, [&](std::uint64_t, Rng &rng) {
        LinearSolveResult r = solve_qle(system, kappa_tilde, rng);
        return json{{"queries", r.queries()},
                    {"reflections", r.reflections},
                    {"label_queries", r.label_queries},
                    {"rhs_queries", r.rhs_queries},
                    {"accepted_level", r.accepted_level},
                    {"fidelity", r.overlap},
                    {"p_measured", r.p_measured}};
    });
    json queries = summary_of<std::uint64_t>(o.trials, "queries");
    o.result = {
        {"kappa_tilde", kappa_tilde},
        {"w", weights.w},
        {"w_tilde", weights.w_tilde},
        {"p_predicted", weights.p_stated},
        {"p_predicted_squared", weights.p_squared},
        {"p_measured", summary_of<double>(o.trials, "p_measured")},
        {"fidelity", summary_of<double>(o.trials, "fidelity")},
        {"query_scale", weights.query_scale},
        {"queries_mean", queries.at("mean")},
        {"queries", queries},
    };
    o.queries = {{"phase_estimation", total_of(o.trials, "label_queries")},
                 {"rhs_reflection", total_of(o.trials, "rhs_queries")}};
    return o;
}

Eigen::MatrixXcd parse_matrix(const json &m) {
    if (!m.is_array() || m.empty()) {
        throw InvalidInput("gate matrices must be non-empty arrays of rows");
    }
    const auto n = static_cast<Eigen::Index>(m.size());
    Eigen::MatrixXcd out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const json &row = m[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
            throw InvalidInput("gate matrices must be square");
        }
        for (Eigen::Index j = 0; j < n; ++j) {
            const json &e = row[static_cast<std::size_t>(j)];
            if (e.is_number()) {
                out(i, j) = e.get<double>();
            } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
                out(i, j) = Complex(e[0].get<double>(), e[1].get<double>());
            } else {
                throw InvalidInput("gate entries are numbers or [re, im] pairs");
            }
        }
    }
    return out;
}

MetropolisInstance metropolis_instance(const json &inst) {
    auto energies = field<std::vector<double>>(inst, "E");
    const auto beta = field<double>(inst, "beta");
    const auto start = field_or<std::size_t>(inst, "start", 0);
    auto basis_seed = optional_field<std::uint64_t>(inst, "basis_seed");
    if (!inst.contains("gates")) {
        throw InvalidInput("instance is missing \"gates\"");
    }
    const json &gates = inst.at("gates");
    if (gates.is_number_unsigned()) {
        return make_metropolis_instance(
            std::move(energies), beta, start, gates.get<std::uint64_t>(), field_or<std::size_t>(inst, "gate_count", 2),
            basis_seed);
    }
    if (!gates.is_array() || gates.empty()) {
        throw InvalidInput("\"gates\" must be a seed or a list of matrices");
    }
    MetropolisInstance instance = make_metropolis_instance(std::move(energies), beta, start, 0, 1, basis_seed);
    instance.gates.clear();
    for (const json &g : gates) {
        instance.gates.push_back(parse_matrix(g));
    }
    instance.validate();
    return instance;
}

Outcome run_qmm(const ExperimentConfig &config, const json &inst) {
    MetropolisInstance instance = metropolis_instance(inst);
    const auto steps = field_or<std::uint64_t>(inst, "steps", 1);
    Outcome o;
    o.trials = run_trials(config, [&](std::uint64_t, Rng &rng) {
        ChainResult chain = run_chain(instance, steps, rng);
        return json{{"path", chain.path}, {"move_queries", chain.move_queries}, {"queries", chain.queries}};
    });
    std::vector<std::uint64_t> histogram(instance.dim(), 0);
    for (const auto &row : o.trials) {
        for (auto j : row.at("path")) {
            ++histogram[j.get<std::size_t>()];
        }
    }
    Eigen::MatrixXd p = transition_matrix(instance);
    json transition = json::array();
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
        json r = json::array();
        for (Eigen::Index j = 0; j < p.cols(); ++j) {
            r.push_back(p(i, j));
        }
        transition.push_back(r);
    }
    o.result = {
        {"steps", steps},
        {"start", instance.start},
        {"histogram", histogram},
        {"transition", transition},
        {"queries", summary_of<std::uint64_t>(o.trials, "queries")},
    };
    o.queries = {{"energy", total_of(o.trials, "queries")}};
    return o;
}

BooleanFunction read_function(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot read function file " + path);
    }
    int n = -1;
    std::string table;
    if (!(in >> n >> table) || n < 0) {
        throw InvalidInput("function file needs n on the first line and a truth table on the second");
    }
    if (n <= kMaxSpectrumBits && table.size() == (std::size_t{1} << n) &&
        table.find_first_not_of("01") == std::string::npos) {
        return BooleanFunction::from_bits(n, table);
    }
    return BooleanFunction::from_hex(n, table);
}

std::uint64_t draw_shift(const ExperimentConfig &config, const BooleanFunction &f, Rng &rng) {
    if (config.shift) {
        return *config.shift;
    }
    return std::uniform_int_distribution<std::uint64_t>(0, f.size() - 1)(rng);
}

Outcome run_bhsp_cmd(const ExperimentConfig &config, const BooleanFunction &f) {
    const double p = config.p ? *config.p : 1.0;
    ExactPlan plan = plan_exact(spectrum_magnitudes(f), flat_target(f.bits()), p);
    const double influence = min_influence(f);
    Outcome o;
    o.trials = run_trials(config, [&](std::uint64_t, Rng &rng) {
        const std::uint64_t s = draw_shift(config, f, rng);
        ShiftOracle oracle(f, s);
        ShiftResult r = run_bhsp(oracle, f, plan, rng);
        return json{{"s", s},
                    {"s_hat", r.s_hat},
                    {"accept", r.accept},
                    {"correct", r.accept && r.s_hat == s},
                    {"queries", r.queries},
                    {"p", plan.p},
                    {"epsilon_norm", plan.epsilon.norm()},
                    {"I_f", influence}};
    });
    o.result = {
        {"n", f.bits()},
        {"p", plan.p},
        {"epsilon_norm", plan.epsilon.norm()},
        {"iterations", plan.angles.iterations},
        {"planned_queries", plan.queries()},
        {"I_f", influence},
        {"correct", count_true(o.trials, "correct")},
        {"queries", summary_of<std::uint64_t>(o.trials, "queries")},
    };
    o.queries = {{"shift_oracle", total_of(o.trials, "queries")}};
    return o;
}

Outcome run_boost_cmd(const ExperimentConfig &config, const BooleanFunction &f) {
    CutProbability cut = cut_probability(f, config.gamma);
    Outcome o;
    o.trials = run_trials(config, [&](std::uint64_t, Rng &rng) {
        const std::uint64_t s = draw_shift(config, f, rng);
        ShiftOracle oracle(f, s);
        BoostResult b = boosted_bhsp(oracle, f, config.gamma, config.delta, rng);
        return json{{"s", s},
                    {"s_hat", b.s_hat},
                    {"correct", b.s_hat == s},
                    {"queries", b.total_queries},
                    {"attempts", b.attempts},
                    {"rounds_per_check", b.rounds_per_check},
                    {"p", b.cut.p},
                    {"p_l1", b.cut.p_l1},
                    {"epsilon_norm", b.cut.epsilon_norm},
                    {"I_f", b.min_influence}};
    });
    o.result = {
        {"n", f.bits()},
        {"gamma", config.gamma},
        {"delta", config.delta},
        {"p", cut.p},
        {"p_l1", cut.p_l1},
        {"epsilon_norm", cut.epsilon_norm},
        {"I_f", min_influence(f)},
        {"correct", count_true(o.trials, "correct")},
        {"attempts", summary_of<std::uint64_t>(o.trials, "attempts")},
        {"queries", summary_of<std::uint64_t>(o.trials, "queries")},
    };
    o.queries = {{"shift_oracle", total_of(o.trials, "queries")}};
    return o;
}

std::string csv_cell(const json &v) {
    std::string s;
    if (v.is_null()) {
        return s;
    }
    if (v.is_string()) {
        s = v.get<std::string>();
    } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json &e) { return e.is_primitive(); })) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            s += (i ? ";" : "") + csv_cell(v[i]);
        }
    } else {
        s = v.dump();
    }
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char ch : s) {
            quoted += ch == '"' ? "\"\"" : std::string(1, ch);
        }
        return quoted + "\"";
    }
    return s;
}

/// Nested objects become dotted columns.
void flatten(const json &obj, const std::string &prefix, json &out) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object()) {
            flatten(*it, key, out);
        } else {
            out[key] = *it;
        }
    }
}

}  // namespace

bool is_stochastic(const std::string &subcommand) {
    return subcommand != "waterfill" && subcommand != "certify";
}

nlohmann::json execute(const ExperimentConfig &config) {
    if (std::find(kSubcommands.begin(), kSubcommands.end(), config.subcommand) == kSubcommands.end()) {
        throw InvalidInput("unknown subcommand " + config.subcommand);
    }
    if (config.trials < 1) {
        throw InvalidInput("trials must be at least 1");
    }
    if (is_stochastic(config.subcommand)) {
        seed_of(config);
    }

    json echo;
    Outcome o;
    if (config.subcommand == "bhsp" || config.subcommand == "bhsp-boost") {
        BooleanFunction f = read_function(config.instance);
        echo = {{"n", f.bits()}, {"table", f.to_bits()}};
        o = config.subcommand == "bhsp" ? run_bhsp_cmd(config, f) : run_boost_cmd(config, f);
    } else {
        echo = read_instance(config.instance);
        if (config.subcommand == "waterfill" || config.subcommand == "certify") {
            o = run_waterfill(config, echo);
        } else if (config.subcommand == "qrs") {
            o = run_qrs(config, echo);
        } else if (config.subcommand == "sqrs") {
            o = run_sqrs(config, echo);
        } else if (config.subcommand == "qle") {
            o = run_qle(config, echo);
        } else {
            o = run_qmm(config, echo);
        }
    }

    json manifest = {
        {"subcommand", config.subcommand},
        {"instance_path", config.instance},
        {"instance", echo},
        {"seed", config.seed ? json(*config.seed) : json(nullptr)},
        {"trials", is_stochastic(config.subcommand) ? config.trials : 1},
    };
    if (config.p) {
        manifest["p"] = *config.p;
    }
    if (config.shift) {
        manifest["shift"] = *config.shift;
    }
    if (config.subcommand == "bhsp-boost") {
        manifest["gamma"] = config.gamma;
        manifest["delta"] = config.delta;
    }
    const Schedule schedule;
    return {
        {"config", manifest},
        {"constants", {{"c", schedule.c}, {"delta", schedule.delta}, {"r", schedule.r}, {"max_level", schedule.max_level}}},
        {"result", o.result},
        {"queries", o.queries},
        {"trials", o.trials},
    };
}

std::string to_csv(const nlohmann::json &document) {
    std::vector<json> rows;
    const json &trials = document.at("trials");
    if (trials.is_array() && !trials.empty()) {
        for (const auto &t : trials) {
            json flat = json::object();
            flatten(t, "", flat);
            rows.push_back(std::move(flat));
        }
    } else {
        json flat = json::object();
        flatten(document.at("result"), "", flat);
        rows.push_back(std::move(flat));
    }
    std::vector<std::string> columns;
    for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
        columns.push_back(it.key());
    }
    std::ostringstream out;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        out << (c ? "," : "") << columns[c];
    }
    out << '\n';
    for (const auto &row : rows) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            out << (c ? "," : "") << (row.contains(columns[c]) ? csv_cell(row.at(columns[c])) : "");
        }
        out << '\n';
    }
    return out.str();
}

int run(const ExperimentConfig &config, std::ostream &out, std::ostream &err) {
    try {
        json doc = execute(config);
        std::string text = config.format == Format::kCsv ? to_csv(doc) : doc.dump(2) + "\n";
        if (config.out.empty()) {
            out << text;
        } else {
            std::ofstream file(config.out, std::ios::binary);
            if (!file || !(file << text)) {
                throw InvalidInput("cannot write " + config.out);
            }
        }
        return kExitOk;
    } catch (const InfeasibleProbability &e) {
        err << "infeasible: " << e.what() << " (p = " << e.p() << ", attainable [" << e.p_min() << ", "
            << e.p_max() << "])\n";
        return kExitInfeasible;
    } catch (const InvalidInput &e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const json::exception &e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const NumericalError &e) {
        err << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    }
}

int run_command_line(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum rejection sampling experiments"};
    app.require_subcommand(1);
    ExperimentConfig config;
    std::uint64_t seed = 0;
    std::uint64_t shift = 0;
    double p = 0;
    std::string format = "json";

    for (const std::string &name : kSubcommands) {
        CLI::App *sub = app.add_subcommand(name);
        sub->add_option("--instance", config.instance, "Instance file")->required();
        sub->add_option("--seed", seed, "Base seed; trial t uses stream (seed, t)");
        sub->add_option("--trials", config.trials, "Number of trials")->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", config.out, "Output file; standard output when absent");
        sub->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
        if (name == "waterfill" || name == "certify" || name == "qrs" || name == "bhsp") {
            sub->add_option("--p", p, "Target success probability");
        }
        if (name == "bhsp" || name == "bhsp-boost") {
            sub->add_option("--shift", shift, "Hidden shift; random per trial when absent");
        }
        if (name == "bhsp-boost") {
            sub->add_option("--gamma", config.gamma, "Spectrum cut level")->check(CLI::Range(0.0, 1.0));
            sub->add_option("--delta", config.delta, "Failure probability")->check(CLI::PositiveNumber);
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitInvalidInput;
    }
    CLI::App *sub = app.get_subcommands().front();
    config.subcommand = sub->get_name();
    config.format = format == "csv" ? Format::kCsv : Format::kJson;
    if (sub->count("--seed") > 0) {
        config.seed = seed;
    }
    if (sub->get_option_no_throw("--p") && sub->count("--p") > 0) {
        config.p = p;
    }
    if (sub->get_option_no_throw("--shift") && sub->count("--shift") > 0) {
        config.shift = shift;
    }
    return run(config, out, err);
}

}  // namespace qrs::cli
