// Copyright 2026 The binphase Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "binphase/experiments.hpp"

#include "binphase/sampling.hpp"

#include <json.hpp>

#include <bit>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numeric>
#include <ostream>

namespace binphase {

namespace {

int checked_depth(double v) {
    if (!(v >= 1.0) || v != std::floor(v) || v > 1e6) {
        throw UsageError("depth values must be positive integers");
    }
    return static_cast<int>(v);
}

std::uint64_t checked_k(double v) {
    if (!(v >= 1.0) || v != std::floor(v) || v > 0x1.0p62) {
        throw UsageError("k values must be powers of two");
    }
    const auto k = static_cast<std::uint64_t>(v);
    if (!std::has_single_bit(k)) {
        throw UsageError("k values must be powers of two");
    }
    return k;
}

void check_probabilities(const std::vector<double> &probs, const char *what) {
    for (const double p : probs) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw InvariantViolation(std::string(what) + ": probability outside [0, 1]");
        }
    }
}

double draw_guarded_phase(std::uint64_t seed, unsigned n, std::size_t trial, double guard) {
    std::mt19937_64 rng(derive_seed(derive_seed(seed, n), trial));
    for (;;) {
        const double phi = kTwoPi * uniform01(rng);
        if (!in_guard_band(phi, n, guard)) {
            return phi;
        }
    }
}

double trial_error(const RunConfig &config, unsigned n, std::size_t trial) {
    const double phi = draw_guarded_phase(config.seed, n, trial, config.guard);
    EstimationSpec spec;
    spec.epsilon = std::ldexp(kPi, -static_cast<int>(n));
    spec.depth = config.depth;
    spec.alpha = config.alpha;
    spec.beta = config.beta;
    spec.shots_per_iteration = config.shots;
    spec.seed = derive_seed(derive_seed(config.seed ^ 0x5ca1ab1eULL, n), trial);
    const EstimationResult r = run(spec, SimulatedSource(phi));
    return std::remainder(r.phi_hat - phi, kTwoPi);
}

void check_scaling_config(const RunConfig &config) {
    config.validate();
    if (config.trials < 100) {
        throw UsageError("scaling needs --trials >= 100");
    }
}

ScalingReport finish_scaling(const RunConfig &config,
                             const std::vector<std::vector<double>> &errors) {
    ScalingReport report;
    std::vector<double> log_np;
    std::vector<double> log_rmse;
    for (unsigned n = kScalingMinN; n <= kScalingMaxN; ++n) {
        const auto &e = errors[n - kScalingMinN];
        // fixed summation order keeps the output byte-stable
        const double mse = std::accumulate(e.begin(), e.end(), 0.0,
                                           [](double acc, double x) { return acc + x * x; }) /
                           static_cast<double>(e.size());
        ScalingRow row;
        row.n = n;
        row.resources = resource_count(config.depth, n);
        row.trials = e.size();
        row.half_width = std::ldexp(kPi, -static_cast<int>(n));
        row.rmse = std::sqrt(mse);
        row.predicted_rmse = row.half_width / std::sqrt(3.0);
        report.rows.push_back(row);
        log_np.push_back(std::log(static_cast<double>(row.resources)));
        log_rmse.push_back(std::log(row.rmse));
    }
    report.slope = fit_slope(log_np, log_rmse);
    return report;
}

std::string number_list(const std::vector<std::uint8_t> &bits) {
    std::string s;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        s += (i ? " " : "");
        s += bits[i] ? '1' : '0';
    }
    return s;
}

} // namespace

Table cmd_sweep(const RunConfig &config) {
    config.validate();
    const std::vector<double> values =
        config.values.empty() ? default_family_values(config.family) : config.values;

    Table t;
    t.columns = {"depth", "alpha", "k", "phi", "kphi", "p_exact"};
    if (config.shots > 0) {
        t.columns.emplace_back("p_sampled");
    }
    for (std::size_t v = 0; v < values.size(); ++v) {
        InterferometerConfig ic{config.iteration(), config.depth, config.alpha, config.beta};
        switch (config.family) {
        case SweepFamily::depth:
            ic.depth = checked_depth(values[v]);
            break;
        case SweepFamily::alpha:
            ic.alpha = values[v];
            break;
        case SweepFamily::k:
            ic.iteration = static_cast<unsigned>(std::countr_zero(checked_k(values[v])));
            break;
        }
        const ResponseCurve exact = sweep(ic, config.grid);
        check_probabilities(exact.probs, "sweep");
        ResponseCurve sampled;
        if (config.shots > 0) {
            sampled = sample_curve(exact, ShotPlan{config.shots, derive_seed(config.seed, v)});
        }
        const auto k = static_cast<double>(ic.k());
        for (std::size_t i = 0; i < exact.phis.size(); ++i) {
            std::vector<double> row{static_cast<double>(ic.depth), ic.alpha, k, exact.phis[i],
                                    k * exact.phis[i], exact.probs[i]};
            if (config.shots > 0) {
                row.push_back(sampled.probs[i]);
            }
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

Table cmd_compare(const RunConfig &config) {
    config.validate();
    const std::vector<double> depths = config.values.empty() ? kDefaultCompareDepths : config.values;
    const unsigned j = config.iteration();

    Table t;
    t.columns = {"depth", "phi", "f_trunc_renormalized", "p_beta1", "p_beta2"};
    for (const double dv : depths) {
        const int depth = checked_depth(dv);
        const ResponseCurve b1 = sweep({j, depth, config.alpha, 1.0}, config.grid);
        const ResponseCurve b2 = sweep({j, depth, config.alpha, 2.0}, config.grid);
        check_probabilities(b1.probs, "compare");
        check_probabilities(b2.probs, "compare");
        std::vector<double> ideal(b1.phis.size());
        for (std::size_t i = 0; i < ideal.size(); ++i) {
            ideal[i] = square_wave_truncated(j, depth, b1.phis[i], false);
        }
        const std::vector<double> unit = renormalize_to_unit(ideal);
        for (std::size_t i = 0; i < unit.size(); ++i) {
            t.rows.push_back({static_cast<double>(depth), b1.phis[i], unit[i], b1.probs[i],
                              b2.probs[i]});
        }
    }
    return t;
}

EstimateReport cmd_estimate(const RunConfig &config) {
    config.validate();
    EstimationSpec spec;
    spec.epsilon = config.epsilon;
    spec.depth = config.depth;
    spec.alpha = config.alpha;
    spec.beta = config.beta;
    spec.shots_per_iteration = config.shots;
    spec.seed = config.seed;
    spec.mode = config.mode;

    EstimateReport report;
    report.phi = canonical_phase(config.phi);
    report.epsilon = config.epsilon;
    report.depth = config.depth;
    report.mode = config.mode;
    report.result = run(spec, SimulatedSource(report.phi));

    const EstimationResult &r = report.result;
    if (r.m_tilde >= (std::uint64_t{1} << r.n) || r.bits.size() != r.n ||
        r.resources != resource_count(config.depth, r.n)) {
        throw InvariantViolation("estimate: inconsistent result");
    }
    return report;
}

ScalingReport cmd_scaling(const RunConfig &config) {
    check_scaling_config(config);
    std::vector<std::vector<double>> errors(kScalingMaxN - kScalingMinN + 1,
                                            std::vector<double>(config.trials));
    const auto trials = static_cast<std::ptrdiff_t>(config.trials);
    for (unsigned n = kScalingMinN; n <= kScalingMaxN; ++n) {
        auto &e = errors[n - kScalingMinN];
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 32)
        for (std::ptrdiff_t t = 0; t < trials; ++t) {
            try {
                e[static_cast<std::size_t>(t)] =
                    trial_error(config, n, static_cast<std::size_t>(t));
            } catch (...) {
#pragma omp critical(binphase_scaling_failure)
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
    }
    return finish_scaling(config, errors);
}

double fit_slope(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("fit_slope: need two or more paired points");
    }
    const double nx = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / nx;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / nx;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    if (sxx == 0.0) {
        throw std::invalid_argument("fit_slope: degenerate x");
    }
    return sxy / sxx;
}

Table scaling_table(const ScalingReport &report) {
    Table t;
    t.columns = {"n", "resources", "trials", "half_width", "rmse", "predicted_rmse"};
    for (const auto &r : report.rows) {
        t.rows.push_back({static_cast<double>(r.n), static_cast<double>(r.resources),
                          static_cast<double>(r.trials), r.half_width, r.rmse,
                          r.predicted_rmse});
    }
    return t;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_table(const Table &table, OutputFormat format, std::ostream &os) {
    if (format == OutputFormat::csv) {
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            os << (c ? "," : "") << table.columns[c];
        }
        os << '\n';
        for (const auto &row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                os << (c ? "," : "") << format_number(row[c]);
            }
            os << '\n';
        }
        return;
    }
    auto rows = nlohmann::json::array();
    for (const auto &row : table.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t c = 0; c < row.size(); ++c) {
            obj[table.columns[c]] = row[c];
        }
        rows.push_back(std::move(obj));
    }
    os << nlohmann::json{{"columns", table.columns}, {"rows", rows}}.dump(2) << '\n';
}

void write_estimate(const EstimateReport &report, OutputFormat format, std::ostream &os) {
    const EstimationResult &r = report.result;
    if (format == OutputFormat::json) {
        std::vector<int> bits(r.bits.begin(), r.bits.end());
        const nlohmann::json j{
            {"phi", report.phi},
            {"epsilon", report.epsilon},
            {"depth", report.depth},
            {"mode", to_string(report.mode)},
            {"bits", bits},
            {"m_tilde", r.m_tilde},
            {"phi_hat", r.phi_hat},
            {"half_width", r.half_width},
            {"n", r.n},
            {"resources", r.resources},
            {"shots_total", r.shots_total},
        };
        os << j.dump(2) << '\n';
        return;
    }
    os << "bits: " << number_list(r.bits) << '\n'
       << "m_tilde: " << r.m_tilde << '\n'
       << "phi_hat: " << format_number(r.phi_hat) << " +/- " << format_number(r.half_width)
       << '\n'
       << "n: " << r.n << '\n'
       << "resources: " << r.resources << '\n'
       << "shots_total: " << r.shots_total << '\n';
}

void write_scaling(const ScalingReport &report, OutputFormat format, std::ostream &os) {
    if (format == OutputFormat::csv) {
        write_table(scaling_table(report), format, os);
        return;
    }
    auto rows = nlohmann::json::array();
    for (const auto &r : report.rows) {
        rows.push_back({{"n", r.n},
                        {"resources", r.resources},
                        {"trials", r.trials},
                        {"half_width", r.half_width},
                        {"rmse", r.rmse},
                        {"predicted_rmse", r.predicted_rmse}});
    }
    os << nlohmann::json{{"rows", rows}, {"slope", report.slope}}.dump(2) << '\n';
}

namespace serial {

ScalingReport cmd_scaling(const RunConfig &config) {
    check_scaling_config(config);
    std::vector<std::vector<double>> errors;
    for (unsigned n = kScalingMinN; n <= kScalingMaxN; ++n) {
        std::vector<double> e;
        e.reserve(config.trials);
        for (std::size_t t = 0; t < config.trials; ++t) {
            e.push_back(trial_error(config, n, t));
        }
        errors.push_back(std::move(e));
    }
    return finish_scaling(config, errors);
}

} // namespace serial

} // namespace binphase
