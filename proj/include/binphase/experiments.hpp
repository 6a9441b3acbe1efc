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

/**
 * @file experiments.hpp
 * The four reproducibility experiments behind the `binphase` command line:
 * response sweeps, the ideal-vs-interferometer comparison, a single
 * estimation, and the resource-scaling study. Each returns plain data; the
 * writers below render it as CSV or JSON.
 */
#pragma once

#include "binphase/estimator.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace binphase {

/// Bad flags or config values (exit code 2).
class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Output could not be written (exit code 3).
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A computed result broke one of its own invariants (exit code 4).
class InvariantViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

enum class OutputFormat { csv, json };
enum class SweepFamily { depth, alpha, k };

struct RunConfig {
    int depth = 16;
    double alpha = kPi / 2.0;
    double beta = 2.0;
    std::uint64_t k = 1;
    std::size_t grid = 300;
    std::uint64_t shots = 1000;
    std::uint64_t seed = 1;
    double epsilon = kPi / 64.0;
    double phi = 3.0;
    std::size_t trials = 2000;
    std::string out; ///< empty: stdout
    OutputFormat format = OutputFormat::csv;
    double guard = 0.05;
    SweepFamily family = SweepFamily::depth;
    /// Sweep family values, or the depth list for compare. Empty: defaults.
    std::vector<double> values;
    RequestMode mode = RequestMode::sequential;

    /// iteration index j with k = 2^j; throws UsageError if k is not a power of two.
    [[nodiscard]] unsigned iteration() const;
    void validate() const;
};

OutputFormat parse_format(const std::string &s);
SweepFamily parse_family(const std::string &s);
RequestMode parse_mode(const std::string &s);
std::vector<double> parse_value_list(const std::string &s);
std::string to_string(SweepFamily f);
std::string to_string(RequestMode m);

std::vector<double> default_family_values(SweepFamily f);
inline const std::vector<double> kDefaultCompareDepths{1, 2, 4, 16};

/// Column-oriented numeric table.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/**
 * Response curves for one parameter family (depth, alpha or k) with the
 * remaining parameters taken from the config. Columns:
 *
 *     depth, alpha, k, phi, kphi, p_exact[, p_sampled]
 *
 * kphi = k * phi is the compressed x axis that lines up curves with
 * different periods. p_sampled appears only when shots > 0; curve i is
 * sampled with seed derive_seed(seed, i).
 */
Table cmd_sweep(const RunConfig &config);

/**
 * Ideal truncated square-wave series (renormalized to [0, 1] over the grid)
 * against the exact response for beta = 1 and beta = 2. Columns:
 *
 *     depth, phi, f_trunc_renormalized, p_beta1, p_beta2
 */
Table cmd_compare(const RunConfig &config);

struct EstimateReport {
    double phi = 0.0;
    double epsilon = 0.0;
    int depth = 0;
    RequestMode mode = RequestMode::sequential;
    EstimationResult result;
};

EstimateReport cmd_estimate(const RunConfig &config);

struct ScalingRow {
    unsigned n = 0;
    std::uint64_t resources = 0;
    std::size_t trials = 0;
    double half_width = 0.0;
    double rmse = 0.0;
    double predicted_rmse = 0.0; ///< half_width / sqrt(3)
};

struct ScalingReport {
    std::vector<ScalingRow> rows;
    double slope = 0.0; ///< least-squares slope of log rmse against log resources
};

inline constexpr unsigned kScalingMinN = 2;
inline constexpr unsigned kScalingMaxN = 8;

/// Estimation error over guarded uniform phases for n = 2..8. Trial t at
/// level n draws its phase from derive_seed(derive_seed(seed, n), t).
ScalingReport cmd_scaling(const RunConfig &config);

/// Ordinary least-squares slope of y against x.
double fit_slope(const std::vector<double> &x, const std::vector<double> &y);

Table scaling_table(const ScalingReport &report);

/// 12 significant digits, "%.12g".
std::string format_number(double v);

void write_table(const Table &table, OutputFormat format, std::ostream &os);
void write_estimate(const EstimateReport &report, OutputFormat format, std::ostream &os);
void write_scaling(const ScalingReport &report, OutputFormat format, std::ostream &os);

namespace serial {
ScalingReport cmd_scaling(const RunConfig &config);
} // namespace serial

} // namespace binphase
