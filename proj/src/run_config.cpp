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

#include <bit>
#include <cmath>
#include <sstream>

namespace binphase {

unsigned RunConfig::iteration() const {
    if (k == 0 || !std::has_single_bit(k)) {
        throw UsageError("--k must be a power of two, got " + std::to_string(k));
    }
    return static_cast<unsigned>(std::countr_zero(k));
}

void RunConfig::validate() const {
    if (depth < 1) {
        throw UsageError("--depth must be >= 1");
    }
    if (!std::isfinite(alpha)) {
        throw UsageError("--alpha must be finite");
    }
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw UsageError("--beta must be > 0");
    }
    (void)iteration();
    if (grid < 2) {
        throw UsageError("--grid must be >= 2");
    }
    if (!(epsilon > 0.0 && epsilon < kPi)) {
        throw UsageError("--epsilon must lie in (0, pi)");
    }
    if (!std::isfinite(phi)) {
        throw UsageError("--phi must be finite");
    }
    if (!(guard >= 0.0 && guard < 1.0)) {
        throw UsageError("--guard must lie in [0, 1)");
    }
}

OutputFormat parse_format(const std::string &s) {
    if (s == "csv") {
        return OutputFormat::csv;
    }
    if (s == "json") {
        return OutputFormat::json;
    }
    throw UsageError("unknown format '" + s + "' (csv|json)");
}

SweepFamily parse_family(const std::string &s) {
    if (s == "depth") {
        return SweepFamily::depth;
    }
    if (s == "alpha") {
        return SweepFamily::alpha;
    }
    if (s == "k") {
        return SweepFamily::k;
    }
    throw UsageError("unknown family '" + s + "' (depth|alpha|k)");
}

RequestMode parse_mode(const std::string &s) {
    if (s == "sequential") {
        return RequestMode::sequential;
    }
    if (s == "parallel") {
        return RequestMode::parallel;
    }
    throw UsageError("unknown mode '" + s + "' (sequential|parallel)");
}

std::vector<double> parse_value_list(const std::string &s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception &) {
            throw UsageError("not a number in value list: '" + item + "'");
        }
        if (used != item.size() || !std::isfinite(v)) {
            throw UsageError("not a number in value list: '" + item + "'");
        }
        out.push_back(v);
    }
    return out;
}

std::string to_string(SweepFamily f) {
    switch (f) {
    case SweepFamily::depth:
        return "depth";
    case SweepFamily::alpha:
        return "alpha";
    case SweepFamily::k:
        return "k";
    }
    return "?";
}

std::string to_string(RequestMode m) {
    return m == RequestMode::sequential ? "sequential" : "parallel";
}

std::vector<double> default_family_values(SweepFamily f) {
    switch (f) {
    case SweepFamily::depth:
        return {1, 2, 4, 16};
    case SweepFamily::alpha:
        return {0.5, 1.0, 1.5, kPi / 2.0, 2.0, 2.5, 3.0};
    case SweepFamily::k:
        return {1, 2, 4, 8};
    }
    return {};
}

} // namespace binphase
