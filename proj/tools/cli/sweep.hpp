#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cli/envelope.hpp"

namespace thermoinfo::cli {

struct SweepParam {
    std::string name;
    double default_value;
    std::string unit;
    bool integral = false;
};

using ParamMap = std::map<std::string, double>;

struct SweepTarget {
    std::string name;
    std::string description;
    std::vector<SweepParam> params;
    std::function<Record(const ParamMap&)> evaluate;
};

const std::vector<SweepTarget>& sweep_targets();
const SweepTarget& find_sweep_target(const std::string& name);

struct SweepRequest {
    std::string target;
    std::string param;
    double from = 0.0;
    double to = 0.0;
    unsigned points = 11;
    bool logarithmic = false;
    std::vector<std::string> overrides;  // "name=value"
};

/// Evaluates the target at `points` values of `param` between from and to
/// (inclusive). Output rows are in sweep order.
Envelope run_sweep(const SweepRequest& request);

} // namespace thermoinfo::cli
