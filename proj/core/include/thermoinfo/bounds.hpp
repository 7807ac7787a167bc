#pragma once

// Second-law inequalities: Carnot efficiency, the (generalised) Clausius
// check dS >= sum(dQ/T) + k dI, and the computing-rate bound.

#include <optional>
#include <string_view>
#include <vector>

#include "thermoinfo/broadcast.hpp"

namespace thermoinfo::bounds {

/// 1 - T_cold / T_hot. Requires T_hot > T_cold > 0.
double carnot_efficiency(double t_hot, double t_cold);

/// Signed heat flow into the ledgered system at bath temperature T.
struct HeatTerm {
    double delta_Q = 0.0;  // J
    double T = 0.0;        // K
};

enum class Verdict { satisfied, violated, equality };

std::string_view to_string(Verdict verdict);

struct EntropyLedger {
    double delta_S = 0.0;  // J/K
    std::vector<HeatTerm> heat_terms;
    double info_term = 0.0;   // nats
    double tolerance = 0.0;   // J/K, as applied
    double heat_sum = 0.0;    // sum dQ/T [J/K]
    double slack = 0.0;       // delta_S - heat_sum - k * info_term [J/K]
    Verdict verdict = Verdict::equality;
};

inline constexpr double kRelativeTolerance = 1e-12;

/// Evaluates slack = dS - sum(dQ/T) - k dI. With no tolerance given, uses
/// 1e-12 * max(|dS|, sum |dQ/T|, k dI).
///
/// Verdict is `equality` when |slack| <= tolerance, `violated` when
/// slack < -tolerance, `satisfied` otherwise.
EntropyLedger clausius_check(double delta_S, std::vector<HeatTerm> heat_terms, double info_term = 0.0,
                             std::optional<double> tolerance = std::nullopt);

/// f <= P / (margin k ln2 T_n) bits per second.
double max_computing_rate(double power, double noise_temperature,
                          double margin = broadcast::kDefaultSnrMargin);

} // namespace thermoinfo::bounds
