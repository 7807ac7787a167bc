#include "thermoinfo/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "thermoinfo/errors.hpp"
#include "thermoinfo/quantities.hpp"

namespace thermoinfo::bounds {

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::satisfied: return "satisfied";
        case Verdict::violated: return "violated";
        case Verdict::equality: return "equality";
    }
    return "?";
}

double carnot_efficiency(double t_hot, double t_cold) {
    if (!(t_cold > 0.0) || !std::isfinite(t_hot)) {
        throw DomainError("Carnot efficiency needs finite temperatures with T_cold > 0");
    }
    if (!(t_hot > t_cold)) throw DomainError("Carnot efficiency needs T_hot > T_cold: no extractable work");
    return 1.0 - t_cold / t_hot;
}

EntropyLedger clausius_check(double delta_S, std::vector<HeatTerm> heat_terms, double info_term,
                             std::optional<double> tolerance) {
    if (!std::isfinite(delta_S)) throw DomainError("delta_S must be finite");
    if (!std::isfinite(info_term)) throw DomainError("information term must be finite");
    if (tolerance && (!(*tolerance >= 0.0) || !std::isfinite(*tolerance))) {
        throw DomainError("tolerance must be finite and >= 0");
    }

    EntropyLedger ledger;
    ledger.delta_S = delta_S;
    ledger.info_term = info_term;

    double abs_sum = 0.0;
    for (const auto& term : heat_terms) {
        if (!(term.T > 0.0)) throw DomainError("every heat term needs T > 0");
        if (!std::isfinite(term.delta_Q)) throw DomainError("heat terms must be finite");
        const double ratio = term.delta_Q / term.T;
        ledger.heat_sum += ratio;
        abs_sum += std::abs(ratio);
    }
    ledger.heat_terms = std::move(heat_terms);

    const double info_entropy = kBoltzmann * info_term;
    ledger.slack = delta_S - ledger.heat_sum - info_entropy;
    ledger.tolerance = tolerance.value_or(
        kRelativeTolerance * std::max({std::abs(delta_S), abs_sum, std::abs(info_entropy)}));

    if (std::abs(ledger.slack) <= ledger.tolerance) {
        ledger.verdict = Verdict::equality;
    } else if (ledger.slack < 0.0) {
        ledger.verdict = Verdict::violated;
    } else {
        ledger.verdict = Verdict::satisfied;
    }
    return ledger;
}

double max_computing_rate(double power, double noise_temperature, double margin) {
    if (!(power > 0.0) || !std::isfinite(power)) throw DomainError("power must be finite and > 0");
    if (!(noise_temperature > 0.0) || !std::isfinite(noise_temperature)) {
        throw DomainError("noise temperature must be finite and > 0");
    }
    if (!(margin >= 1.0) || !std::isfinite(margin)) throw DomainError("margin must be finite and >= 1");
    return power / (margin * kBoltzmann * kLn2 * noise_temperature);
}

} // namespace thermoinfo::bounds
