#include "thermoinfo/twolevel_gas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "thermoinfo/errors.hpp"

namespace thermoinfo::gas {

namespace {

// Below this many factors ln C(L, k) is summed term by term; lgamma
// differences lose relative accuracy when k << L.
constexpr std::uint64_t kDirectSumLimit = 1024;

void require_positive_energy(double bit_energy) {
    if (!(bit_energy > 0.0) || !std::isfinite(bit_energy)) {
        throw DomainError("bit energy must be finite and > 0");
    }
}

void require_interior(std::uint64_t length, std::uint64_t ones, const char* what) {
    if (ones == 0 || ones >= length) {
        throw DomainError(std::string(what) + " requires 0 < p < L (got L=" + std::to_string(length) +
                          ", p=" + std::to_string(ones) + "); use multiplicity_ln at the endpoints");
    }
}

} // namespace

void GasSpec::validate() const {
    if (length == 0) throw DomainError("gas length L must be >= 1");
    if (ones > length) {
        throw DomainError("occupied count p=" + std::to_string(ones) + " exceeds L=" + std::to_string(length));
    }
    require_positive_energy(bit_energy);
}

double multiplicity_ln(std::uint64_t length, std::uint64_t ones) {
    if (length == 0) throw DomainError("multiplicity_ln: L must be >= 1");
    if (ones > length) throw DomainError("multiplicity_ln: p must satisfy 0 <= p <= L");

    const std::uint64_t k = std::min(ones, length - ones);
    if (k == 0) return 0.0;

    if (k <= kDirectSumLimit) {
        // ln C(L, k) = sum_{i=1..k} ln((L - k + i) / i)
        double sum = 0.0;
        double comp = 0.0;
        const double base = static_cast<double>(length - k);
        for (std::uint64_t i = 1; i <= k; ++i) {
            const double di = static_cast<double>(i);
            const double term = std::log1p(base / di);
            const double y = term - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        return sum;
    }

    const double n = static_cast<double>(length);
    const double a = static_cast<double>(k);
    const double b = static_cast<double>(length - k);
    return std::lgamma(n + 1.0) - (std::lgamma(a + 1.0) + std::lgamma(b + 1.0));
}

double entropy_stirling(std::uint64_t length, std::uint64_t ones) {
    require_interior(length, ones, "entropy_stirling");
    const double n = static_cast<double>(length);
    const double p = static_cast<double>(ones);
    const double q = n - p;
    return n * std::log(n) - p * std::log(p) - q * std::log(q);
}

Temperature temperature_for_occupancy(std::uint64_t length, double ones, double bit_energy) {
    require_positive_energy(bit_energy);
    const double n = static_cast<double>(length);
    if (!(ones > 0.0) || !(ones < n)) {
        throw DomainError("temperature is only defined for 0 < p < L (p in {0, L} is the zero-temperature limit)");
    }
    const double log_ratio = std::log((n - ones) / ones);
    if (log_ratio == 0.0) {
        return Temperature{std::numeric_limits<double>::infinity(), TemperatureRegime::infinite};
    }
    const double kelvin = (bit_energy / kBoltzmann) / log_ratio;
    return Temperature{kelvin, kelvin > 0.0 ? TemperatureRegime::positive : TemperatureRegime::negative_inversion};
}

Temperature gas_temperature(const GasSpec& spec) {
    spec.validate();
    // Exact integer test for half filling keeps the sentinel independent of rounding.
    if (2 * spec.ones == spec.length) {
        return Temperature{std::numeric_limits<double>::infinity(), TemperatureRegime::infinite};
    }
    return temperature_for_occupancy(spec.length, static_cast<double>(spec.ones), spec.bit_energy);
}

double site_occupation_probability(double temperature, double bit_energy) {
    require_positive_energy(bit_energy);
    if (!(temperature > 0.0)) throw DomainError("temperature must be > 0");
    return 1.0 / (1.0 + std::exp(bit_energy / (kBoltzmann * temperature)));
}

double occupation_at(std::uint64_t length, double temperature, double bit_energy) {
    if (length == 0) throw DomainError("occupation_at: L must be >= 1");
    return static_cast<double>(length) * site_occupation_probability(temperature, bit_energy);
}

GasState describe(const GasSpec& spec) {
    spec.validate();
    GasState state;
    state.spec = spec;
    state.entropy_exact = multiplicity_ln(spec.length, spec.ones);
    if (spec.ones > 0 && spec.ones < spec.length) {
        state.entropy_stirling = entropy_stirling(spec.length, spec.ones);
        state.temperature = gas_temperature(spec);
    } else {
        state.entropy_stirling = std::numeric_limits<double>::quiet_NaN();
        state.temperature = Temperature{std::numeric_limits<double>::quiet_NaN(), TemperatureRegime::positive};
    }
    return state;
}

TransferLedger transfer_entropy_delta(std::uint64_t length, std::uint64_t p_hot, std::uint64_t p_cold,
                                      double bit_energy) {
    require_positive_energy(bit_energy);
    require_interior(length, p_hot, "transfer_entropy_delta (p_hot)");
    require_interior(length, p_cold, "transfer_entropy_delta (p_cold)");

    TransferLedger ledger;
    ledger.length = length;
    ledger.p_hot = p_hot;
    ledger.p_cold = p_cold;
    ledger.bit_energy = bit_energy;
    ledger.canonical = p_cold <= p_hot && 2 * p_hot < length;

    const double n = static_cast<double>(length);
    const double ph = static_cast<double>(p_hot);
    const double pc = static_cast<double>(p_cold);

    ledger.delta_Q = ph * bit_energy;
    // ln[(ph/pc)((n-pc)/(n-ph))] = log1p(n (ph-pc) / (pc (n-ph))); the integer
    // difference is exact, so near-equal occupancies keep full precision.
    const double gap = static_cast<double>(static_cast<std::int64_t>(p_hot) - static_cast<std::int64_t>(p_cold));
    ledger.delta_S_two_bath = kBoltzmann * (ledger.delta_Q / bit_energy) * std::log1p(n * gap / (pc * (n - ph)));

    ledger.T_hot = gas_temperature(GasSpec{length, p_hot, bit_energy});
    ledger.T_cold = gas_temperature(GasSpec{length, p_cold, bit_energy});
    ledger.rhs_clausius = ledger.delta_Q / ledger.T_cold.kelvin - ledger.delta_Q / ledger.T_hot.kelvin;
    return ledger;
}

} // namespace thermoinfo::gas
