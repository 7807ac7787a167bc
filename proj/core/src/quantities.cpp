#include "thermoinfo/quantities.hpp"

#include <cmath>
#include <limits>

#include "thermoinfo/errors.hpp"

namespace thermoinfo {

std::string_view to_string(InfoUnit unit) {
    switch (unit) {
        case InfoUnit::nats: return "nats";
        case InfoUnit::bits: return "bits";
        case InfoUnit::joules_per_kelvin: return "J/K";
    }
    return "?";
}

std::string_view to_string(TemperatureRegime regime) {
    switch (regime) {
        case TemperatureRegime::positive: return "positive";
        case TemperatureRegime::negative_inversion: return "negative (population inversion)";
        case TemperatureRegime::infinite: return "infinite";
    }
    return "?";
}

double convert_information(Nats x, InfoUnit target) {
    if (!std::isfinite(x.value) || x.value < 0.0) {
        throw InvalidQuantityError("information amount must be finite and non-negative");
    }
    switch (target) {
        case InfoUnit::nats: return x.value;
        case InfoUnit::bits: return x.value / kLn2;
        case InfoUnit::joules_per_kelvin: return x.value * kBoltzmann;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

Nats from_bits(double bits) {
    if (!std::isfinite(bits) || bits < 0.0) {
        throw InvalidQuantityError("bit count must be finite and non-negative");
    }
    return Nats{bits * kLn2};
}

EntropySI to_entropy(Nats x) { return EntropySI{convert_information(x, InfoUnit::joules_per_kelvin)}; }

Nats to_nats(EntropySI s) {
    if (!std::isfinite(s.value) || s.value < 0.0) {
        throw InvalidQuantityError("entropy must be finite and non-negative");
    }
    return Nats{s.value / kBoltzmann};
}

} // namespace thermoinfo
