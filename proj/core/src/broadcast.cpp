#include "thermoinfo/broadcast.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "thermoinfo/errors.hpp"
#include "thermoinfo/quantities.hpp"

namespace thermoinfo::broadcast {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw DomainError(std::string(name) + " must be finite and > 0");
    }
}

} // namespace

double wavelength(double carrier_frequency) {
    require_positive(carrier_frequency, "carrier frequency");
    return kSpeedOfLight / carrier_frequency;
}

double LinkBudget::wavelength() const { return broadcast::wavelength(carrier()); }

void LinkBudget::validate() const {
    require_positive(power, "power");
    require_positive(bit_rate, "bit rate");
    if (carrier_frequency) require_positive(*carrier_frequency, "carrier frequency");
    require_positive(receiver_area, "receiver area");
    if (distance) require_positive(*distance, "distance");
    require_positive(noise_temperature, "noise temperature");
    require_positive(snr_margin, "SNR margin");
}

double transmitter_temperature(double power, double bit_rate) {
    require_positive(power, "power");
    require_positive(bit_rate, "bit rate");
    return power / (kBoltzmann * bit_rate * kLn2);
}

double bit_energy_from_power(double power, double bit_rate) {
    require_positive(power, "power");
    require_positive(bit_rate, "bit rate");
    return 2.0 * power / bit_rate;
}

double power_from_bit_energy(double bit_energy, double bit_rate) {
    require_positive(bit_energy, "bit energy");
    require_positive(bit_rate, "bit rate");
    return bit_rate * bit_energy / 2.0;
}

ReceiverTemperature receiver_temperature(double transmitter_kelvin, double area, double distance) {
    require_positive(transmitter_kelvin, "transmitter temperature");
    require_positive(area, "receiver area");
    require_positive(distance, "distance");
    ReceiverTemperature r;
    r.geometric_factor = area / (kFourPi * distance * distance);
    r.kelvin = transmitter_kelvin * r.geometric_factor;
    r.factor_at_least_unity = r.geometric_factor >= 1.0;
    return r;
}

BroadcastBalance broadcast_entropy_balance(double info_nats, std::uint64_t receivers) {
    if (!(info_nats >= 0.0) || !std::isfinite(info_nats)) {
        throw DomainError("information must be finite and >= 0");
    }
    if (receivers == 0) throw DomainError("receiver count N must be >= 1");
    return BroadcastBalance{info_nats, receivers,
                            static_cast<double>(receivers - 1) * kBoltzmann * info_nats};
}

double received_bit_energy(const LinkBudget& budget, double distance) {
    budget.validate();
    require_positive(distance, "distance");
    return (budget.power / budget.bit_rate) * budget.receiver_area / (kFourPi * distance * distance);
}

double max_range(const LinkBudget& budget, DetectionCriterion criterion) {
    budget.validate();
    switch (criterion) {
        case DetectionCriterion::bit_energy:
            return std::sqrt((budget.power / budget.bit_rate) * budget.receiver_area /
                             (kFourPi * budget.snr_margin * kBoltzmann * budget.noise_temperature));
        case DetectionCriterion::file_temperature: {
            const double t_i = transmitter_temperature(budget.power, budget.bit_rate);
            return std::sqrt(t_i * budget.receiver_area / (kFourPi * budget.snr_margin * budget.noise_temperature));
        }
    }
    throw DomainError("unknown detection criterion");
}

BroadcastInformation max_broadcast_information(double bit_rate, double carrier_frequency, double antenna_radius,
                                               double duration) {
    require_positive(bit_rate, "bit rate");
    require_positive(antenna_radius, "antenna radius");
    require_positive(duration, "duration");
    const double lambda = wavelength(carrier_frequency);

    BroadcastInformation out;
    out.bits = bit_rate * (kFourPi * antenna_radius * antenna_radius / (lambda * lambda)) * duration;
    out.nats = kLn2 * out.bits;
    out.antenna_smaller_than_wavelength = antenna_radius < lambda;
    return out;
}

} // namespace thermoinfo::broadcast
