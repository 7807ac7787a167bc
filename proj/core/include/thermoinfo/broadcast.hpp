#pragma once

// Broadcast thermodynamics: transmitter and receiver file temperatures,
// the N-receiver entropy balance, maximum range and the antenna area bound.

#include <cstdint>
#include <optional>

namespace thermoinfo::broadcast {

inline constexpr double kDefaultNoiseTemperature = 300.0;  // K
inline constexpr double kDefaultSnrMargin = 10.0;

struct LinkBudget {
    double power = 0.0;                       // P [W]
    double bit_rate = 0.0;                    // f [bit/s]
    std::optional<double> carrier_frequency;  // [Hz], defaults to bit_rate
    double receiver_area = 0.0;               // A [m^2]
    std::optional<double> distance;           // R [m], unused by max_range
    double noise_temperature = kDefaultNoiseTemperature;  // T_n [K]
    double snr_margin = kDefaultSnrMargin;

    [[nodiscard]] double carrier() const { return carrier_frequency.value_or(bit_rate); }
    [[nodiscard]] double wavelength() const;

    /// Throws DomainError unless every present field is finite and > 0.
    void validate() const;
};

/// c / carrier_frequency.
double wavelength(double carrier_frequency);

/// T = P / (k f ln 2).
double transmitter_temperature(double power, double bit_rate);

/// Per-"one" bit energy for a random file sent at average power P and bit
/// rate f: eps = 2P/f. Makes P/(k f ln 2) agree with eps/(2 k ln 2).
double bit_energy_from_power(double power, double bit_rate);
double power_from_bit_energy(double bit_energy, double bit_rate);

struct ReceiverTemperature {
    double kelvin = 0.0;
    double geometric_factor = 0.0;  // A / (4 pi R^2)
    bool factor_at_least_unity = false;
};

/// T_r = T_i * A / (4 pi R^2). Flags receivers that would intercept the
/// whole sphere or more.
ReceiverTemperature receiver_temperature(double transmitter_kelvin, double area, double distance);

struct BroadcastBalance {
    double info_per_file = 0.0;  // nats
    std::uint64_t receivers = 0;
    double entropy_increase = 0.0;  // J/K, (N-1) k I
};

BroadcastBalance broadcast_entropy_balance(double info_nats, std::uint64_t receivers);

enum class DetectionCriterion {
    /// Received energy per bit slot (P/f) A/(4 pi R^2) >= margin * k T_n.
    bit_energy,
    /// Receiver file temperature T_i A/(4 pi R^2) >= margin * T_n.
    file_temperature,
};

/// Largest distance at which the chosen criterion holds with equality.
double max_range(const LinkBudget& budget, DetectionCriterion criterion = DetectionCriterion::bit_energy);

/// Received energy per bit slot at distance R [J].
double received_bit_energy(const LinkBudget& budget, double distance);

struct BroadcastInformation {
    double nats = 0.0;
    double bits = 0.0;
    bool antenna_smaller_than_wavelength = false;
};

/// ln2 * f * (4 pi R_i^2 / lambda^2) * dt nats.
BroadcastInformation max_broadcast_information(double bit_rate, double carrier_frequency, double antenna_radius,
                                               double duration);

} // namespace thermoinfo::broadcast
