#pragma once

#include <numbers>
#include <string_view>

namespace thermoinfo {

// Physical constants. Every module takes them from here.
inline constexpr double kBoltzmann = 1.380649e-23;  // J/K, exact (2019 SI)
inline constexpr double kSpeedOfLight = 2.99792458e8;  // m/s, exact
inline constexpr double kLn2 = std::numbers::ln2;

/// Information or entropy in natural units. Internal currency of the library;
/// bits and J/K appear only at API boundaries.
struct Nats {
    double value = 0.0;

    friend constexpr auto operator<=>(const Nats&, const Nats&) = default;
};

/// Thermodynamic entropy in J/K.
struct EntropySI {
    double value = 0.0;

    friend constexpr auto operator<=>(const EntropySI&, const EntropySI&) = default;
};

enum class InfoUnit { nats, bits, joules_per_kelvin };

std::string_view to_string(InfoUnit unit);

/// Converts a non-negative, finite amount of information to `target`.
/// Throws InvalidQuantityError otherwise.
double convert_information(Nats x, InfoUnit target);

Nats from_bits(double bits);
EntropySI to_entropy(Nats x);
Nats to_nats(EntropySI s);

/// Temperatures produced by the two-level formulas can be infinite (half
/// filling) or negative (population inversion). Kelvin is +inf in the former
/// case so that Q/T evaluates to zero without special-casing.
enum class TemperatureRegime { positive, negative_inversion, infinite };

struct Temperature {
    double kelvin = 0.0;
    TemperatureRegime regime = TemperatureRegime::positive;

    [[nodiscard]] bool is_infinite() const { return regime == TemperatureRegime::infinite; }
    [[nodiscard]] bool is_inverted() const { return regime == TemperatureRegime::negative_inversion; }
};

std::string_view to_string(TemperatureRegime regime);

} // namespace thermoinfo
