#pragma once

// Statistical mechanics of the one-dimensional two-level gas: L sites, each
// either empty ("zero", energy 0) or occupied ("one", energy epsilon).

#include <cstdint>

#include "thermoinfo/quantities.hpp"

namespace thermoinfo::gas {

struct GasSpec {
    std::uint64_t length = 1;     // L, number of sites
    std::uint64_t ones = 0;       // p, occupied sites
    double bit_energy = 0.0;      // epsilon [J]

    /// Throws DomainError unless L >= 1, p <= L and epsilon > 0.
    void validate() const;

    [[nodiscard]] double energy() const { return static_cast<double>(ones) * bit_energy; }
};

/// ln C(L, p). Symmetric in p <-> L-p bit for bit.
double multiplicity_ln(std::uint64_t length, std::uint64_t ones);

/// L ln L - p ln p - (L-p) ln(L-p). Only defined for 0 < p < L.
double entropy_stirling(std::uint64_t length, std::uint64_t ones);

struct GasState {
    GasSpec spec;
    double entropy_exact = 0.0;     // nats
    double entropy_stirling = 0.0;  // nats, NaN at p in {0, L}
    Temperature temperature;        // undefined (NaN kelvin) at p in {0, L}
};

GasState describe(const GasSpec& spec);

/// Equilibrium temperature T = (eps/k) / ln[(L-p)/p].
///
/// p = L/2 gives the infinite-temperature sentinel, p > L/2 a negative
/// (inverted) temperature. p in {0, L} is the zero-temperature limit and
/// throws DomainError.
Temperature gas_temperature(const GasSpec& spec);

/// Same formula for a real-valued mean occupancy in (0, L).
Temperature temperature_for_occupancy(std::uint64_t length, double ones, double bit_energy);

/// Mean equilibrium occupancy L / (1 + exp(eps / kT)). Requires T > 0.
double occupation_at(std::uint64_t length, double temperature, double bit_energy);

/// Probability that a single site is occupied at temperature T.
double site_occupation_probability(double temperature, double bit_energy);

/// Hot-to-cold transfer bookkeeping using the heat convention dQ = p_hot * eps
/// for both baths.
struct TransferLedger {
    std::uint64_t length = 0;
    std::uint64_t p_hot = 0;
    std::uint64_t p_cold = 0;
    double bit_energy = 0.0;
    double delta_Q = 0.0;        // J
    double delta_S_two_bath = 0.0;  // J/K, (k dQ/eps) ln{(p_h/p_c)[(L-p_c)/(L-p_h)]}
    double rhs_clausius = 0.0;   // J/K, dQ/T_cold - dQ/T_hot
    Temperature T_hot;
    Temperature T_cold;
    /// True when 0 < p_cold <= p_hot < L/2, the ordinary hot-to-cold case.
    bool canonical = true;
};

TransferLedger transfer_entropy_delta(std::uint64_t length, std::uint64_t p_hot,
                                      std::uint64_t p_cold, double bit_energy);

} // namespace thermoinfo::gas
