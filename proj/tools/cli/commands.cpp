#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <numeric>
#include <optional>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "cli/cli.hpp"
#include "cli/envelope.hpp"
#include "cli/sweep.hpp"
#include "json.hpp"
#include "thermoinfo/bounds.hpp"
#include "thermoinfo/broadcast.hpp"
#include "thermoinfo/errors.hpp"
#include "thermoinfo/file_info.hpp"
#include "thermoinfo/mc_sim.hpp"
#include "thermoinfo/quantities.hpp"
#include "thermoinfo/twolevel_gas.hpp"

namespace thermoinfo::cli {

namespace {

void add_temperature(Envelope& env, const std::string& name, const Temperature& t) {
    env.result(name, t.kelvin, "K");
    env.result(name + "_regime", std::string(to_string(t.regime)), "");
    if (t.is_infinite()) env.warnings.push_back(name + " is infinite (half filling, p = L/2)");
    if (t.is_inverted()) env.warnings.push_back(name + " is negative: population inversion (p > L/2)");
}

std::vector<std::uint8_t> read_all(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::uint8_t> read_source(const std::string& path, std::istream& stdin_stream) {
    if (path == "-") return read_all(stdin_stream);
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open input file '" + path + "'");
    return read_all(f);
}

void add_ledger_fields(Record& r, const mc::SimLedger& l) {
    r.push_back({"seed", l.seed, "1"});
    r.push_back({"steps", l.steps, "count"});
    r.push_back({"p_initial", l.p_initial, "count"});
    r.push_back({"p_final", l.p_final, "count"});
    r.push_back({"flips_up", l.flips_up, "count"});
    r.push_back({"flips_down", l.flips_down, "count"});
    r.push_back({"energy_initial", l.energy_initial, "J"});
    r.push_back({"energy_final", l.energy_final, "J"});
    r.push_back({"heat_to_cold", l.heat_to_cold, "J"});
    r.push_back({"entropy_hot_bath", l.entropy_hot_bath, "J/K"});
    r.push_back({"entropy_cold_bath", l.entropy_cold_bath, "J/K"});
    r.push_back({"entropy_gas_change", l.entropy_gas_change, "J/K"});
    r.push_back({"total_entropy_change", l.total_entropy_change, "J/K"});
    if (l.two_bath_ledger) {
        r.push_back({"two_bath_delta_S", l.two_bath_ledger->delta_S_two_bath, "J/K"});
        r.push_back({"two_bath_rhs_clausius", l.two_bath_ledger->rhs_clausius, "J/K"});
    } else {
        r.push_back({"two_bath_delta_S", nullptr, "J/K"});
        r.push_back({"two_bath_rhs_clausius", nullptr, "J/K"});
    }
}

} // namespace

struct Application::State {
    explicit State(std::istream& in) : input(in) {}

    std::istream& input;
    bool json = false;
    bool csv = false;
    std::function<Envelope()> action;

    // gas
    std::uint64_t length = 0;
    std::uint64_t ones = 0;
    std::uint64_t p_hot = 0;
    std::uint64_t p_cold = 0;
    double epsilon = 0.0;
    double temperature = 0.0;

    // file
    std::string input_path = "-";
    unsigned block_bits = 8;

    // broadcast
    double power = 0.0;
    double bit_rate = 0.0;
    std::optional<double> carrier;
    std::optional<double> area;
    std::string area_mode = "explicit";
    double area_fraction = 1.0;
    double noise_temp = broadcast::kDefaultNoiseTemperature;
    double margin = broadcast::kDefaultSnrMargin;
    std::string criterion = "bit-energy";
    double t_i = 0.0;
    double distance = 0.0;
    double info = 0.0;
    std::uint64_t receivers = 1;
    double radius = 0.0;
    double duration = 1.0;

    // clausius
    std::string ledger_path = "-";
    double t_hot = 0.0;
    double t_cold = 0.0;

    // simulate
    mc::TransferParams sim{1000, 0.0, 0.0, 0.0, 1'000'000};
    std::uint64_t seed = 1;
    std::uint64_t ensemble = 0;
    unsigned threads = 0;

    // sweep
    SweepRequest sweep;
};

namespace {

using State = Application::State;

// Every option documents its unit in brackets; the help test relies on it.
CLI::Option* opt_L(CLI::App* c, State& s) {
    return c->add_option("--L", s.length, "Number of sites [count]")->required()->check(CLI::PositiveNumber);
}
CLI::Option* opt_epsilon(CLI::App* c, State& s) {
    return c->add_option("--epsilon", s.epsilon, "Energy of a 'one' bit [J]")->required()->check(CLI::PositiveNumber);
}

void setup_gas(CLI::App& root, State& s) {
    auto* gas_cmd = root.add_subcommand("gas", "Two-level gas: multiplicity, entropy, temperature, occupancy, transfer");
    gas_cmd->require_subcommand(1);

    auto* mult = gas_cmd->add_subcommand("multiplicity", "ln C(L, p), the log-multiplicity of p ones in L sites");
    opt_L(mult, s);
    mult->add_option("--p", s.ones, "Number of occupied sites [count]")->required();
    mult->callback([&s] {
        s.action = [&s] {
            Envelope env;
            env.command = "gas multiplicity";
            env.input("L", s.length, "count");
            env.input("p", s.ones, "count");
            const double h = gas::multiplicity_ln(s.length, s.ones);
            env.result("multiplicity_ln", h, "nats");
            env.result("multiplicity_bits", convert_information(Nats{h}, InfoUnit::bits), "bits");
            env.result("entropy", convert_information(Nats{h}, InfoUnit::joules_per_kelvin), "J/K");
            return env;
        };
    });

    auto* ent = gas_cmd->add_subcommand("entropy", "Exact and Stirling entropy of the gas");
    opt_L(ent, s);
    ent->add_option("--p", s.ones, "Number of occupied sites [count]")->required();
    ent->callback([&s] {
        s.action = [&s] {
            Envelope env;
            env.command = "gas entropy";
            env.input("L", s.length, "count");
            env.input("p", s.ones, "count");
            const double exact = gas::multiplicity_ln(s.length, s.ones);
            env.result("entropy_exact", exact, "nats");
            if (s.ones > 0 && s.ones < s.length) {
                const double st = gas::entropy_stirling(s.length, s.ones);
                env.result("entropy_stirling", st, "nats");
                env.result("stirling_relative_error", exact > 0 ? (st - exact) / exact : 0.0, "1");
            } else {
                env.result("entropy_stirling", nullptr, "nats");
                env.warnings.push_back("Stirling form is undefined at p = 0 and p = L");
            }
            return env;
        };
    });

    auto* temp = gas_cmd->add_subcommand("temperature", "Equilibrium temperature (eps/k) / ln[(L-p)/p]");
    opt_L(temp, s);
    temp->add_option("--p", s.ones, "Number of occupied sites [count]")->required();
    opt_epsilon(temp, s);
    temp->callback([&s] {
        s.action = [&s] {
            Envelope env;
            env.command = "gas temperature";
            env.input("L", s.length, "count");
            env.input("p", s.ones, "count");
            env.input("epsilon", s.epsilon, "J");
            const gas::GasSpec spec{s.length, s.ones, s.epsilon};
            env.result("energy", spec.energy(), "J");
            add_temperature(env, "temperature", gas::gas_temperature(spec));
            return env;
        };
    });

    auto* occ = gas_cmd->add_subcommand("occupation", "Mean equilibrium occupancy L / (1 + exp(eps/kT))");
    opt_L(occ, s);
    occ->add_option("--T", s.temperature, "Bath temperature [K]")->required();
    opt_epsilon(occ, s);
    occ->callback([&s] {
        s.action = [&s] {
            Envelope env;
            env.command = "gas occupation";
            env.input("L", s.length, "count");
            env.input("T", s.temperature, "K");
            env.input("epsilon", s.epsilon, "J");
            env.result("occupancy", gas::occupation_at(s.length, s.temperature, s.epsilon), "count");
            env.result("site_probability", gas::site_occupation_probability(s.temperature, s.epsilon), "1");
            return env;
        };
    });

    auto* tr = gas_cmd->add_subcommand("transfer", "Entropy ledger for moving the gas from a hot to a cold bath");
    opt_L(tr, s);
    tr->add_option("--p-hot", s.p_hot, "Occupied sites in the hot bath [count]")->required();
    tr->add_option("--p-cold", s.p_cold, "Occupied sites in the cold bath [count]")->required();
    opt_epsilon(tr, s);
    tr->callback([&s] {
        s.action = [&s] {
            Envelope env;
            env.command = "gas transfer";
            env.input("L", s.length, "count");
            env.input("p_hot", s.p_hot, "count");
            env.input("p_cold", s.p_cold, "count");
            env.input("epsilon", s.epsilon, "J");
            const auto l = gas::transfer_entropy_delta(s.length, s.p_hot, s.p_cold, s.epsilon);
            env.result("delta_Q", l.delta_Q, "J");
            env.result("delta_S_two_bath", l.delta_S_two_bath, "J/K");
            env.result("rhs_clausius", l.rhs_clausius, "J/K");
            add_temperature(env, "T_hot", l.T_hot);
            add_temperature(env, "T_cold", l.T_cold);
            env.result("canonical", l.canonical, "");
            if (!l.canonical) env.warnings.push_back("not the canonical ordering 0 < p_cold <= p_hot < L/2");
            return env;
        };
    });
}

void setup_file(CLI::App& root, State& s) {
    auto* file_cmd = root.add_subcommand("file", "Binary file as a frozen two-level gas");
    file_cmd->require_subcommand(1);

    auto* an = file_cmd->add_subcommand("analyze", "Counts, energy, information estimates and temperatures of a file");
    opt_epsilon(an, s);
    an->add_option("--input", s.input_path, "File to analyse, '-' for standard input [path]")->capture_default_str();
    an->add_option("--block-size", s.block_bits, "Block length k for the block entropy estimate [bits]")
        ->capture_default_str()
        ->check(CLI::Range(1u, file::kMaxBlockBits));
    an->callback([&s] {
        s.action = [&s] {
            Envelope env;
            env.command = "file analyze";
            env.input("input", s.input_path, "");
            env.input("epsilon", s.epsilon, "J");
            env.input("block_size", static_cast<std::uint64_t>(s.block_bits), "bits");
            const auto bytes = read_source(s.input_path, s.input);
            const file::FileReport r = file::analyze(bytes, s.epsilon, s.block_bits);
            env.result("bit_length", r.bit_length, "count");
            env.result("ones_count", r.ones_count, "count");
            env.result("bit_energy", r.bit_energy, "J");
            env.result("energy", r.energy, "J");
            env.result("info_max", r.info_max, "nats");
            env.result("info_order0", r.info_order0, "nats");
            if (r.info_block_k) {
                env.result("info_block_k", *r.info_block_k, "nats");
            } else {
                env.result("info_block_k", nullptr, "nats");
                env.warnings.push_back("file too short for block entropy with k=" + std::to_string(s.block_bits) +
                                       " (needs " + std::to_string(file::min_bits_for_block(s.block_bits)) + " bits)");
            }
            env.result("info_compression", r.info_compression, "nats");
            env.result("file_temperature", r.file_temperature, "K");
            env.result("effective_temperature", r.effective_temperature.kelvin, "K");
            env.result("equilibrium_score", r.equilibrium_score, "1");
            env.notes.push_back(r.in_equilibrium() ? "equilibrium (incompressible)"
                                                   : "out of equilibrium (compressible)");
            env.notes.push_back("information estimates are upper bounds on the true information content");
            return env;
        };
    });

    auto* temp = file_cmd->add_subcommand("temperature", "Random-file temperature eps / (2 k ln2)");
    opt_epsilon(temp, s);
    temp->callback([&s] {
        s.action = [&s] {
            Envelope env;
            env.command = "file temperature";
            env.input("epsilon", s.epsilon, "J");
            env.result("file_temperature", file::file_temperature(s.epsilon), "K");
            return env;
        };
    });
}

void setup_broadcast(CLI::App& root, State& s) {
    auto* bc = root.add_subcommand("broadcast", "Broadcast thermodynamics: temperatures, balance, range, area bound");
    bc->require_subcommand(1);

    auto* tx = bc->add_subcommand("transmitter-temp", "Transmitter file temperature P / (k f ln2)");
    tx->add_option("--power", s.power, "Average radiated power [W]")->required();
    tx->add_option("--bit-rate", s.bit_rate, "Bit rate [bit/s]")->required();
    tx->callback([&s] {
        s.action = [&s] {
            Envelope env;
            env.command = "broadcast transmitter-temp";
            env.input("power", s.power, "W");
            env.input("bit_rate", s.bit_rate, "bit/s");
            env.result("transmitter_temperature", broadcast::transmitter_temperature(s.power, s.bit_rate), "K");
            env.result("bit_energy", broadcast::bit_energy_from_power(s.power, s.bit_rate), "J");
            return env;
        };
    });

    auto* rx = bc->add_subcommand("receiver-temp", "Receiver file temperature T_i A / (4 pi R^2)");
    rx->add_option("--T-i", s.t_i, "Transmitter temperature [K]")->required();
    rx->add_option("--area", s.area, "Receiver antenna area [m^2]")->required();
    rx->add_option("--distance", s.distance, "Transmitter-receiver distance [m]")->required();
    rx->callback([&s] {
        s.action = [&s] {
            Envelope env;
            env.command = "broadcast receiver-temp";
            env.input("T_i", s.t_i, "K");
            env.input("area", *s.area, "m^2");
            env.input("distance", s.distance, "m");
            const auto r = broadcast::receiver_temperature(s.t_i, *s.area, s.distance);
            env.result("receiver_temperature", r.kelvin, "K");
            env.result("geometric_factor", r.geometric_factor, "1");
            if (r.factor_at_least_unity) env.warnings.push_back("geometric factor A/(4 pi R^2) >= 1: receiver area is implausible");
            return env;
        };
    });

    auto* bal = bc->add_subcommand("balance", "Entropy increase (N-1) k I of a broadcast to N receivers");
    bal->add_option("--info", s.info, "Information per file [nats]")->required();
    bal->add_option("--receivers", s.receivers, "Number of receivers N [count]")->required();
    bal->callback([&s] {
        s.action = [&s] {
            Envelope env;
            env.command = "broadcast balance";
            env.input("info", s.info, "nats");
            env.input("receivers", s.receivers, "count");
            const auto b = broadcast::broadcast_entropy_balance(s.info, s.receivers);
            env.result("entropy_increase", b.entropy_increase, "J/K");
            env.result("information_increase", static_cast<double>(b.receivers - 1) * b.info_per_file, "nats");
            return env;
        };
    });

    auto* rng = bc->add_subcommand("range", "Maximum distance at which a receiver still detects bits");
    rng->add_option("--power", s.power, "Average radiated power [W]")->required();
    rng->add_option("--bit-rate", s.bit_rate, "Bit rate [bit/s]")->required();
    rng->add_option("--carrier", s.carrier, "Carrier frequency, defaults to the bit rate [Hz]");
    rng->add_option("--area", s.area, "Receiver antenna area, required with --area-mode explicit [m^2]");
    rng->add_option("--area-mode", s.area_mode, "Receiver area: explicit or wavelength-squared [mode]")
        ->capture_default_str()
        ->check(CLI::IsMember({"explicit", "wavelength-squared"}));
    rng->add_option("--area-fraction", s.area_fraction, "Multiplier on lambda^2 in wavelength-squared mode [1]")
        ->capture_default_str();
    rng->add_option("--noise-temp", s.noise_temp, "Ambient noise temperature T_n [K]")->capture_default_str();
    rng->add_option("--margin", s.margin, "Required SNR margin over k T_n [1]")->capture_default_str();
    rng->add_option("--criterion", s.criterion, "Detection criterion: bit-energy or file-temperature [mode]")
        ->capture_default_str()
        ->check(CLI::IsMember({"bit-energy", "file-temperature"}));
    rng->callback([&s] {
        s.action = [&s] {
            Envelope env;
            env.command = "broadcast range";
            broadcast::LinkBudget b;
            b.power = s.power;
            b.bit_rate = s.bit_rate;
            b.carrier_frequency = s.carrier;
            b.noise_temperature = s.noise_temp;
            b.snr_margin = s.margin;
            const double lambda = b.wavelength();
            if (s.area_mode == "wavelength-squared") {
                if (s.area) throw UsageError("--area conflicts with --area-mode wavelength-squared");
                b.receiver_area = s.area_fraction * lambda * lambda;
            } else {
                if (!s.area) throw UsageError("--area is required unless --area-mode wavelength-squared is given");
                b.receiver_area = *s.area;
            }
            const auto criterion = s.criterion == "file-temperature" ? broadcast::DetectionCriterion::file_temperature
                                                                     : broadcast::DetectionCriterion::bit_energy;

            env.input("power", b.power, "W");
            env.input("bit_rate", b.bit_rate, "bit/s");
            env.input("carrier", b.carrier(), "Hz");
            env.input("area_mode", s.area_mode, "");
            env.input("noise_temperature", b.noise_temperature, "K");
            env.input("margin", b.snr_margin, "1");
            env.input("criterion", s.criterion, "");

            const double r = broadcast::max_range(b, criterion);
            const double t_i = broadcast::transmitter_temperature(b.power, b.bit_rate);
            env.result("max_range", r, "m");
            env.result("wavelength", lambda, "m");
            env.result("receiver_area", b.receiver_area, "m^2");
            env.result("transmitter_temperature", t_i, "K");
            env.result("receiver_temperature_at_range", broadcast::receiver_temperature(t_i, b.receiver_area, r).kelvin, "K");
            env.result("received_bit_energy_at_range", broadcast::received_bit_energy(b, r), "J");
            if (!s.carrier) env.notes.push_back("carrier frequency defaulted to the bit rate");
            return env;
        };
    });

    auto* mi = bc->add_subcommand("max-info", "Area-law bound ln2 f (4 pi R^2 / lambda^2) dt");
    mi->add_option("--bit-rate", s.bit_rate, "Bit rate [bit/s]")->required();
    mi->add_option("--carrier", s.carrier, "Carrier frequency [Hz]")->required();
    mi->add_option("--radius", s.radius, "Transmitting antenna radius [m]")->required();
    mi->add_option("--duration", s.duration, "Broadcast interval [s]")->capture_default_str();
    mi->callback([&s] {
        s.action = [&s] {
            Envelope env;
            env.command = "broadcast max-info";
            env.input("bit_rate", s.bit_rate, "bit/s");
            env.input("carrier", *s.carrier, "Hz");
            env.input("radius", s.radius, "m");
            env.input("duration", s.duration, "s");
            const auto r = broadcast::max_broadcast_information(s.bit_rate, *s.carrier, s.radius, s.duration);
            env.result("max_information", r.nats, "nats");
            env.result("max_information_bits", r.bits, "bits");
            if (r.antenna_smaller_than_wavelength) {
                env.warnings.push_back("antenna radius is below the wavelength; the bound assumes R >> lambda");
            }
            return env;
        };
    });
}

void setup_compute_bound(CLI::App& root, State& s) {
    auto* cb = root.add_subcommand("compute-bound", "Upper bound on the bit rate of a device: P / (margin k ln2 T_n)");
    cb->add_option("--power", s.power, "Power available to the device [W]")->required();
    cb->add_option("--noise-temp", s.noise_temp, "Ambient noise temperature T_n [K]")->capture_default_str();
    cb->add_option("--margin", s.margin, "Safety factor over k T_n [1]")->capture_default_str();
    cb->callback([&s] {
        s.action = [&s] {
            Envelope env;
            env.command = "compute-bound";
            env.input("power", s.power, "W");
            env.input("noise_temperature", s.noise_temp, "K");
            env.input("margin", s.margin, "1");
            env.result("max_computing_rate", bounds::max_computing_rate(s.power, s.noise_temp, s.margin), "bit/s");
            env.result("energy_per_bit", s.margin * kBoltzmann * kLn2 * s.noise_temp, "J");
            return env;
        };
    });
}

bounds::EntropyLedger check_ledger_json(const nlohmann::json& doc, Envelope& env) {
    if (!doc.is_object()) throw UsageError("ledger must be a JSON object");
    if (!doc.contains("delta_S") || !doc["delta_S"].is_number()) throw UsageError("ledger needs a numeric delta_S");
    const double delta_S = doc["delta_S"].get<double>();
    std::vector<bounds::HeatTerm> terms;
    if (doc.contains("heat_terms")) {
        if (!doc["heat_terms"].is_array()) throw UsageError("heat_terms must be an array");
        for (const auto& t : doc["heat_terms"]) {
            if (!t.is_object() || !t.contains("delta_Q") || !t.contains("T") || !t["delta_Q"].is_number() ||
                !t["T"].is_number()) {
                throw UsageError("each heat term needs numeric delta_Q and T");
            }
            terms.push_back({t["delta_Q"].get<double>(), t["T"].get<double>()});
        }
    }
    double info = 0.0;
    if (doc.contains("info_term")) {
        if (!doc["info_term"].is_number()) throw UsageError("info_term must be a number");
        info = doc["info_term"].get<double>();
    }
    std::optional<double> tolerance;
    if (doc.contains("tolerance") && !doc["tolerance"].is_null()) {
        if (!doc["tolerance"].is_number()) throw UsageError("tolerance must be a number");
        tolerance = doc["tolerance"].get<double>();
    }

    env.input("delta_S", delta_S, "J/K");
    env.input("heat_terms", static_cast<std::uint64_t>(terms.size()), "count");
    env.input("info_term", info, "nats");
    return bounds::clausius_check(delta_S, std::move(terms), info, tolerance);
}

void setup_clausius(CLI::App& root, State& s) {
    auto* cl = root.add_subcommand("clausius", "Clausius inequality checks and Carnot efficiency");
    cl->require_subcommand(1);

    auto* chk = cl->add_subcommand(
        "check", "Check dS >= sum(dQ/T) + k dI for a JSON ledger {delta_S, heat_terms:[{delta_Q,T}], info_term, tolerance}");
    chk->add_option("--ledger", s.ledger_path, "Ledger JSON file, '-' for standard input [path]")->capture_default_str();
    chk->callback([&s] {
        s.action = [&s] {
            Envelope env;
            env.command = "clausius check";
            const auto bytes = read_source(s.ledger_path, s.input);
            nlohmann::json doc;
            try {
                doc = nlohmann::json::parse(bytes.begin(), bytes.end());
            } catch (const nlohmann::json::parse_error& e) {
                throw UsageError(std::string("ledger is not valid JSON: ") + e.what());
            }
            const auto l = check_ledger_json(doc, env);
            env.result("delta_S", l.delta_S, "J/K");
            env.result("heat_sum", l.heat_sum, "J/K");
            env.result("info_entropy", kBoltzmann * l.info_term, "J/K");
            env.result("slack", l.slack, "J/K");
            env.result("tolerance", l.tolerance, "J/K");
            env.result("verdict", std::string(bounds::to_string(l.verdict)), "");
            return env;
        };
    });

    auto* car = cl->add_subcommand("carnot", "Carnot efficiency 1 - T_cold / T_hot");
    car->add_option("--T-hot", s.t_hot, "Hot bath temperature [K]")->required();
    car->add_option("--T-cold", s.t_cold, "Cold bath temperature [K]")->required();
    car->callback([&s] {
        s.action = [&s] {
            Envelope env;
            env.command = "clausius carnot";
            env.input("T_hot", s.t_hot, "K");
            env.input("T_cold", s.t_cold, "K");
            env.result("efficiency", bounds::carnot_efficiency(s.t_hot, s.t_cold), "1");
            return env;
        };
    });
}

void setup_simulate(CLI::App& root, State& s) {
    auto* sim = root.add_subcommand("simulate", "Metropolis hot-to-cold transfer of the two-level gas");
    sim->add_option("--L", s.sim.length, "Number of sites [count]")->capture_default_str()->check(CLI::PositiveNumber);
    sim->add_option("--T-hot", s.sim.t_hot, "Hot bath temperature [K]")->required();
    sim->add_option("--T-cold", s.sim.t_cold, "Cold bath temperature [K]")->required();
    sim->add_option("--epsilon", s.sim.bit_energy, "Energy of a 'one' site [J]")->required();
    sim->add_option("--steps", s.sim.steps, "Single-site Metropolis attempts per run [count]")->capture_default_str();
    sim->add_option("--seed", s.seed, "Seed of the first run [integer]")->capture_default_str();
    sim->add_option("--ensemble", s.ensemble, "Number of runs with seeds seed, seed+1, ... (0 = single run) [count]")
        ->capture_default_str();
    sim->add_option("--threads", s.threads, "Worker threads for --ensemble, 0 = all cores [count]")->capture_default_str();
    sim->callback([&s] {
        s.action = [&s] {
            Envelope env;
            env.command = "simulate";
            env.input("L", s.sim.length, "count");
            env.input("T_hot", s.sim.t_hot, "K");
            env.input("T_cold", s.sim.t_cold, "K");
            env.input("epsilon", s.sim.bit_energy, "J");
            env.input("steps", s.sim.steps, "count");
            env.input("seed", s.seed, "1");
            env.input("ensemble", s.ensemble, "count");
            if (s.sim.steps < 100 * s.sim.length) {
                env.warnings.push_back("steps < 100 L: the gas may not have relaxed to the cold-bath equilibrium");
            }

            if (s.ensemble == 0) {
                add_ledger_fields(env.results, mc::simulate_transfer(s.sim, s.seed));
                return env;
            }

            std::vector<std::uint64_t> seeds(s.ensemble);
            std::iota(seeds.begin(), seeds.end(), s.seed);
            const auto runs = mc::run_ensemble(s.sim, seeds, s.threads);
            const auto sum = mc::summarize(s.sim, runs);
            env.result("runs", static_cast<std::uint64_t>(sum.runs), "count");
            env.result("mean_total_entropy_change", sum.mean_total_entropy, "J/K");
            env.result("stderr_total_entropy_change", sum.stderr_total_entropy, "J/K");
            env.result("mean_p_final", sum.mean_p_final, "count");
            env.result("stderr_p_final", sum.stderr_p_final, "count");
            env.result("expected_p_final", sum.expected_p_final, "count");
            env.result("mean_heat_to_cold", sum.mean_heat_to_cold, "J");
            for (const auto& r : runs) {
                env.rows.push_back(Record{{"seed", r.seed, "1"},
                                          {"p_final", r.p_final, "count"},
                                          {"heat_to_cold", r.heat_to_cold, "J"},
                                          {"total_entropy_change", r.total_entropy_change, "J/K"}});
            }
            return env;
        };
    });
}

void setup_sweep(CLI::App& root, State& s) {
    std::string targets;
    for (const auto& t : sweep_targets()) {
        targets += "\n    " + t.name + ": " + t.description + " (";
        for (std::size_t i = 0; i < t.params.size(); ++i) {
            const auto& p = t.params[i];
            targets += (i ? ", " : "") + p.name + " [" + p.unit + "]";
        }
        targets += ")";
    }
    auto* sw = root.add_subcommand("sweep", "Evaluate a calculator over a range of one parameter and emit CSV");
    sw->footer("Targets:" + targets);
    sw->add_option("--target", s.sweep.target, "Calculator to sweep (see list below) [name]")->required();
    sw->add_option("--param", s.sweep.param, "Parameter to vary [name]")->required();
    sw->add_option("--from", s.sweep.from, "First value, in the parameter's unit [unit]")->required();
    sw->add_option("--to", s.sweep.to, "Last value, in the parameter's unit [unit]")->required();
    sw->add_option("--points", s.sweep.points, "Number of evaluation points [count]")->capture_default_str();
    sw->add_flag("--log", s.sweep.logarithmic, "Space points logarithmically [flag]");
    sw->add_option("--set", s.sweep.overrides, "Fix another parameter, name=value [unit of name]");
    sw->callback([&s] { s.action = [&s] { return run_sweep(s.sweep); }; });
}

std::unique_ptr<CLI::App> build_app(State& s) {
    auto app = std::make_unique<CLI::App>("Thermodynamics of information: two-level gas, files, broadcast bounds",
                                          "thermoinfo");
    app->require_subcommand(1);
    app->fallthrough();
    app->add_flag("--json", s.json, "Emit a single JSON object [flag]");
    app->add_flag("--csv", s.csv, "Emit CSV: header row, then data rows [flag]");
    app->footer(std::string("Default format is text, or the value of ") + kFormatEnvVar + " (text|json|csv).");

    setup_gas(*app, s);
    setup_file(*app, s);
    setup_broadcast(*app, s);
    setup_compute_bound(*app, s);
    setup_clausius(*app, s);
    setup_simulate(*app, s);
    setup_sweep(*app, s);

    std::function<void(CLI::App*)> fall = [&fall](CLI::App* a) {
        for (auto* sub : a->get_subcommands({})) {
            sub->fallthrough();
            fall(sub);
        }
    };
    fall(app.get());
    return app;
}

Format pick_format(const State& s, const CLI::App& app, const char* default_format) {
    if (s.json && s.csv) throw UsageError("--json and --csv are mutually exclusive");
    if (s.json) return Format::json;
    if (s.csv) return Format::csv;
    // sweep exists to feed plotting tools
    if (app.got_subcommand("sweep")) return Format::csv;
    if (default_format != nullptr) {
        const std::string f = default_format;
        if (f == "json") return Format::json;
        if (f == "csv") return Format::csv;
        if (f.empty() || f == "text") return Format::text;
        throw UsageError(std::string(kFormatEnvVar) + " must be text, json or csv");
    }
    return Format::text;
}

} // namespace

Application::Application(std::istream& in) : state_(std::make_unique<State>(in)), app_(build_app(*state_)) {}

Application::~Application() = default;

CLI::App& Application::app() { return *app_; }

int Application::run(std::span<const std::string> args, std::ostream& out, std::ostream& err,
                     const char* default_format) {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app_->parse(reversed);
    } catch (const CLI::CallForHelp&) {
        CLI::App* target = app_.get();
        // Show help for the deepest subcommand that was named.
        while (true) {
            const auto subs = target->get_subcommands();
            if (subs.empty()) break;
            target = subs.front();
        }
        out << target->help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app_->help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n";
        CLI::App* target = app_.get();
        while (true) {
            const auto subs = target->get_subcommands();
            if (subs.empty()) break;
            target = subs.front();
        }
        err << target->help();
        return kExitUsage;
    }

    try {
        const Format format = pick_format(*state_, *app_, default_format);
        if (!state_->action) throw UsageError("no command selected");
        const Envelope env = state_->action();
        std::ostringstream buffer;
        render(env, format, buffer);
        out << buffer.str();
        return kExitOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const thermoinfo::Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
}

int run(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    std::vector<std::string> args(argv + 1, argv + argc);
    Application application(std::cin);
    return application.run(args, std::cout, std::cerr, std::getenv(kFormatEnvVar));
}

} // namespace thermoinfo::cli
