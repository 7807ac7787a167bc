#include "cli/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "thermoinfo/bounds.hpp"
#include "thermoinfo/broadcast.hpp"
#include "thermoinfo/errors.hpp"
#include "thermoinfo/file_info.hpp"
#include "thermoinfo/twolevel_gas.hpp"

namespace thermoinfo::cli {

namespace {

std::uint64_t as_count(double v, const char* name) {
    if (!(v >= 0.0) || v != std::floor(v) || v > 9.0e18) {
        throw DomainError(std::string(name) + " must be a non-negative integer");
    }
    return static_cast<std::uint64_t>(v);
}

Field temperature_field(const std::string& name, const Temperature& t) {
    return {name, t.kelvin, "K"};
}

std::vector<SweepTarget> make_targets() {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<SweepTarget> t;

    t.push_back({"multiplicity", "ln C(L, p), exact and Stirling",
                 {{"L", 1000, "count", true}, {"p", 500, "count", true}},
                 [](const ParamMap& m) {
                     const auto length = as_count(m.at("L"), "L");
                     const auto p = as_count(m.at("p"), "p");
                     const double exact = gas::multiplicity_ln(length, p);
                     const double stirling = (p > 0 && p < length) ? gas::entropy_stirling(length, p)
                                                                   : std::numeric_limits<double>::quiet_NaN();
                     return Record{{"entropy_exact", exact, "nats"}, {"entropy_stirling", stirling, "nats"}};
                 }});

    t.push_back({"gas-temperature", "two-level gas temperature",
                 {{"L", 1000, "count", true}, {"p", 250, "count", true}, {"epsilon", 1e-20, "J"}},
                 [](const ParamMap& m) {
                     const gas::GasSpec spec{as_count(m.at("L"), "L"), as_count(m.at("p"), "p"), m.at("epsilon")};
                     return Record{temperature_field("temperature", gas::gas_temperature(spec))};
                 }});

    t.push_back({"occupation", "equilibrium occupancy at temperature T",
                 {{"L", 1000, "count", true}, {"T", 1000, "K"}, {"epsilon", 1e-20, "J"}},
                 [](const ParamMap& m) {
                     return Record{{"occupancy", gas::occupation_at(as_count(m.at("L"), "L"), m.at("T"), m.at("epsilon")),
                                    "count"}};
                 }});

    t.push_back({"transfer", "hot-to-cold transfer entropy",
                 {{"L", 1000, "count", true}, {"p-hot", 300, "count", true}, {"p-cold", 100, "count", true},
                  {"epsilon", 1e-20, "J"}},
                 [](const ParamMap& m) {
                     const auto l = gas::transfer_entropy_delta(as_count(m.at("L"), "L"), as_count(m.at("p-hot"), "p-hot"),
                                                                as_count(m.at("p-cold"), "p-cold"), m.at("epsilon"));
                     return Record{{"delta_S_two_bath", l.delta_S_two_bath, "J/K"}, {"rhs_clausius", l.rhs_clausius, "J/K"}};
                 }});

    t.push_back({"file-temperature", "random-file temperature for bit energy epsilon",
                 {{"epsilon", 1e-20, "J"}},
                 [](const ParamMap& m) { return Record{{"file_temperature", file::file_temperature(m.at("epsilon")), "K"}}; }});

    t.push_back({"transmitter-temp", "transmitter temperature P / (k f ln2)",
                 {{"power", 50, "W"}, {"bit-rate", 9e8, "bit/s"}},
                 [](const ParamMap& m) {
                     return Record{{"transmitter_temperature",
                                    broadcast::transmitter_temperature(m.at("power"), m.at("bit-rate")), "K"}};
                 }});

    t.push_back({"range", "maximum broadcast range (bit-energy criterion)",
                 {{"power", 50, "W"},
                  {"bit-rate", 9e8, "bit/s"},
                  {"carrier", nan, "Hz"},
                  {"area-fraction", 1, "1"},
                  {"noise-temp", broadcast::kDefaultNoiseTemperature, "K"},
                  {"margin", broadcast::kDefaultSnrMargin, "1"}},
                 [](const ParamMap& m) {
                     broadcast::LinkBudget b;
                     b.power = m.at("power");
                     b.bit_rate = m.at("bit-rate");
                     if (!std::isnan(m.at("carrier"))) b.carrier_frequency = m.at("carrier");
                     const double lambda = b.wavelength();
                     b.receiver_area = m.at("area-fraction") * lambda * lambda;
                     b.noise_temperature = m.at("noise-temp");
                     b.snr_margin = m.at("margin");
                     return Record{{"max_range", broadcast::max_range(b), "m"}, {"receiver_area", b.receiver_area, "m^2"}};
                 }});

    t.push_back({"compute-bound", "maximum computing rate",
                 {{"power", 1, "W"}, {"noise-temp", broadcast::kDefaultNoiseTemperature, "K"},
                  {"margin", broadcast::kDefaultSnrMargin, "1"}},
                 [](const ParamMap& m) {
                     return Record{{"max_computing_rate",
                                    bounds::max_computing_rate(m.at("power"), m.at("noise-temp"), m.at("margin")),
                                    "bit/s"}};
                 }});

    t.push_back({"max-info", "antenna area bound on broadcast information",
                 {{"bit-rate", 1e9, "bit/s"}, {"carrier", 9e8, "Hz"}, {"radius", 1, "m"}, {"duration", 1, "s"}},
                 [](const ParamMap& m) {
                     const auto r = broadcast::max_broadcast_information(m.at("bit-rate"), m.at("carrier"),
                                                                         m.at("radius"), m.at("duration"));
                     return Record{{"max_information", r.nats, "nats"}, {"max_information_bits", r.bits, "bits"}};
                 }});

    t.push_back({"carnot", "Carnot efficiency",
                 {{"T-hot", 600, "K"}, {"T-cold", 300, "K"}},
                 [](const ParamMap& m) {
                     return Record{{"efficiency", bounds::carnot_efficiency(m.at("T-hot"), m.at("T-cold")), "1"}};
                 }});
    return t;
}

} // namespace

const std::vector<SweepTarget>& sweep_targets() {
    static const std::vector<SweepTarget> targets = make_targets();
    return targets;
}

const SweepTarget& find_sweep_target(const std::string& name) {
    for (const auto& t : sweep_targets()) {
        if (t.name == name) return t;
    }
    throw UsageError("unknown sweep target '" + name + "'");
}

Envelope run_sweep(const SweepRequest& request) {
    const SweepTarget& target = find_sweep_target(request.target);

    ParamMap params;
    const SweepParam* swept = nullptr;
    for (const auto& p : target.params) {
        params[p.name] = p.default_value;
        if (p.name == request.param) swept = &p;
    }
    if (swept == nullptr) {
        std::string names;
        for (const auto& p : target.params) names += (names.empty() ? "" : ", ") + p.name;
        throw UsageError("target '" + target.name + "' has no parameter '" + request.param + "' (choose from " + names + ")");
    }
    for (const auto& o : request.overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) throw UsageError("--set expects name=value, got '" + o + "'");
        const std::string name = o.substr(0, eq);
        if (!params.contains(name)) throw UsageError("target '" + target.name + "' has no parameter '" + name + "'");
        try {
            std::size_t used = 0;
            params[name] = std::stod(o.substr(eq + 1), &used);
            if (used != o.size() - eq - 1) throw std::invalid_argument(o);
        } catch (const std::logic_error&) {
            throw UsageError("--set value for '" + name + "' is not a number");
        }
    }
    if (request.points < 1) throw UsageError("--points must be >= 1");
    if (request.logarithmic && !(request.from > 0.0 && request.to > 0.0)) {
        throw UsageError("--log needs positive --from and --to");
    }

    Envelope env;
    env.command = "sweep " + target.name;
    env.input("param", request.param, "");
    env.input("from", request.from, swept->unit);
    env.input("to", request.to, swept->unit);
    env.input("points", static_cast<std::uint64_t>(request.points), "count");
    env.input("log", request.logarithmic, "");
    for (const auto& p : target.params) {
        if (p.name != request.param) env.input(p.name, params.at(p.name), p.unit);
    }

    for (unsigned i = 0; i < request.points; ++i) {
        const double frac = request.points == 1 ? 0.0 : static_cast<double>(i) / (request.points - 1);
        double v = request.logarithmic
                       ? std::exp(std::log(request.from) + frac * (std::log(request.to) - std::log(request.from)))
                       : request.from + frac * (request.to - request.from);
        if (i == 0) v = request.from;
        if (i + 1 == request.points && request.points > 1) v = request.to;
        if (swept->integral) v = std::round(v);
        params[request.param] = v;

        Record row{{request.param, v, swept->unit}};
        const Record out = target.evaluate(params);
        row.insert(row.end(), out.begin(), out.end());
        env.rows.push_back(std::move(row));
    }
    env.result("points", static_cast<std::uint64_t>(env.rows.size()), "count");
    return env;
}

} // namespace thermoinfo::cli
