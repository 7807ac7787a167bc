#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace thermoinfo::cli {

/// Bad invocation detected after argument parsing (exit code 2).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Value = std::variant<std::nullptr_t, bool, std::int64_t, std::uint64_t, double, std::string>;

/// One named quantity. Numeric fields always carry a unit; "1" marks a
/// dimensionless number.
struct Field {
    std::string name;
    Value value;
    std::string unit;
};

using Record = std::vector<Field>;

enum class Format { text, json, csv };

/// Everything a subcommand reports. Rendered once, at the end of run().
struct Envelope {
    std::string command;
    Record inputs;
    Record results;
    std::vector<Record> rows;  // tabular payload (sweep, simulate --ensemble)
    std::vector<std::string> warnings;
    std::vector<std::string> notes;

    void input(std::string name, Value v, std::string unit) { inputs.push_back({std::move(name), std::move(v), std::move(unit)}); }
    void result(std::string name, Value v, std::string unit) { results.push_back({std::move(name), std::move(v), std::move(unit)}); }
};

void render(const Envelope& env, Format format, std::ostream& out);

/// Shortest round-trip decimal for finite values, "inf"/"-inf"/"nan" otherwise.
std::string format_number(double x);

} // namespace thermoinfo::cli
