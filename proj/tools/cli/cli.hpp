#pragma once

// Command-line front end. Subcommands: gas, file, broadcast, compute-bound,
// clausius, simulate, sweep.

#include <iosfwd>
#include <memory>
#include <span>
#include <string>

namespace CLI {
class App;
}

namespace thermoinfo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable naming the default output format (text, json, csv).
inline constexpr const char* kFormatEnvVar = "THERMOINFO_FORMAT";

class Application {
public:
    /// `in` supplies file bytes and ledgers read from "-".
    explicit Application(std::istream& in);
    ~Application();
    Application(const Application&) = delete;
    Application& operator=(const Application&) = delete;

    /// The full option tree, for help rendering and introspection.
    [[nodiscard]] CLI::App& app();

    /// Parsed option values; opaque outside commands.cpp.
    struct State;

    /// Parses args (without the program name), runs the selected command and
    /// writes its output. Returns one of the kExit* codes.
    int run(std::span<const std::string> args, std::ostream& out, std::ostream& err,
            const char* default_format = nullptr);

private:
    std::unique_ptr<State> state_;
    std::unique_ptr<CLI::App> app_;
};

/// Convenience wrapper used by main(): reads THERMOINFO_FORMAT and the
/// standard streams.
int run(int argc, char** argv);

} // namespace thermoinfo::cli
