#pragma once

#include "fdl/optimizer.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace fdl::cli {

enum class Command { Design, Value, Verify, Tables, Lemmas };
enum class Format { Human, Json, Csv };

inline constexpr int exit_ok = 0;
inline constexpr int exit_disagree = 1;
inline constexpr int exit_usage = 2;

struct CliConfig {
    Command command = Command::Design;
    int m = 0;
    int k = 0;
    std::optional<std::string> profile;
    Format format = Format::Human;
    int brute_cap = 22;
    std::uint64_t seed = 0;
    int max_m = 14;        // odd-level sweeps and exhaustive checks
    int max_m_even = 30;   // even-level (rule B) sweep
    int samples = 1000;    // random adjacent-gap swaps per parity
    int workers = 1;
};

/// Parses args (without the program name) and dispatches. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_design(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_value(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_tables(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_lemmas(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// {"m","k","gcd","depth","classification","candidates":[{"profile","delays","B"}]}
nlohmann::ordered_json design_json(const DesignResult& result);

}  // namespace fdl::cli
