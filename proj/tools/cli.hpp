#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include <modparam/rational.hpp>
#include <modparam/series.hpp>

namespace modparam::cli {

using json = nlohmann::ordered_json;

enum class Command { expand, grouplaw, honda, bernoulli, param, classical };
enum class Format { text, json };

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

struct RunConfig {
    Command command = Command::expand;
    Format format = Format::text;
    Rational g2;
    Rational g3;
    int order = 0;
    int pmax = 0;
    int nmax = 0;
    int wp_order = 20;
    int precision = 53;
    std::string what = "fe";   // expand
    std::string law = "both";  // grouplaw
    std::string z_re = "0";    // param
    std::string z_im = "1";
    std::string h = "1e-4";     // derivative-check step
    std::vector<int> s_values; // classical
};

/// Integer, "a/b", or finite decimal ("0.25" -> 1/4). Throws ParseError.
Rational parse_rational(std::string_view text);
/// "re,im" with finite decimals; returns the two validated components.
std::pair<std::string, std::string> parse_complex(std::string_view text);

std::string to_string(Command c);

/// Fields accepted by a command, using the flag spelling (no dashes).
const std::vector<std::string> &fields_for(Command c);

/// Builds a RunConfig from raw field values, applying defaults. Throws
/// ParseError / DomainError on bad values.
RunConfig resolve(Command c, const std::map<std::string, std::string> &fields);

/// The resolved configuration in the same field names a --config file uses.
json config_to_json(const RunConfig &cfg);

/// Executes one command. Reports go to `out`, diagnostics to `err`.
int run(const RunConfig &cfg, std::ostream &out, std::ostream &err);

/// Full entry point: argument parsing, --config merging, run.
int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

json series_to_json(const UniSeries &f);
json laurent_to_json(const LaurentSeries &f);
json biseries_to_json(const BiSeries &f);

} // namespace modparam::cli
