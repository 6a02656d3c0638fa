#pragma once
// Command-line front end: argv or JSON-lines in, one line of JSON out.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace arithgenus::cli {

using Json = nlohmann::ordered_json;

inline constexpr long kDefaultPrecBits = 192;
inline constexpr long kMinPrecBits = 64;
inline constexpr long kMaxPrecBits = 1 << 16;
inline constexpr int kDefaultDigits = 50;

/// Malformed invocation; maps to exit status 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// --help was given; what() holds the help text.
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Command {
    std::string verb;
    Json args;  // flag name (or "positional") -> value, already validated
    long prec_bits = kDefaultPrecBits;
    int digits = kDefaultDigits;
};

struct Report {
    bool ok = false;
    Json result;
    std::string error;
    int exit_code = 0;  // 0 ok, 1 domain error, 2 usage error
    long prec_bits = 0;  // echoed when decimals were produced

    std::string to_line() const;
};

/// argv without the program name. Throws UsageError.
Command parse(const std::vector<std::string>& argv);

Report execute(const Command& command);

/// One JSON object {"verb": ..., "args": [...], "<flag>": value, ...} to argv.
std::vector<std::string> batch_line_to_argv(const std::string& line);

/// Full driver: handles --help, --batch and error reporting. Returns the exit status.
int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace arithgenus::cli
