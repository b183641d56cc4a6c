// cli.hpp -- command-line front end, usable in-process

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace smoothwords::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes: 0 clean, 1 violation or resource guard, 2 usage error.
enum ExitCode : int
{
    kOk = 0,
    kViolation = 1,
    kUsage = 2,
};

/// Record of one invocation. The digest covers the exact bytes written to
/// standard output, so it is independent of timing and thread count.
struct RunManifest
{
    std::string command;
    std::string alphabet;
    nlohmann::json parameters = nlohmann::json::object();
    std::string tool_version = kToolVersion;
    double elapsed_ms = 0;
    int exit_code = 0;
    std::string output_sha256;

    nlohmann::json to_json() const;
};

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

/// Runs the tool on `args` (without the program name). Output goes to
/// `out`, diagnostics to `err`. When `manifest` is non-null it receives the
/// run record; `--manifest PATH` additionally writes it as JSON.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        RunManifest* manifest = nullptr);

int main(int argc, char** argv);

} // namespace smoothwords::cli
