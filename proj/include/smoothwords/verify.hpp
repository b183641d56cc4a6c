// verify.hpp -- the property sweep behind `verify-all` and the acceptance suite

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace smoothwords {

struct CheckResult
{
    int id = 0;
    std::string name;
    bool passed = false;
    std::vector<std::string> details; ///< deterministic: no timings, no addresses
};

struct VerifyOptions
{
    unsigned threads = 1;
    std::size_t max_states = 2'000'000;
};

CheckResult check_counting_law(const VerifyOptions& options = {});
CheckResult check_level_oracle(const VerifyOptions& options = {});
CheckResult check_gamma_identity(const VerifyOptions& options = {});
CheckResult check_worked_examples(const VerifyOptions& options = {});
CheckResult check_operator_algebra(const VerifyOptions& options = {});
CheckResult check_lfe_lemmas(const VerifyOptions& options = {});
CheckResult check_even_alphabets(const VerifyOptions& options = {});
CheckResult check_theorem1_sandwich(const VerifyOptions& options = {});
CheckResult check_theorem2_trend(const VerifyOptions& options = {});
CheckResult check_kolakoski(const VerifyOptions& options = {});

/// Checks 1 through 10 in order.
std::vector<CheckResult> verify_all(const VerifyOptions& options = {});

/// One "PASS|FAIL <id> <name>" line per check, details indented below.
std::string render(const std::vector<CheckResult>& results);

} // namespace smoothwords
