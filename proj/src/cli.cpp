#include "smoothwords/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "smoothwords/complexity.hpp"
#include "smoothwords/errors.hpp"
#include "smoothwords/kolakoski.hpp"
#include "smoothwords/lfe.hpp"
#include "smoothwords/operators.hpp"
#include "smoothwords/smoothness.hpp"
#include "smoothwords/verify.hpp"
#include "smoothwords/word_io.hpp"

namespace smoothwords::cli {

nlohmann::json RunManifest::to_json() const
{
    return {
        {"command", command},
        {"alphabet", alphabet},
        {"parameters", parameters},
        {"tool_version", tool_version},
        {"elapsed_ms", elapsed_ms},
        {"exit_code", exit_code},
        {"output_sha256", output_sha256},
    };
}

std::string sha256_hex(std::string_view data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 computation failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * length);
    for (unsigned int i = 0; i < length; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

namespace {

/// Thrown by handlers when a check finds violations; output is still kept.
struct Violation
{
};

struct Settings
{
    unsigned threads = 1;
    std::size_t max_states = 2'000'000;
    std::string format = "text";
    std::string manifest_path;
    std::uint64_t seed = 0; // reserved; every computation is deterministic
    std::string alphabet = "1,2";
    std::string word;
    std::size_t n = 16;
    std::size_t n0 = 4;
    unsigned j = 1;
    std::size_t k = 0;
    bool count_only = false;
    bool oracle = false;
    std::size_t lo = 8;
    std::size_t hi = 0;
    std::size_t first = 0;
    std::size_t min_length = 0;
    std::size_t window = 0;
    bool stats = false;
    bool smooth_heights = false;
};

std::string num(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

EnumerationOptions enumeration(const Settings& s)
{
    EnumerationOptions e;
    e.threads = s.threads;
    e.max_states = s.max_states;
    return e;
}

nlohmann::json word_or_null(const std::optional<Word>& w)
{
    return w ? nlohmann::json(format_word(*w)) : nlohmann::json(nullptr);
}

/// key/value output shared by the scalar commands.
void emit_record(std::ostream& out, const std::string& format, const std::vector<std::pair<std::string, std::string>>& kv,
                 const nlohmann::json& json)
{
    if (format == "json") {
        out << json.dump() << "\n";
    } else if (format == "csv") {
        out << "field,value\n";
        for (const auto& [k, v] : kv)
            out << k << "," << (v.find(',') == std::string::npos ? v : "\"" + v + "\"") << "\n";
    } else {
        for (const auto& [k, v] : kv)
            out << k << ": " << v << "\n";
    }
}

std::string outcome_text(const DerivativeOutcome& d)
{
    return d ? display_word(d.word()) : std::string("undefined (") + to_string(d.reason()) + ")";
}

void cmd_derive(const Settings& s, std::ostream& out)
{
    const Alphabet alphabet = parse_alphabet(s.alphabet);
    const Word w = parse_word(alphabet, s.word);
    std::optional<Word> hat;
    std::string hat_text;
    try {
        hat = closure(w);
        hat_text = display_word(*hat);
    } catch (const std::invalid_argument&) {
        hat_text = "undefined (RunTooLong)";
    }
    const auto d = derivative(w);
    const auto r = rho(w);
    nlohmann::json j{{"word", format_word(w)},
                     {"closure", word_or_null(hat)},
                     {"derivative", d ? nlohmann::json(format_word(d.word())) : nlohmann::json(nullptr)},
                     {"rho", r ? nlohmann::json(format_word(r.word())) : nlohmann::json(nullptr)}};
    if (!d)
        j["derivative_failure"] = to_string(d.reason());
    if (!r)
        j["rho_failure"] = to_string(r.reason());
    emit_record(out, s.format,
                {{"word", display_word(w)}, {"closure", hat_text}, {"D", outcome_text(d)}, {"rho", outcome_text(r)}}, j);
}

void cmd_chain(const Settings& s, std::ostream& out)
{
    const Alphabet alphabet = parse_alphabet(s.alphabet);
    const Word w = parse_word(alphabet, s.word);
    const auto d_chain = derivative_chain(w);
    const auto r_chain = rho_chain(w);
    auto to_list = [](const std::vector<Word>& chain) {
        nlohmann::json list = nlohmann::json::array();
        for (const Word& v : chain)
            list.push_back(format_word(v));
        return list;
    };
    const bool d_ends = d_chain.back().empty();
    const bool r_ends = r_chain.back().empty();
    if (s.format == "json") {
        out << nlohmann::json{{"derivative_chain", to_list(d_chain)},
                              {"derivative_chain_reaches_empty", d_ends},
                              {"rho_chain", to_list(r_chain)},
                              {"rho_chain_reaches_empty", r_ends}}
                   .dump()
            << "\n";
        return;
    }
    if (s.format == "csv") {
        out << "chain,step,word\n";
        for (std::size_t i = 0; i < d_chain.size(); ++i)
            out << "D," << i << "," << format_word(d_chain[i]) << "\n";
        for (std::size_t i = 0; i < r_chain.size(); ++i)
            out << "rho," << i << "," << format_word(r_chain[i]) << "\n";
        return;
    }
    out << "D-chain:\n";
    for (std::size_t i = 0; i < d_chain.size(); ++i)
        out << "  " << i << " " << display_word(d_chain[i]) << "\n";
    if (!d_ends)
        out << "  (D undefined beyond this point)\n";
    out << "rho-chain:\n";
    for (std::size_t i = 0; i < r_chain.size(); ++i)
        out << "  " << i << " " << display_word(r_chain[i]) << "\n";
    if (!r_ends)
        out << "  (rho undefined beyond this point)\n";
}

void cmd_smooth(const Settings& s, std::ostream& out)
{
    const Alphabet alphabet = parse_alphabet(s.alphabet);
    const Word w = parse_word(alphabet, s.word);
    const bool smooth = is_smooth(w);
    nlohmann::json j{{"word", format_word(w)}, {"smooth", smooth}};
    std::vector<std::pair<std::string, std::string>> kv{{"word", display_word(w)},
                                                        {"smooth", smooth ? "true" : "false"}};
    if (smooth) {
        const std::string ht = w.empty() ? "undefined" : std::to_string(height(w));
        j["height"] = w.empty() ? nlohmann::json(nullptr) : nlohmann::json(height(w));
        kv.emplace_back("height", ht);
        j["rho_chain_length"] = rho_chain_length(w);
        kv.emplace_back("rho_chain_length", std::to_string(rho_chain_length(w)));
        std::string ext;
        nlohmann::json ext_json = nlohmann::json::array();
        for (Letter x : left_extensions(w)) {
            ext += (ext.empty() ? "" : ",") + std::to_string(x);
            ext_json.push_back(x);
        }
        j["left_extensions"] = ext_json;
        kv.emplace_back("left_extensions", ext.empty() ? "none" : ext);
        const bool lfe = is_lfe(w);
        j["lfe"] = lfe;
        kv.emplace_back("lfe", lfe ? "true" : "false");
    }
    emit_record(out, s.format, kv, j);
}

void emit_words(std::ostream& out, const Settings& s, const std::vector<Word>& words, std::optional<unsigned> level)
{
    if (s.count_only) {
        out << words.size() << "\n";
        return;
    }
    if (s.format == "text") {
        for (const Word& w : words)
            out << display_word(w) << "\n";
        return;
    }
    if (s.format == "csv") {
        out << (level ? "level," : "") << "length,ends_with,word\n";
        for (const Word& w : words) {
            if (level)
                out << *level << ",";
            out << w.size() << "," << (w.empty() ? std::string() : std::to_string(w.back())) << ","
                << format_word(w) << "\n";
        }
        return;
    }
    for (const Word& w : words) {
        nlohmann::json j{{"length", w.size()},
                         {"ends_with", w.empty() ? nlohmann::json(nullptr) : nlohmann::json(w.back())},
                         {"word", format_word(w)},
                         {"runs", to_json(w)["runs"]}};
        if (level)
            j["level"] = *level;
        out << j.dump() << "\n";
    }
}

void cmd_primitives(const Settings& s, std::ostream& out)
{
    const Alphabet alphabet = parse_alphabet(s.alphabet);
    emit_words(out, s, primitives(parse_word(alphabet, s.word)), std::nullopt);
}

void cmd_lfe_level(const Settings& s, std::ostream& out)
{
    const Alphabet alphabet = parse_alphabet(s.alphabet);
    if (s.j == 0)
        throw std::invalid_argument("--j must be positive");
    const LfeLevel level = s.oracle ? std::move(p_levels_oracle(alphabet, s.j, enumeration(s)).back())
                                    : p_level(alphabet, s.j, enumeration(s));
    emit_words(out, s, level.words, level.j);
}

void cmd_lfe_length(const Settings& s, std::ostream& out)
{
    const Alphabet alphabet = parse_alphabet(s.alphabet);
    emit_words(out, s, lf_k(alphabet, s.k, enumeration(s)).words, std::nullopt);
}

void cmd_gamma(const Settings& s, std::ostream& out)
{
    const Alphabet alphabet = parse_alphabet(s.alphabet);
    const auto table = gamma_table(alphabet, s.n, enumeration(s));
    if (s.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t n = 1; n <= table.n_max(); ++n) {
            const auto& r = table.at(n);
            rows.push_back({{"n", r.n},
                            {"gamma", r.gamma},
                            {"lf_count", r.lf_count},
                            {"ht_min", r.ht_min},
                            {"ht_max", r.ht_max},
                            {"min_b_ratio", r.min_b_ratio.str()}});
        }
        out << nlohmann::json{{"alphabet", {alphabet.a(), alphabet.b()}}, {"rows", rows}}.dump() << "\n";
        return;
    }
    const char sep = s.format == "csv" ? ',' : ' ';
    out << "n" << sep << "gamma" << sep << "lf_count" << sep << "ht_min" << sep << "ht_max" << sep << "min_b_ratio\n";
    for (std::size_t n = 1; n <= table.n_max(); ++n) {
        const auto& r = table.at(n);
        out << r.n << sep << r.gamma << sep << r.lf_count << sep << r.ht_min << sep << r.ht_max << sep
            << r.min_b_ratio.str() << "\n";
    }
}

nlohmann::json report_json(const BoundReport& r)
{
    return {
        {"alphabet", {r.alphabet.a(), r.alphabet.b()}},
        {"xi", r.xi.str()},
        {"xi_value", r.xi.value()},
        {"xi_complement", r.xi_complement.str()},
        {"n0", r.n0},
        {"n_max", r.n_max},
        {"N0", r.big_n0 ? nlohmann::json(*r.big_n0) : nlohmann::json(nullptr)},
        {"alpha", r.alpha},
        {"beta", r.beta},
        {"q", r.q},
        {"m", r.m},
        {"t1", r.t1},
        {"t2", r.t2},
        {"t2_fitted", true},
        {"exponent_lower", r.exponent_lower},
        {"exponent_upper", r.exponent_upper},
        {"c1", r.c1},
        {"c2", r.c2},
        {"violations", r.violations},
    };
}

std::vector<std::pair<std::string, std::string>> report_kv(const BoundReport& r, bool with_fit)
{
    std::vector<std::pair<std::string, std::string>> kv{
        {"xi", r.xi.str() + " (" + num(r.xi.value()) + ")"},
        {"xi_complement", r.xi_complement.str()},
        {"window", "(" + std::to_string(r.n0) + ", " + std::to_string(r.n_max) + "]"},
        {"N0", r.big_n0 ? std::to_string(*r.big_n0) : "none"},
        {"alpha", num(r.alpha)},
        {"beta", num(r.beta)},
        {"q", num(r.q)},
        {"m", num(r.m)},
        {"t1", num(r.t1)},
        {"exponent_lower", num(r.exponent_lower)},
        {"exponent_upper", num(r.exponent_upper)},
        {"c1", num(r.c1)},
    };
    if (with_fit) {
        kv.emplace_back("t2 (fitted)", num(r.t2));
        kv.emplace_back("c2", num(r.c2));
        kv.emplace_back("violations", std::to_string(r.violations.size()));
        for (std::size_t i = 0; i < r.violations.size(); ++i)
            kv.emplace_back("violation", r.violations[i]);
    }
    return kv;
}

void cmd_xi(const Settings& s, std::ostream& out)
{
    const Alphabet alphabet = parse_alphabet(s.alphabet);
    const auto table = gamma_table(alphabet, s.n, enumeration(s));
    const BoundReport report = estimate_xi(table, s.n0, s.n);
    nlohmann::json j = report_json(report);
    j.erase("t2");
    j.erase("t2_fitted");
    j.erase("c2");
    j.erase("violations");
    emit_record(out, s.format, report_kv(report, false), j);
}

void cmd_bounds(const Settings& s, std::ostream& out)
{
    const Alphabet alphabet = parse_alphabet(s.alphabet);
    const auto opts = enumeration(s);
    const auto table = gamma_table(alphabet, s.n, opts);
    BoundReport report = estimate_xi(table, s.n0, s.n);
    height_bounds_check(table, report);
    sandwich_check(table, report);
    std::size_t violations = report.violations.size();

    nlohmann::json j = report_json(report);
    auto kv = report_kv(report, true);

    if (alphabet.is_even()) {
        const auto c = even_constants(alphabet);
        std::vector<std::string> even_violations;
        even_height_check(table, c, even_violations);
        violations += even_violations.size();
        const double exponent = theorem2_exponent(alphabet);
        j["even"] = {{"rho", c.rho_half},       {"q1", c.q1},
                     {"q2", c.q2},              {"tau", c.tau},
                     {"t1", c.t1},              {"t2", c.t2},
                     {"in_range", even_constants_in_range(c)},
                     {"exponent", exponent},    {"violations", even_violations}};
        kv.emplace_back("even rho", num(c.rho_half));
        kv.emplace_back("even q1", num(c.q1));
        kv.emplace_back("even q2", num(c.q2));
        kv.emplace_back("even tau", num(c.tau));
        kv.emplace_back("even t1", num(c.t1));
        kv.emplace_back("even t2", num(c.t2));
        kv.emplace_back("even exponent", num(exponent));
        kv.emplace_back("even violations", std::to_string(even_violations.size()));
        for (const auto& v : even_violations)
            kv.emplace_back("even violation", v);
    }

    if (s.smooth_heights) {
        // Same inequalities over all smooth words instead of LFE words only.
        const auto ranges = smooth_height_range(alphabet, s.n, opts);
        std::size_t lower = 0;
        std::size_t upper = 0;
        for (std::size_t n = 1; n <= s.n; ++n) {
            const double logn = std::log(static_cast<double>(n));
            lower += !(ranges[n].min > logn / std::log(report.beta) + report.t1);
            upper += !(ranges[n].max <= logn / -std::log(report.alpha) + report.t2);
        }
        j["smooth_words"] = {{"lower_violations", lower}, {"upper_violations", upper}};
        kv.emplace_back("smooth-word height lower violations", std::to_string(lower));
        kv.emplace_back("smooth-word height upper violations", std::to_string(upper));
    }

    emit_record(out, s.format, kv, j);
    if (violations > 0)
        throw Violation{};
}

void cmd_fit(const Settings& s, std::ostream& out)
{
    const Alphabet alphabet = parse_alphabet(s.alphabet);
    const auto table = gamma_table(alphabet, s.n, enumeration(s));
    const ExponentFit fit = s.hi == 0 ? fit_exponent(table) : fit_exponent(table, s.lo, s.hi);
    nlohmann::json j{{"n_lo", fit.n_lo}, {"n_hi", fit.n_hi}, {"slope", fit.slope}, {"intercept", fit.intercept},
                     {"r2", fit.r2}};
    std::vector<std::pair<std::string, std::string>> kv{
        {"window", "[" + std::to_string(fit.n_lo) + ", " + std::to_string(fit.n_hi) + "]"},
        {"slope", num(fit.slope)},
        {"intercept", num(fit.intercept)},
        {"r2", num(fit.r2)},
    };
    if (alphabet.is_even()) {
        const double target = theorem2_exponent(alphabet);
        j["theorem2_exponent"] = target;
        kv.emplace_back("theorem2_exponent", num(target));
    }
    emit_record(out, s.format, kv, j);
}

void cmd_kolakoski(const Settings& s, std::ostream& out)
{
    const Alphabet alphabet = parse_alphabet(s.alphabet);
    if (s.n == 0)
        throw std::invalid_argument("--n must be positive");
    const Letter first = s.first == 0 ? alphabet.b() : static_cast<Letter>(s.first);
    const Word prefix = kolakoski(alphabet, first, s.n);
    bool windows_ok = true;
    if (s.window > 0)
        for (std::size_t w = 1; w <= s.window; ++w)
            windows_ok = windows_ok && factor_smoothness_check(prefix, w);

    if (s.stats) {
        const std::size_t min_length = s.min_length ? s.min_length : std::max<std::size_t>(1, s.n / 100);
        nlohmann::json j = kolakoski_stats(prefix, min_length);
        j["self_encoding"] = self_encoding_holds(prefix);
        if (s.window > 0)
            j["factors_smooth_up_to_window"] = windows_ok;
        out << j.dump() << "\n";
    } else {
        out << format_word(prefix) << "\n";
    }
    if (!windows_ok)
        throw Violation{};
}

void cmd_verify_all(const Settings& s, std::ostream& out)
{
    VerifyOptions options;
    options.threads = s.threads;
    options.max_states = s.max_states;
    const auto results = verify_all(options);
    if (s.format == "json") {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& r : results)
            list.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"details", r.details}});
        out << list.dump(2) << "\n";
    } else {
        out << render(results);
    }
    if (!std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; }))
        throw Violation{};
}

nlohmann::json collect_parameters(const CLI::App& app)
{
    nlohmann::json params = nlohmann::json::object();
    for (const CLI::Option* opt : app.get_options()) {
        if (opt->count() == 0 || opt->get_name() == "--help" || opt->get_name() == "--manifest")
            continue;
        const auto& results = opt->results();
        std::string name = opt->get_name();
        name.erase(0, name.find_first_not_of('-'));
        params[name] = results.size() == 1 ? nlohmann::json(results.front()) : nlohmann::json(results);
    }
    for (const CLI::App* sub : app.get_subcommands()) {
        const nlohmann::json nested = collect_parameters(*sub);
        for (auto it = nested.begin(); it != nested.end(); ++it)
            params[it.key()] = it.value();
    }
    return params;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, RunManifest* manifest)
{
    Settings s;
    CLI::App app{"Smooth words over two-letter alphabets: derivatives, LFE enumeration, complexity bounds.",
                 "smoothwords"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--threads", s.threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--max-states", s.max_states, "Cap on any materialized level or frontier")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"csv", "json", "text"}));
    app.add_option("--manifest", s.manifest_path, "Write a run manifest (JSON) to this path");
    app.add_option("--seed", s.seed, "Reserved; all computations are deterministic");

    auto alphabet_opt = [&](CLI::App* sub) {
        return sub->add_option("--alphabet", s.alphabet, "Alphabet as a,b")->required();
    };
    auto word_opt = [&](CLI::App* sub) { return sub->add_option("--word", s.word, "Word, e.g. 2211 or 2,2,1,1"); };

    std::string command;
    auto* derive = app.add_subcommand("derive", "Closure, D and rho of a word");
    alphabet_opt(derive);
    word_opt(derive)->required();
    auto* chain = app.add_subcommand("chain", "D-chain and rho-chain of a word");
    alphabet_opt(chain);
    word_opt(chain)->required();
    auto* smooth = app.add_subcommand("smooth", "Smoothness, height, left extensions");
    alphabet_opt(smooth);
    word_opt(smooth)->required();
    auto* prims = app.add_subcommand("primitives", "All v with D(v) = w");
    alphabet_opt(prims);
    word_opt(prims)->required();
    prims->add_flag("--count-only", s.count_only, "Print only the number of primitives");

    auto* lfe = app.add_subcommand("lfe", "Enumerate LFE words");
    lfe->require_subcommand(1);
    auto* level = lfe->add_subcommand("level", "Level P^j(eps)");
    alphabet_opt(level);
    level->add_option("--j", s.j, "Level index")->required();
    level->add_flag("--count-only", s.count_only, "Print only the level size");
    level->add_flag("--oracle", s.oracle, "Use the filter-based enumeration");
    auto* length = lfe->add_subcommand("length", "LF_k, the LFE words of length k");
    alphabet_opt(length);
    length->add_option("--k", s.k, "Length")->required();
    length->add_flag("--count-only", s.count_only, "Print only |LF_k|");

    auto* gamma = app.add_subcommand("gamma", "Complexity table n,gamma,lf_count,ht_min,ht_max,min_b_ratio");
    alphabet_opt(gamma);
    gamma->add_option("--n", s.n, "Largest length")->required();

    auto* xi = app.add_subcommand("xi", "Minimal b-frequency of LFE words with n0 < |u| <= n");
    alphabet_opt(xi);
    xi->add_option("--n", s.n, "Largest length")->required();
    xi->add_option("--n0", s.n0, "Window start (exclusive)");

    auto* bounds = app.add_subcommand("bounds", "Height lemma, Theorem 1 sandwich and even-alphabet constants");
    alphabet_opt(bounds);
    bounds->add_option("--n", s.n, "Largest length")->required();
    bounds->add_option("--n0", s.n0, "Frequency window start (exclusive)");
    bounds->add_flag("--smooth-heights", s.smooth_heights, "Also test the height bounds over all smooth words");

    auto* fit = app.add_subcommand("fit", "Least-squares growth exponent of gamma");
    alphabet_opt(fit);
    fit->add_option("--n", s.n, "Largest length")->required();
    fit->add_option("--lo", s.lo, "Window start");
    fit->add_option("--hi", s.hi, "Window end (default: largest power of two <= n)");

    auto* kol = app.add_subcommand("kolakoski", "Self-run-length-encoding sequence");
    alphabet_opt(kol);
    kol->add_option("--n", s.n, "Prefix length")->required();
    kol->add_option("--first", s.first, "First letter (default b)");
    kol->add_flag("--stats", s.stats, "Print density statistics as JSON instead of the prefix");
    kol->add_option("--min-length", s.min_length, "Shortest prefix in the windowed density (default n/100)");
    kol->add_option("--window", s.window, "Check smoothness of all factors up to this length");

    auto* verify = app.add_subcommand("verify-all", "Full property sweep; exits 1 on any failure");

    const auto start = std::chrono::steady_clock::now();
    std::ostringstream buffer;
    int code = kOk;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (derive->parsed())
            command = "derive", cmd_derive(s, buffer);
        else if (chain->parsed())
            command = "chain", cmd_chain(s, buffer);
        else if (smooth->parsed())
            command = "smooth", cmd_smooth(s, buffer);
        else if (prims->parsed())
            command = "primitives", cmd_primitives(s, buffer);
        else if (level->parsed())
            command = "lfe level", cmd_lfe_level(s, buffer);
        else if (length->parsed())
            command = "lfe length", cmd_lfe_length(s, buffer);
        else if (gamma->parsed())
            command = "gamma", cmd_gamma(s, buffer);
        else if (xi->parsed())
            command = "xi", cmd_xi(s, buffer);
        else if (bounds->parsed())
            command = "bounds", cmd_bounds(s, buffer);
        else if (fit->parsed())
            command = "fit", cmd_fit(s, buffer);
        else if (kol->parsed())
            command = "kolakoski", cmd_kolakoski(s, buffer);
        else if (verify->parsed())
            command = "verify-all", cmd_verify_all(s, buffer);
    } catch (const Violation&) {
        code = kViolation;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << "\n";
        code = kViolation;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        code = kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        code = kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        code = kViolation;
    }

    const std::string text = buffer.str();
    out << text;

    RunManifest record;
    record.command = command;
    record.alphabet = verify->parsed() ? "" : s.alphabet;
    record.parameters = collect_parameters(app);
    record.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    record.exit_code = code;
    record.output_sha256 = sha256_hex(text);
    if (!s.manifest_path.empty()) {
        std::ofstream file(s.manifest_path);
        if (!file) {
            err << "error: cannot write manifest to " << s.manifest_path << "\n";
            return kUsage;
        }
        file << record.to_json().dump(2) << "\n";
    }
    if (manifest)
        *manifest = std::move(record);
    return code;
}

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace smoothwords::cli
