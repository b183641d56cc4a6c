#include "smoothwords/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>

#include "smoothwords/complexity.hpp"
#include "smoothwords/kolakoski.hpp"
#include "smoothwords/lfe.hpp"
#include "smoothwords/operators.hpp"
#include "smoothwords/smoothness.hpp"
#include "smoothwords/word_io.hpp"

namespace smoothwords {

namespace {

// Grids and horizons of the sweep.
const std::vector<Alphabet> kLevelAlphabets{{1, 2}, {1, 3}, {2, 3}, {2, 4}};
const std::vector<Alphabet> kAlgebraAlphabets{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}};
const std::vector<Alphabet> kEvenAlphabets{{2, 4}, {2, 6}, {4, 6}};
constexpr std::uint64_t kLevelCap = 100'000;
constexpr std::size_t kGammaHorizon = 20;
constexpr std::size_t kAlgebraLength = 14;
constexpr std::size_t kBalanceLength = 30;
constexpr Letter kEvenScanMax = 58;
constexpr double kTol = 1e-9;
constexpr std::size_t kXiN0 = 4;
constexpr std::size_t kFitHorizon = 1024;
constexpr double kFitBand = 0.25;
constexpr std::size_t kKolakoskiLength = 1'000'000;
constexpr std::size_t kKolakoskiFactorPrefix = 10'000;
constexpr std::size_t kKolakoskiMaxWindow = 12;

std::size_t sandwich_horizon(const Alphabet& alphabet)
{
    return alphabet == Alphabet(2, 4) ? 256 : 128;
}

std::string name(const Alphabet& alphabet)
{
    return "{" + std::to_string(alphabet.a()) + "," + std::to_string(alphabet.b()) + "}";
}

std::string fixed(double x, int digits = 6)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

EnumerationOptions enumeration(const VerifyOptions& options)
{
    EnumerationOptions e;
    e.threads = options.threads;
    e.max_states = options.max_states;
    return e;
}

std::uint64_t level_formula(const Alphabet& alphabet, unsigned j)
{
    std::uint64_t size = 4 * (alphabet.b() - 1);
    for (unsigned i = 1; i < j; ++i)
        size *= 2 * alphabet.b() - 1;
    return size;
}

unsigned level_grid_max(const Alphabet& alphabet)
{
    unsigned j = 1;
    while (level_formula(alphabet, j + 1) <= kLevelCap)
        ++j;
    return j;
}

/// Collects violations, keeping the first few messages for the report.
class Tally
{
public:
    void fail(std::string message)
    {
        if (_count++ < 5)
            _first.push_back(std::move(message));
    }
    void expect(bool ok, const std::string& what, const Word& w)
    {
        if (!ok)
            fail(what + " at " + display_word(w));
    }
    std::size_t count() const { return _count; }
    void flush(std::vector<std::string>& details) const
    {
        for (const auto& m : _first)
            details.push_back("  " + m);
    }

private:
    std::size_t _count = 0;
    std::vector<std::string> _first;
};

Word repeat(const Alphabet& alphabet, std::initializer_list<Run> runs)
{
    return Word::from_runs(alphabet, std::vector<Run>(runs));
}

Word prepend(const Word& w, Letter x, std::uint32_t count)
{
    Word v = w;
    v.push_front(x, count);
    return v;
}

Word prepend_letter(const Word& w, Letter x)
{
    return prepend(w, x, 1);
}

std::optional<Word> d_of(const Word& w)
{
    auto d = derivative(w);
    if (!d)
        return std::nullopt;
    return d.word();
}

// D(closure(w)) by the four boundary cases.
Word closure_derivative_cases(const Word& w, const Word& dw)
{
    const Alphabet& alphabet = w.alphabet();
    if (w.empty())
        return dw;
    const RunProfile p = profile(w);
    const Letter a = alphabet.a();
    const Letter b = alphabet.b();
    const bool left = p.lfr > a && p.lfr < b;
    const bool right = p.r > 1 && p.llr > a && p.llr < b;
    Word out = dw;
    if (p.r == 1) {
        if (left)
            out.push_back(b);
        return out;
    }
    if (left)
        out.push_front(b);
    if (right)
        out.push_back(b);
    return out;
}

void algebra_for_word(const Word& w, SmoothCache& cache, Tally& tally)
{
    const Alphabet& alphabet = w.alphabet();
    const Letter a = alphabet.a();
    const Letter b = alphabet.b();

    for (std::size_t len = 1; len <= w.size(); ++len)
        for (std::size_t pos = 0; pos + len <= w.size(); ++pos)
            tally.expect(is_smooth(w.slice(pos, len), &cache), "factor not smooth", w);

    const Word c = complement(w);
    const Word r = reversal(w);
    tally.expect(is_smooth(c, &cache) && is_smooth(r, &cache), "complement/reversal not smooth", w);

    const auto dw = d_of(w);
    if (!dw) {
        tally.fail("smooth word not differentiable: " + display_word(w));
        return;
    }
    const auto dc = d_of(c);
    const auto dr = d_of(r);
    tally.expect(dc && *dc == *dw, "D(complement) != D", w);
    tally.expect(dr && *dr == reversal(*dw), "D(reversal) != reversal(D)", w);

    const Word hat = closure(w);
    tally.expect(closure(c) == complement(hat), "closure/complement", w);
    tally.expect(closure(r) == reversal(hat), "closure/reversal", w);
    const Word rw = rho(w).word();
    tally.expect(rho(c).word() == rw, "rho(complement) != rho", w);
    tally.expect(rho(r).word() == reversal(rw), "rho(reversal) != reversal(rho)", w);
    tally.expect(derivative(hat).word() == closure_derivative_cases(w, *dw), "D(closure) case formula", w);
    tally.expect(is_factor(w, hat), "w not a factor of its closure", w);
    tally.expect(is_factor(*dw, rw), "D(w) not a factor of rho(w)", w);

    for (std::size_t len = 1; len <= w.size(); ++len) {
        for (std::size_t pos = 0; pos + len <= w.size(); ++pos) {
            const Word u = w.slice(pos, len);
            tally.expect(is_factor(closure(u), hat), "closure(u) not a factor of closure(w)", w);
            const auto du = d_of(u);
            tally.expect(du && is_factor(*du, *dw), "D(u) not a factor of D(w)", w);
            tally.expect(is_factor(rho(u).word(), rw), "rho(u) not a factor of rho(w)", w);
        }
    }

    // Extension identities for differentiable words with |w| >= a+1.
    if (w.size() >= a + 1) {
        const RunProfile p = profile(w);
        const Letter first = p.fr_letter;
        const Letter other = alphabet.other(first);
        if (p.lfr == b) {
            tally.expect(!derivative(prepend_letter(w, first)), "w1.w differentiable although lfr = b", w);
            for (std::uint32_t i = 0; i < b; ++i) {
                const auto d = d_of(prepend(w, other, i));
                tally.expect(d && *d == *dw, "D(other^i w) != D(w)", w);
            }
        } else {
            Word expected = *dw;
            expected.push_front(b);
            const auto d = d_of(prepend(w, first, b - p.lfr));
            tally.expect(d && *d == expected, "D(w1^{b-lfr} w) != b D(w)", w);
        }
        if (p.lfr <= a && p.r > 1) {
            Word v = prepend(w, first, a - p.lfr);
            v.push_front(other);
            Word expected = *dw;
            expected.push_front(a);
            const auto d = d_of(v);
            tally.expect(d && *d == expected, "D(other w1^{a-lfr} w) != a D(w)", w);
        }
    }

    tally.expect(!left_extensions(w, &cache).empty(), "no left smooth extension", w);
    tally.expect(!left_extensions(r, &cache).empty(), "no right smooth extension", w);

    if (!w.empty())
        tally.expect(w.run_count() <= dw->size() + 2, "r(w) > |D(w)| + 2", w);

    const long long len = static_cast<long long>(w.size());
    const long long d_len = static_cast<long long>(dw->size());
    const long long c_len = len - d_len - static_cast<long long>((a - 1) * count(*dw, a))
                            - static_cast<long long>((b - 1) * count(*dw, b));
    tally.expect(c_len >= 0 && c_len <= 2 * static_cast<long long>(b - 1), "length identity constant out of range",
                 w);

    const auto prims = primitives(w);
    tally.expect(prims.size() <= 2 * b * b, "more than 2b^2 primitives", w);
    if (!prims.empty()) {
        const auto [lo, hi] = std::minmax_element(prims.begin(), prims.end(), [](const Word& x, const Word& y) {
            return x.size() < y.size();
        });
        tally.expect(hi->size() - lo->size() <= 2 * (b - 1), "primitive lengths spread beyond 2(b-1)", w);
    }
}

} // namespace

CheckResult check_counting_law(const VerifyOptions& options)
{
    CheckResult result{1, "counting law |P^j| = 4(b-1)(2b-1)^(j-1)", true, {}};
    const auto opts = enumeration(options);
    for (const Alphabet& alphabet : kLevelAlphabets) {
        const unsigned j_max = level_grid_max(alphabet);
        const auto levels = p_levels(alphabet, j_max, opts);
        std::string sizes;
        bool ok = true;
        for (const LfeLevel& level : levels) {
            const std::uint64_t expected = level_formula(alphabet, level.j);
            ok = ok && level.words.size() == expected;
            sizes += " " + std::to_string(level.words.size()) + "/" + std::to_string(expected);
        }
        result.passed = result.passed && ok;
        result.details.push_back(name(alphabet) + (ok ? " ok" : " MISMATCH") + " j=1.." + std::to_string(j_max)
                                 + " measured/formula:" + sizes);
    }
    return result;
}

CheckResult check_level_oracle(const VerifyOptions& options)
{
    CheckResult result{2, "constructive levels equal filter-based oracle", true, {}};
    const auto opts = enumeration(options);
    for (const Alphabet& alphabet : kLevelAlphabets) {
        const unsigned j_max = level_grid_max(alphabet);
        const auto built = p_levels(alphabet, j_max, opts);
        const auto oracle = p_levels_oracle(alphabet, j_max, opts);
        bool ok = built.size() == oracle.size();
        for (std::size_t i = 0; ok && i < built.size(); ++i)
            ok = built[i].words == oracle[i].words;
        result.passed = result.passed && ok;
        result.details.push_back(name(alphabet) + (ok ? " equal" : " DIFFER") + " for j=1.."
                                 + std::to_string(j_max));
    }
    return result;
}

CheckResult check_gamma_identity(const VerifyOptions& options)
{
    CheckResult result{3, "gamma(n) = 2 + sum |LF_i| equals brute force, n <= 20", true, {}};
    const auto opts = enumeration(options);
    for (const Alphabet& alphabet : kLevelAlphabets) {
        const auto table = gamma_table(alphabet, kGammaHorizon, opts);
        const auto brute = gamma_bruteforce_series(alphabet, kGammaHorizon, opts);
        std::string first_bad;
        for (std::size_t n = 0; n <= kGammaHorizon && first_bad.empty(); ++n)
            if (table.at(n).gamma != brute[n])
                first_bad = "n=" + std::to_string(n) + " table " + std::to_string(table.at(n).gamma) + " brute "
                            + std::to_string(brute[n]);
        result.passed = result.passed && first_bad.empty();
        result.details.push_back(name(alphabet) + (first_bad.empty() ? " ok" : " MISMATCH " + first_bad)
                                 + " gamma(20)=" + std::to_string(brute[kGammaHorizon]));
    }
    return result;
}

CheckResult check_worked_examples(const VerifyOptions&)
{
    CheckResult result{4, "worked examples", true, {}};
    auto record = [&](bool ok, const std::string& what) {
        result.passed = result.passed && ok;
        result.details.push_back((ok ? "ok " : "MISMATCH ") + what);
    };

    const Alphabet a13(1, 3);
    const Word w = parse_word(a13, "3311133313133311133");
    const std::string hat = format_word(closure(w));
    record(hat == "333111333131333111333", "closure(3311133313133311133) = " + hat);
    const std::string hat_u = format_word(closure(parse_word(a13, "3313133311")));
    record(hat_u == "333131333111", "closure(3313133311) = " + hat_u);

    const Alphabet a23(2, 3);
    const Word hw = repeat(a23, {{3, 1}, {2, 3}, {3, 3}, {2, 3}, {3, 2}, {2, 2}, {3, 2}, {2, 3}, {3, 3}, {2, 3}, {3, 1}});
    const unsigned ht = height(hw);
    record(ht == 3, "height(" + format_word(hw) + ") = " + std::to_string(ht));

    for (const Alphabet& alphabet : kLevelAlphabets) {
        Word single(alphabet);
        single.push_back(alphabet.b());
        const auto prims = primitives(single);
        std::size_t shortest = prims.front().size();
        for (const Word& p : prims)
            shortest = std::min(shortest, p.size());
        std::vector<std::string> shortest_words;
        for (const Word& p : prims)
            if (p.size() == shortest)
                shortest_words.push_back(format_word(p));
        Word ab(alphabet), bb(alphabet);
        ab.push_back(alphabet.a(), alphabet.b());
        bb.push_back(alphabet.b(), alphabet.b());
        const bool ok = prims.size() == 2 * alphabet.b() * alphabet.b() && shortest_words.size() == 2
                        && shortest_words[0] == format_word(ab) && shortest_words[1] == format_word(bb);
        record(ok, name(alphabet) + " primitives of b: " + std::to_string(prims.size()) + ", shortest "
                       + shortest_words.front() + " " + shortest_words.back());
    }

    struct Generic
    {
        const char* label;
        std::vector<std::pair<Letter, std::uint32_t>> runs;
        std::vector<std::pair<Letter, std::uint32_t>> expected;
    };
    const std::vector<Generic> generic{
        {"w1", {{6, 1}, {4, 2}, {2, 6}, {6, 6}, {4, 6}, {6, 6}, {2, 6}, {4, 6}}, {{2, 1}, {6, 6}}},
        {"w2", {{4, 1}, {2, 6}, {6, 6}, {4, 6}, {6, 6}, {2, 6}, {4, 6}}, {{6, 6}}},
        {"w3", {{4, 1}, {2, 6}, {6, 6}, {4, 6}, {6, 6}, {2, 6}}, {{6, 5}}},
        {"v1", {{4, 6}, {2, 2}, {6, 2}}, {{6, 1}, {2, 1}}},
        {"v2", {{2, 6}, {6, 6}, {2, 6}, {6, 6}, {2, 6}, {6, 6}, {4, 4}, {6, 2}}, {{6, 6}, {4, 1}}},
        {"v3", {{2, 6}, {4, 6}, {2, 2}, {6, 2}}, {{6, 2}, {2, 1}}},
        {"u1", {{2, 2}, {6, 2}, {4, 6}}, {{2, 1}, {6, 1}}},
        {"u2", {{4, 4}, {2, 2}, {6, 2}, {2, 2}, {6, 2}, {2, 2}, {6, 2}, {4, 6}}, {{2, 6}, {6, 1}}},
        {"u3", {{2, 2}, {4, 2}, {6, 2}}, {{2, 1}}},
    };
    auto expand = [](const std::vector<std::pair<Letter, std::uint32_t>>& runs) {
        std::vector<Letter> out;
        for (auto [x, n] : runs)
            out.insert(out.end(), n, x);
        return out;
    };
    for (const Generic& g : generic) {
        const auto d = generic_run_length_derivative(expand(g.runs), 6);
        std::string text;
        for (Letter x : d)
            text += std::to_string(x);
        record(d == expand(g.expected), std::string("D(") + g.label + ") = " + text);
    }
    return result;
}

CheckResult check_operator_algebra(const VerifyOptions& options)
{
    CheckResult result{5, "operator algebra on smooth words, |w| <= 14", true, {}};
    const auto opts = enumeration(options);
    for (const Alphabet& alphabet : kAlgebraAlphabets) {
        const auto groups = smooth_words_by_length(alphabet, kAlgebraLength, opts);
        SmoothCache cache;
        Tally tally;
        std::size_t total = 0;
        for (const auto& group : groups) {
            for (const Word& w : group) {
                algebra_for_word(w, cache, tally);
                ++total;
            }
        }
        result.passed = result.passed && tally.count() == 0;
        result.details.push_back(name(alphabet) + " " + std::to_string(total) + " smooth words, "
                                 + std::to_string(tally.count()) + " violations");
        tally.flush(result.details);
    }
    return result;
}

CheckResult check_lfe_lemmas(const VerifyOptions& options)
{
    CheckResult result{6, "LFE lemmas on smooth words, |w| <= 14", true, {}};
    const auto opts = enumeration(options);
    for (const Alphabet& alphabet : kAlgebraAlphabets) {
        const auto groups = smooth_words_by_length(alphabet, kAlgebraLength, opts);
        SmoothCache cache;
        Tally tally;
        std::size_t lfe_count = 0;
        for (const auto& group : groups) {
            for (const Word& w : group) {
                const bool lfe = is_lfe(w, &cache);
                tally.expect(lfe == is_lfe(complement(w), &cache), "LFE not closed under complement", w);
                if (!lfe)
                    continue;
                ++lfe_count;
                const auto d = d_of(w);
                tally.expect(d && is_lfe(*d, &cache), "D(w) not LFE", w);
                if (!w.empty() && (w.size() >= alphabet.b() || w.run_count() > 1)) {
                    const RunProfile p = profile(w);
                    tally.expect(p.lfr == alphabet.a() && p.r > 1, "prefix shape w1^a w_{a+1}", w);
                }
            }
        }
        result.passed = result.passed && tally.count() == 0;
        result.details.push_back(name(alphabet) + " " + std::to_string(lfe_count) + " LFE words, "
                                 + std::to_string(tally.count()) + " violations");
        tally.flush(result.details);
    }
    return result;
}

CheckResult check_even_alphabets(const VerifyOptions& options)
{
    CheckResult result{7, "even alphabets: balance, length sandwich, t1/t2 ranges", true, {}};
    const auto opts = enumeration(options);
    for (const Alphabet& alphabet : kEvenAlphabets) {
        const auto groups = smooth_words_by_length(alphabet, kBalanceLength, opts);
        std::size_t total = 0;
        Tally tally;
        for (const auto& group : groups) {
            for (const Word& w : group) {
                tally.expect(balance_check(w), "balance or length sandwich", w);
                ++total;
            }
        }
        result.passed = result.passed && tally.count() == 0;
        result.details.push_back(name(alphabet) + " " + std::to_string(total) + " smooth words, "
                                 + std::to_string(tally.count()) + " violations");
        tally.flush(result.details);
    }

    std::size_t pairs = 0;
    std::size_t out_of_range = 0;
    double t2_min = 1e9;
    Alphabet t2_argmin(2, 4);
    for (Letter b = 4; b <= kEvenScanMax; b += 2) {
        for (Letter a = 2; a < b; a += 2) {
            const auto c = even_constants(Alphabet(a, b));
            ++pairs;
            if (!even_constants_in_range(c, kTol)) {
                ++out_of_range;
                result.details.push_back("  out of range: " + name(c.alphabet) + " t1=" + fixed(c.t1)
                                         + " t2=" + fixed(c.t2));
            }
            if (c.t2 < t2_min) {
                t2_min = c.t2;
                t2_argmin = c.alphabet;
            }
        }
    }
    const double t2_floor = 2.0 - std::log(20.0) / std::log(12.0);
    const double t1_24 = even_constants(Alphabet(2, 4)).t1;
    const bool t1_ok = std::abs(t1_24 + std::log(13.0) / std::log(3.0)) <= kTol;
    const bool floor_ok = std::abs(t2_min - t2_floor) <= kTol;
    result.passed = result.passed && out_of_range == 0 && t1_ok && floor_ok;
    result.details.push_back(std::to_string(pairs) + " even pairs with b <= 58, " + std::to_string(out_of_range)
                             + " outside the t1/t2 ranges");
    result.details.push_back(std::string(t1_ok ? "ok" : "MISMATCH") + " t1{2,4} = " + fixed(t1_24, 9)
                             + " vs -log13/log3");
    result.details.push_back(std::string(floor_ok ? "ok" : "MISMATCH") + " min t2 = " + fixed(t2_min, 9) + " at "
                             + name(t2_argmin) + " vs 2-log20/log12 = " + fixed(t2_floor, 9));
    return result;
}

CheckResult check_theorem1_sandwich(const VerifyOptions& options)
{
    CheckResult result{8, "Theorem 1 sandwich c1 n^lower <= gamma(n) <= c2 n^upper", true, {}};
    const auto opts = enumeration(options);
    for (const Alphabet& alphabet : kLevelAlphabets) {
        const std::size_t horizon = sandwich_horizon(alphabet);
        const auto table = gamma_table(alphabet, horizon, opts);
        BoundReport report = estimate_xi(table, kXiN0, horizon);
        const std::size_t lemma = height_bounds_check(table, report);
        const std::size_t sandwich = sandwich_check(table, report);
        const bool ok = lemma == 0 && sandwich == 0;
        result.passed = result.passed && ok;
        result.details.push_back(name(alphabet) + " n<=" + std::to_string(horizon) + " xi=" + report.xi.str()
                                 + " N0=" + (report.big_n0 ? std::to_string(*report.big_n0) : "none")
                                 + " t1=" + fixed(report.t1) + " t2(fitted)=" + fixed(report.t2)
                                 + " exponents [" + fixed(report.exponent_lower) + ", "
                                 + fixed(report.exponent_upper) + "] height-lemma violations "
                                 + std::to_string(lemma) + ", sandwich violations " + std::to_string(sandwich));
        for (std::size_t i = 0; i < report.violations.size() && i < 5; ++i)
            result.details.push_back("  " + report.violations[i]);
    }
    return result;
}

CheckResult check_theorem2_trend(const VerifyOptions& options)
{
    CheckResult result{9, "Theorem 2 trend for {2,4}: slope within 0.25, gap shrinking", true, {}};
    const Alphabet alphabet(2, 4);
    const double target = theorem2_exponent(alphabet);
    const auto table = gamma_table(alphabet, kFitHorizon, enumeration(options));
    double previous_gap = 1e9;
    bool shrinking = true;
    ExponentFit last;
    for (std::size_t hi = 16; hi <= kFitHorizon; hi *= 2) {
        last = fit_exponent(table, 8, hi);
        const double gap = std::abs(last.slope - target);
        shrinking = shrinking && gap <= previous_gap;
        previous_gap = gap;
        result.details.push_back("window [8," + std::to_string(hi) + "] slope " + fixed(last.slope, 4) + " r2 "
                                 + fixed(last.r2, 5) + " gap " + fixed(gap, 4));
    }
    const bool within = std::abs(last.slope - target) <= kFitBand;
    result.passed = within && shrinking;
    result.details.push_back("target log7/log3 = " + fixed(target, 4) + (within ? ", within band" : ", OUTSIDE band")
                             + (shrinking ? ", gap nonincreasing" : ", gap NOT shrinking"));
    return result;
}

CheckResult check_kolakoski(const VerifyOptions&)
{
    CheckResult result{10, "Kolakoski prefix, factor smoothness, density band", true, {}};
    const Alphabet alphabet(1, 2);
    KolakoskiStream stream(alphabet, 2);

    const std::string head = format_word(stream.prefix(18));
    const bool head_ok = head == "221121221221121122";
    result.details.push_back((head_ok ? "ok prefix " : "MISMATCH prefix ") + head);

    const Word factors = stream.prefix(kKolakoskiFactorPrefix);
    bool smooth_ok = true;
    for (std::size_t window = 1; window <= kKolakoskiMaxWindow; ++window)
        smooth_ok = smooth_ok && factor_smoothness_check(factors, window);
    result.details.push_back(std::string(smooth_ok ? "ok" : "FAIL") + " factors of the 10^4 prefix, windows 1..12");

    const Word big = stream.prefix(kKolakoskiLength);
    const Ratio d1 = density(big, 1);
    const bool density_ok = d1 > Ratio(49, 100) && d1 < Ratio(51, 100);
    // The density bound concerns the tail, so prefixes shorter than 1% of
    // the horizon are excluded.
    const std::size_t min_length = kKolakoskiLength / 100;
    const Ratio upper = max_prefix_density(big, 1, min_length);
    const bool upper_ok = upper < Ratio(502'838, 1'000'000);
    result.details.push_back(std::string(density_ok ? "ok" : "FAIL") + " density of 1 in 10^6 terms "
                             + fixed(d1.value()));
    result.details.push_back(std::string(upper_ok ? "ok" : "FAIL") + " max density over prefixes of length >= "
                             + std::to_string(min_length) + ": " + fixed(upper.value()) + " < 0.502838");
    result.passed = head_ok && smooth_ok && density_ok && upper_ok;
    return result;
}

std::vector<CheckResult> verify_all(const VerifyOptions& options)
{
    return {
        check_counting_law(options),   check_level_oracle(options),    check_gamma_identity(options),
        check_worked_examples(options), check_operator_algebra(options), check_lfe_lemmas(options),
        check_even_alphabets(options), check_theorem1_sandwich(options), check_theorem2_trend(options),
        check_kolakoski(options),
    };
}

std::string render(const std::vector<CheckResult>& results)
{
    std::ostringstream out;
    for (const CheckResult& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.name << "\n";
        for (const auto& d : r.details)
            out << "    " << d << "\n";
    }
    return out.str();
}

} // namespace smoothwords
