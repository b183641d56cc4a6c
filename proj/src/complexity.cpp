#include "smoothwords/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>

#include "smoothwords/errors.hpp"
#include "smoothwords/operators.hpp"
#include "smoothwords/parallel.hpp"
#include "smoothwords/smoothness.hpp"

namespace smoothwords {

namespace {

struct WordStats
{
    unsigned height = 0;
    std::size_t b_count = 0;
    std::size_t d_length = 0;
};

ComplexityRow summarize(std::size_t n, const std::vector<Word>& words, unsigned threads, SmoothCache* cache)
{
    ComplexityRow row;
    row.n = n;
    row.lf_count = words.size();
    if (n == 0 || words.empty())
        return row;

    const Letter b = words.front().alphabet().b();
    std::vector<WordStats> stats(words.size());
    parallel_for(words.size(), threads, [&](std::size_t i) {
        const Word& w = words[i];
        stats[i].height = height(w, cache);
        stats[i].b_count = count(w, b);
        stats[i].d_length = derivative(w).word().size();
    });

    std::size_t b_min = n;
    std::size_t b_max = 0;
    row.ht_min = std::numeric_limits<unsigned>::max();
    row.d_min = n;
    for (const WordStats& s : stats) {
        row.ht_min = std::min(row.ht_min, s.height);
        row.ht_max = std::max(row.ht_max, s.height);
        b_min = std::min(b_min, s.b_count);
        b_max = std::max(b_max, s.b_count);
        row.d_min = std::min(row.d_min, s.d_length);
        row.d_max = std::max(row.d_max, s.d_length);
    }
    row.min_b_ratio = Ratio(b_min, n);
    row.min_a_ratio = Ratio(n - b_max, n);
    return row;
}

std::string fmt(double x)
{
    std::ostringstream out;
    out.precision(10);
    out << x;
    return out.str();
}

// Smooth words of length n+1 are the smooth one-letter right extensions of
// smooth words of length n, since factors of smooth words are smooth.
template <class Visit>
void walk_smooth_frontier(const Alphabet& alphabet, std::size_t n_max, const EnumerationOptions& options,
                          Visit&& visit)
{
    std::vector<Word> frontier{Word(alphabet)};
    visit(std::size_t{0}, frontier);
    const Letter letters[2] = {alphabet.a(), alphabet.b()};
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::vector<char> keep(frontier.size() * 2, 0);
        parallel_for(frontier.size(), options.threads, [&](std::size_t i) {
            for (int x = 0; x < 2; ++x) {
                Word v = frontier[i];
                v.push_back(letters[x]);
                keep[2 * i + x] = is_smooth(v, options.cache);
            }
        });
        const auto kept = static_cast<std::size_t>(std::count(keep.begin(), keep.end(), 1));
        if (kept > options.max_states)
            throw ResourceLimitError("smooth frontier at length " + std::to_string(n) + " holds "
                                     + std::to_string(kept) + " words, above the cap of "
                                     + std::to_string(options.max_states));
        std::vector<Word> next;
        next.reserve(kept);
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            for (int x = 0; x < 2; ++x) {
                if (keep[2 * i + x]) {
                    Word v = frontier[i];
                    v.push_back(letters[x]);
                    next.push_back(std::move(v));
                }
            }
        }
        frontier = std::move(next);
        visit(n, frontier);
    }
}

void require_even(const Alphabet& alphabet)
{
    if (!alphabet.is_even())
        throw std::invalid_argument("alphabet {" + std::to_string(alphabet.a()) + "," + std::to_string(alphabet.b())
                                    + "} is not even");
}

} // namespace

ComplexityTable gamma_table(const Alphabet& alphabet, std::size_t n_max, const EnumerationOptions& options)
{
    SmoothCache own;
    EnumerationOptions opts = options;
    if (!opts.cache)
        opts.cache = &own;

    ComplexityTable table{alphabet, {}};
    table.rows.reserve(n_max + 1);
    LfeFrontier frontier(alphabet, opts);
    table.rows.push_back(summarize(0, frontier.current().words, opts.threads, opts.cache));
    table.rows.back().gamma = 1;

    std::uint64_t partial = 0; // sum_{i=1}^{n-1} |LF_i|
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto& lf = frontier.advance();
        ComplexityRow row = summarize(n, lf.words, opts.threads, opts.cache);
        row.gamma = 2 + partial;
        partial += row.lf_count;
        table.rows.push_back(row);
    }
    return table;
}

std::vector<std::uint64_t> gamma_bruteforce_series(const Alphabet& alphabet, std::size_t n_max,
                                                   const EnumerationOptions& options)
{
    std::vector<std::uint64_t> counts;
    walk_smooth_frontier(alphabet, n_max, options,
                         [&](std::size_t, const std::vector<Word>& words) { counts.push_back(words.size()); });
    return counts;
}

std::uint64_t gamma_bruteforce(const Alphabet& alphabet, std::size_t n, const EnumerationOptions& options)
{
    return gamma_bruteforce_series(alphabet, n, options).back();
}

std::vector<std::vector<Word>> smooth_words_by_length(const Alphabet& alphabet, std::size_t n_max,
                                                      const EnumerationOptions& options)
{
    std::vector<std::vector<Word>> groups;
    walk_smooth_frontier(alphabet, n_max, options,
                         [&](std::size_t, const std::vector<Word>& words) { groups.push_back(words); });
    return groups;
}

std::vector<HeightRange> smooth_height_range(const Alphabet& alphabet, std::size_t n_max,
                                             const EnumerationOptions& options)
{
    std::vector<HeightRange> ranges(n_max + 1);
    walk_smooth_frontier(alphabet, n_max, options, [&](std::size_t n, const std::vector<Word>& words) {
        if (n == 0)
            return;
        std::vector<unsigned> heights(words.size());
        parallel_for(words.size(), options.threads, [&](std::size_t i) { heights[i] = height(words[i]); });
        const auto [lo, hi] = std::minmax_element(heights.begin(), heights.end());
        ranges[n] = {*lo, *hi};
    });
    return ranges;
}

std::pair<double, double> theorem1_exponents(const Alphabet& alphabet, double xi)
{
    if (!(xi > 0.0 && xi < 0.5))
        throw std::invalid_argument("xi must lie strictly between 0 and 1/2");
    const double s = static_cast<double>(alphabet.a()) + static_cast<double>(alphabet.b()) - 2.0;
    const double growth = std::log(2.0 * alphabet.b() - 1.0);
    return {growth / std::log(1.0 + s * (1.0 - xi)), growth / std::log(1.0 + s * xi)};
}

BoundReport estimate_xi(const ComplexityTable& table, std::size_t n0, std::size_t n_max)
{
    if (n0 >= n_max)
        throw std::invalid_argument("empty frequency window: need n0 < n_max");
    if (n_max > table.n_max())
        throw std::invalid_argument("frequency window exceeds the table (n_max " + std::to_string(table.n_max())
                                    + ")");
    const Alphabet& alphabet = table.alphabet;
    BoundReport report;
    report.alphabet = alphabet;
    report.xi = Ratio(1, 1);
    report.xi_complement = Ratio(1, 1);
    report.n0 = n0;
    report.n_max = n_max;
    for (std::size_t n = n0 + 1; n <= n_max; ++n) {
        report.xi = std::min(report.xi, table.at(n).min_b_ratio);
        report.xi_complement = std::min(report.xi_complement, table.at(n).min_a_ratio);
    }
    if (!(report.xi > Ratio(0, 1) && report.xi < Ratio(1, 2)))
        throw std::invalid_argument("minimal b-frequency " + report.xi.str() + " is not in (0, 1/2)");

    for (std::size_t n = table.n_max() + 1; n-- > 1;) {
        if (table.at(n).lf_count > 0 && table.at(n).d_min <= n0)
            break;
        report.big_n0 = n;
    }

    const double xi = report.xi.value();
    const double s = static_cast<double>(alphabet.a()) + static_cast<double>(alphabet.b()) - 2.0;
    const double b = alphabet.b();
    report.alpha = 1.0 / (1.0 + s * xi);
    report.beta = 1.0 + s * (1.0 - xi);
    report.q = 2.0 * (b - 1.0);
    report.m = 2.0 * (b - 1.0) + report.q / (report.beta - 1.0);
    report.t1 = -std::log(report.m) / std::log(report.beta);
    std::tie(report.exponent_lower, report.exponent_upper) = theorem1_exponents(alphabet, xi);
    report.c1 = 2.0 * std::pow(2.0 * b - 1.0, report.t1 - 1.0);
    return report;
}

std::size_t height_bounds_check(const ComplexityTable& table, BoundReport& report)
{
    const std::size_t before = report.violations.size();
    const double log_beta = std::log(report.beta);
    const double log_inv_alpha = -std::log(report.alpha);

    report.t2 = -std::numeric_limits<double>::infinity();
    for (std::size_t n = 1; n <= table.n_max(); ++n) {
        const ComplexityRow& row = table.at(n);
        if (row.lf_count == 0)
            continue;
        report.t2 = std::max(report.t2, row.ht_max - std::log(static_cast<double>(n)) / log_inv_alpha);
    }
    report.c2 = 2.0 * std::pow(2.0 * report.alphabet.b() - 1.0, report.t2);

    for (std::size_t n = 1; n <= table.n_max(); ++n) {
        const ComplexityRow& row = table.at(n);
        if (row.lf_count == 0)
            continue;
        const double logn = std::log(static_cast<double>(n));
        const double lower = logn / log_beta + report.t1;
        if (!(row.ht_min > lower))
            report.violations.push_back("n=" + std::to_string(n) + ": ht_min " + std::to_string(row.ht_min)
                                        + " <= " + fmt(lower));
        const double upper = logn / log_inv_alpha + report.t2;
        if (!(row.ht_max <= upper))
            report.violations.push_back("n=" + std::to_string(n) + ": ht_max " + std::to_string(row.ht_max)
                                        + " > " + fmt(upper));
        if (report.big_n0 && n >= *report.big_n0) {
            const double nn = static_cast<double>(n);
            if (!(row.d_max <= report.alpha * nn))
                report.violations.push_back("n=" + std::to_string(n) + ": |D(w)| " + std::to_string(row.d_max)
                                            + " > alpha*n " + fmt(report.alpha * nn));
            if (!(nn <= report.beta * static_cast<double>(row.d_min) + report.q))
                report.violations.push_back("n=" + std::to_string(n) + ": n > beta*|D(w)|+q with |D(w)| "
                                            + std::to_string(row.d_min));
        }
    }
    return report.violations.size() - before;
}

std::size_t sandwich_check(const ComplexityTable& table, BoundReport& report)
{
    const std::size_t before = report.violations.size();
    for (std::size_t n = std::max<std::size_t>(report.n0, 1); n <= table.n_max(); ++n) {
        const double nn = static_cast<double>(n);
        const double gamma = static_cast<double>(table.at(n).gamma);
        const double lower = report.c1 * std::pow(nn, report.exponent_lower);
        const double upper = report.c2 * std::pow(nn, report.exponent_upper);
        if (!(lower <= gamma))
            report.violations.push_back("n=" + std::to_string(n) + ": gamma " + std::to_string(table.at(n).gamma)
                                        + " < c1*n^lower " + fmt(lower));
        if (!(gamma <= upper))
            report.violations.push_back("n=" + std::to_string(n) + ": gamma " + std::to_string(table.at(n).gamma)
                                        + " > c2*n^upper " + fmt(upper));
    }
    return report.violations.size() - before;
}

bool partial_sum_identity(const Alphabet& alphabet, unsigned K)
{
    const std::uint64_t b = alphabet.b();
    const std::uint64_t r = 2 * b - 1;
    std::uint64_t sum = 2;
    std::uint64_t power = 1; // r^{j-1}
    for (unsigned j = 1; j <= K; ++j) {
        if (power > std::numeric_limits<std::uint64_t>::max() / (4 * r))
            throw std::overflow_error("partial sum exceeds 64 bits");
        sum += 4 * (b - 1) * power;
        power *= r;
    }
    return sum == 2 * power;
}

EvenAlphabetConstants even_constants(const Alphabet& alphabet)
{
    require_even(alphabet);
    const double a = alphabet.a();
    const double b = alphabet.b();
    EvenAlphabetConstants c{alphabet};
    c.rho_half = (a + b) / 2.0;
    const double rho = c.rho_half;
    c.q1 = (rho - 1.0) * b + 2.0 * (b - 1.0);
    c.q2 = (rho - 1.0) * b;
    c.tau = b * (rho - 2.0) / (rho - 1.0);
    c.t1 = -std::log(3.0 * b - 2.0 + 2.0 * (b - 1.0) / (rho - 1.0)) / std::log(rho);
    c.t2 = 2.0 - std::log(c.tau) / std::log(rho);
    return c;
}

bool even_constants_in_range(const EvenAlphabetConstants& c, double tol)
{
    const double t1_lo = -std::log(13.0) / std::log(3.0);
    const double t2_lo = 2.0 - std::log(20.0) / std::log(12.0);
    const double t2_hi = 2.0 - std::log(2.0) / std::log(3.0);
    return c.t1 >= t1_lo - tol && c.t1 < -1.0 && c.t2 >= t2_lo - tol && c.t2 <= t2_hi + tol;
}

bool balance_check(const Word& w)
{
    const Alphabet& alphabet = w.alphabet();
    require_even(alphabet);
    const auto d = derivative(w);
    if (!d || !derivative(d.word()))
        throw std::invalid_argument("balance_check requires a twice differentiable word");
    const auto na = static_cast<long long>(count(w, alphabet.a()));
    const auto nb = static_cast<long long>(count(w, alphabet.b()));
    if (std::llabs(na - nb) > static_cast<long long>(alphabet.b()))
        return false;
    // rho, q1 and q2 are half-integers at worst; compare doubled values exactly.
    const long long a = alphabet.a();
    const long long b = alphabet.b();
    const long long len2 = 2 * static_cast<long long>(w.size());
    const long long d2 = (a + b) * static_cast<long long>(d.word().size());
    const long long q2_2 = (a + b - 2) * b;
    const long long q1_2 = q2_2 + 4 * (b - 1);
    return d2 - q2_2 <= len2 && len2 <= d2 + q1_2;
}

std::size_t even_height_check(const ComplexityTable& table, const EvenAlphabetConstants& c,
                              std::vector<std::string>& violations)
{
    const std::size_t before = violations.size();
    const double log_rho = std::log(c.rho_half);
    for (std::size_t n = 1; n <= table.n_max(); ++n) {
        const ComplexityRow& row = table.at(n);
        if (row.lf_count == 0)
            continue;
        const double base = std::log(static_cast<double>(n)) / log_rho;
        if (!(row.ht_min > base + c.t1))
            violations.push_back("n=" + std::to_string(n) + ": ht_min " + std::to_string(row.ht_min)
                                 + " <= " + fmt(base + c.t1));
        if (!(row.ht_max < base + c.t2))
            violations.push_back("n=" + std::to_string(n) + ": ht_max " + std::to_string(row.ht_max)
                                 + " >= " + fmt(base + c.t2));
    }
    return violations.size() - before;
}

double theorem2_exponent(const Alphabet& alphabet)
{
    require_even(alphabet);
    return std::log(2.0 * alphabet.b() - 1.0) / std::log((alphabet.a() + alphabet.b()) / 2.0);
}

ExponentFit fit_exponent(const ComplexityTable& table, std::size_t n_lo, std::size_t n_hi)
{
    n_lo = std::max<std::size_t>(n_lo, 1);
    n_hi = std::min(n_hi, table.n_max());
    if (n_hi < n_lo || n_hi - n_lo + 1 < 8)
        throw std::invalid_argument("exponent fit needs at least 8 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    const double k = static_cast<double>(n_hi - n_lo + 1);
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        const double x = std::log(static_cast<double>(n));
        const double y = std::log(static_cast<double>(table.at(n).gamma));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
    }
    const double cxx = sxx - sx * sx / k;
    const double cxy = sxy - sx * sy / k;
    const double cyy = syy - sy * sy / k;
    ExponentFit fit{n_lo, n_hi};
    fit.slope = cxy / cxx;
    fit.intercept = (sy - fit.slope * sx) / k;
    fit.r2 = cyy > 0 ? (cxy * cxy) / (cxx * cyy) : 1.0;
    return fit;
}

ExponentFit fit_exponent(const ComplexityTable& table)
{
    std::size_t hi = 1;
    while (hi * 2 <= table.n_max())
        hi *= 2;
    return fit_exponent(table, 8, hi);
}

} // namespace smoothwords
