// complexity.hpp -- subword complexity gamma(n), height profiles and bound checks

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smoothwords/lfe.hpp"
#include "smoothwords/ratio.hpp"
#include "smoothwords/word.hpp"

namespace smoothwords {

/// Statistics of the LFE words of length n.
struct ComplexityRow
{
    std::size_t n = 0;
    std::uint64_t gamma = 0;    ///< number of smooth words of length n
    std::uint64_t lf_count = 0; ///< |LF_n|
    unsigned ht_min = 0;        ///< over LF_n (0 when n = 0)
    unsigned ht_max = 0;
    Ratio min_b_ratio;          ///< min |u|_b/|u| over LF_n
    Ratio min_a_ratio;          ///< min |u|_a/|u| over LF_n
    std::size_t d_min = 0;      ///< min |D(u)| over LF_n
    std::size_t d_max = 0;      ///< max |D(u)| over LF_n
};

struct ComplexityTable
{
    Alphabet alphabet;
    std::vector<ComplexityRow> rows; ///< rows[i].n == i, from 0 to n_max

    const ComplexityRow& at(std::size_t n) const { return rows.at(n); }
    std::size_t n_max() const noexcept { return rows.empty() ? 0 : rows.size() - 1; }
};

/// gamma(0..n_max) via gamma(k) = 2 + sum_{i<k} |LF_i| (k >= 1), one LFE
/// frontier pass. Throws `ResourceLimitError` when a frontier exceeds the cap.
ComplexityTable gamma_table(const Alphabet& alphabet, std::size_t n_max, const EnumerationOptions& options = {});

/// Smooth words of each length 0..n_max, counted by growing the smooth
/// frontier one letter to the right. Independent of the LFE machinery.
std::vector<std::uint64_t> gamma_bruteforce_series(const Alphabet& alphabet, std::size_t n_max,
                                                   const EnumerationOptions& options = {});

std::uint64_t gamma_bruteforce(const Alphabet& alphabet, std::size_t n, const EnumerationOptions& options = {});

/// All smooth words grouped by length 0..n_max, each group in
/// lexicographic order.
std::vector<std::vector<Word>> smooth_words_by_length(const Alphabet& alphabet, std::size_t n_max,
                                                      const EnumerationOptions& options = {});

/// Height range over all smooth words of each length 1..n_max (index 0 unused).
struct HeightRange
{
    unsigned min = 0;
    unsigned max = 0;
};
std::vector<HeightRange> smooth_height_range(const Alphabet& alphabet, std::size_t n_max,
                                             const EnumerationOptions& options = {});

/// Constants of the frequency and height lemmas for general alphabets.
struct BoundReport
{
    Alphabet alphabet{1, 2};
    Ratio xi;               ///< min b-frequency of LFE words with n0 < |u| <= n_max
    Ratio xi_complement;    ///< min a-frequency over the same words
    std::size_t n0 = 0;
    std::size_t n_max = 0;
    /// Smallest N such that every LFE word of length >= N in the table has
    /// |D(w)| > n0. Empty when no such length exists in range.
    std::optional<std::size_t> big_n0;
    double alpha = 0;
    double beta = 0;
    double q = 0;
    double m = 0;           ///< 2(b-1) + q/(beta-1)
    double t1 = 0;
    double t2 = 0;          ///< fitted: max of ht_max(n) - log n / log(1/alpha)
    double exponent_lower = 0;
    double exponent_upper = 0;
    double c1 = 0;
    double c2 = 0;
    std::vector<std::string> violations;
};

/// Fills xi, n0, n_max, big_n0 and every constant derived from xi (t2 and
/// the violation list are left for height_bounds_check). Throws
/// `std::invalid_argument` for an empty window, a window outside the table,
/// or a minimum that is not strictly between 0 and 1/2.
BoundReport estimate_xi(const ComplexityTable& table, std::size_t n0, std::size_t n_max);

/// (lower, upper) = (log(2b-1)/log(1+(a+b-2)(1-xi)), log(2b-1)/log(1+(a+b-2)xi)).
/// Throws `std::invalid_argument` unless 0 < xi < 1/2.
std::pair<double, double> theorem1_exponents(const Alphabet& alphabet, double xi);

/// Fits t2 and appends violations of
///   ht_min(n) > log n / log beta + t1,
///   ht_max(n) <= log n / log(1/alpha) + t2,
///   |D(w)| <= alpha |w| for |w| > N0 and |w| <= beta |D(w)| + q for |w| >= N0
/// over rows 1..n_max of the table. Returns the number of new violations.
std::size_t height_bounds_check(const ComplexityTable& table, BoundReport& report);

/// Appends violations of c1 n^lower <= gamma(n) <= c2 n^upper for
/// n0 <= n <= table end. Returns the number of new violations.
std::size_t sandwich_check(const ComplexityTable& table, BoundReport& report);

/// 2 + sum_{j=1}^{K} 4(b-1)(2b-1)^{j-1} == 2(2b-1)^K, exactly in integers.
bool partial_sum_identity(const Alphabet& alphabet, unsigned K);

struct EvenAlphabetConstants
{
    Alphabet alphabet;
    double rho_half = 0; ///< (a+b)/2
    double q1 = 0;
    double q2 = 0;
    double tau = 0;
    double t1 = 0;
    double t2 = 0;
};

/// Throws `std::invalid_argument` unless both letters are even.
EvenAlphabetConstants even_constants(const Alphabet& alphabet);

/// Range check of t1 and t2 against [-log13/log3, -1) and
/// [2 - log20/log12, 2 - log2/log3] with absolute tolerance `tol`.
bool even_constants_in_range(const EvenAlphabetConstants& c, double tol = 1e-9);

/// ||w|_a - |w|_b| <= b and rho|D(w)| - q2 <= |w| <= rho|D(w)| + q1.
/// Throws `std::invalid_argument` for an odd alphabet or a word that is not
/// twice differentiable.
bool balance_check(const Word& w);

/// Appends violations of the even-alphabet height bounds
///   ht_min(n) > log n / log rho + t1 and ht_max(n) < log n / log rho + t2
/// over rows 1..n_max. Returns the number of new violations.
std::size_t even_height_check(const ComplexityTable& table, const EvenAlphabetConstants& c,
                              std::vector<std::string>& violations);

/// log(2b-1) / log((a+b)/2). Throws for odd alphabets.
double theorem2_exponent(const Alphabet& alphabet);

struct ExponentFit
{
    std::size_t n_lo = 0;
    std::size_t n_hi = 0;
    double slope = 0;
    double intercept = 0;
    double r2 = 0;
};

/// Least-squares slope of log gamma(n) on log n for n in [n_lo, n_hi].
/// Throws `std::invalid_argument` for fewer than 8 points.
ExponentFit fit_exponent(const ComplexityTable& table, std::size_t n_lo, std::size_t n_hi);

/// Fit over [8, largest power of two <= table end].
ExponentFit fit_exponent(const ComplexityTable& table);

} // namespace smoothwords
