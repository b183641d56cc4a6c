#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracle.hpp"
#include "smoothwords/complexity.hpp"
#include "smoothwords/operators.hpp"
#include "smoothwords/smoothness.hpp"

using namespace smoothwords;

namespace {

ComplexityTable power_table(double exponent, std::size_t n_max)
{
    ComplexityTable t{Alphabet(1, 2), {}};
    for (std::size_t n = 0; n <= n_max; ++n) {
        ComplexityRow row;
        row.n = n;
        row.gamma = static_cast<std::uint64_t>(std::llround(5.0 * std::pow(static_cast<double>(n), exponent)));
        t.rows.push_back(row);
    }
    return t;
}

} // namespace

TEST_SUITE("complexity")
{
    TEST_CASE("gamma against exhaustive counting")
    {
        const auto table = gamma_table(Alphabet(1, 3), 12);
        CHECK(table.n_max() == 12);
        CHECK(table.at(0).gamma == 1);
        for (std::size_t n = 1; n <= 12; ++n)
            CHECK(table.at(n).gamma == oracle::gamma(1, 3, n));

        for (auto [a, b] : std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {2, 3}, {2, 4}}) {
            const auto t = gamma_table(Alphabet(a, b), 20);
            const auto brute = gamma_bruteforce_series(Alphabet(a, b), 20);
            for (std::size_t n = 0; n <= 20; ++n)
                CHECK(t.at(n).gamma == brute[n]);
            CHECK(gamma_bruteforce(Alphabet(a, b), 1) == 2);
            for (std::size_t n = 1; n <= 10; ++n)
                CHECK(brute[n] == oracle::gamma(a, b, n));
        }
    }

    TEST_CASE("row statistics against exhaustive enumeration")
    {
        const auto table = gamma_table(Alphabet(1, 2), 12);
        for (std::size_t n = 1; n <= 12; ++n) {
            std::uint64_t lf = 0;
            int ht_min = 1 << 20, ht_max = -1;
            std::uint64_t best_num = 1, best_den = 1;
            for (const auto& w : oracle::all_words(1, 2, n)) {
                if (!oracle::lfe(w, 1, 2))
                    continue;
                ++lf;
                const int h = oracle::height(w, 1, 2);
                ht_min = std::min(ht_min, h);
                ht_max = std::max(ht_max, h);
                const std::uint64_t bs = static_cast<std::uint64_t>(std::count(w.begin(), w.end(), 2u));
                if (bs * best_den < best_num * n) {
                    best_num = bs;
                    best_den = n;
                }
            }
            const auto& row = table.at(n);
            CHECK(row.lf_count == lf);
            CHECK(static_cast<int>(row.ht_min) == ht_min);
            CHECK(static_cast<int>(row.ht_max) == ht_max);
            CHECK(row.min_b_ratio == Ratio(best_num, best_den));
        }
    }

    TEST_CASE("smooth words by length and their heights")
    {
        const auto groups = smooth_words_by_length(Alphabet(1, 3), 10);
        const auto ranges = smooth_height_range(Alphabet(1, 3), 10);
        for (std::size_t n = 1; n <= 10; ++n) {
            std::vector<oracle::Letters> naive;
            int lo = 1 << 20, hi = -1;
            for (const auto& w : oracle::all_words(1, 3, n))
                if (oracle::smooth(w, 1, 3)) {
                    naive.push_back(w);
                    lo = std::min(lo, oracle::height(w, 1, 3));
                    hi = std::max(hi, oracle::height(w, 1, 3));
                }
            REQUIRE(groups[n].size() == naive.size());
            for (std::size_t i = 0; i < naive.size(); ++i)
                CHECK(oracle::to_letters(groups[n][i]) == naive[i]);
            CHECK(static_cast<int>(ranges[n].min) == lo);
            CHECK(static_cast<int>(ranges[n].max) == hi);
        }
    }

    TEST_CASE("partial sums of the level formula")
    {
        for (unsigned b = 2; b <= 6; ++b)
            for (unsigned K = 0; K <= 12; ++K)
                CHECK(partial_sum_identity(Alphabet(b - 1, b), K));
        CHECK_THROWS_AS(partial_sum_identity(Alphabet(1, 1000), 40), std::overflow_error);
    }

    TEST_CASE("Theorem 1 exponents")
    {
        const Alphabet ab(1, 2);
        for (double xi : {0.1, 0.25, 1.0 / 3.0, 0.45}) {
            const auto [lower, upper] = theorem1_exponents(ab, xi);
            CHECK(lower == doctest::Approx(std::log(3.0) / std::log(2.0 - xi)).epsilon(1e-12));
            CHECK(upper == doctest::Approx(std::log(3.0) / std::log(1.0 + xi)).epsilon(1e-12));
            CHECK(lower < upper);
        }
        for (auto [a, b] : std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {2, 4}, {3, 7}}) {
            const auto [lower, upper] = theorem1_exponents(Alphabet(a, b), 0.5 - 1e-12);
            const double limit = std::log(2.0 * b - 1) / std::log(1.0 + (a + b - 2) / 2.0);
            CHECK(lower == doctest::Approx(limit).epsilon(1e-9));
            CHECK(upper == doctest::Approx(limit).epsilon(1e-9));
        }
        CHECK_THROWS_AS(theorem1_exponents(ab, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(theorem1_exponents(ab, 0.5), std::invalid_argument);
    }

    TEST_CASE("xi, N0 and the derived constants")
    {
        const Alphabet ab(2, 4);
        const auto table = gamma_table(ab, 24);
        const BoundReport r = estimate_xi(table, 4, 24);

        Ratio naive(1, 1);
        for (std::size_t n = 5; n <= 24; ++n)
            naive = std::min(naive, table.at(n).min_b_ratio);
        CHECK(r.xi == naive);
        CHECK(r.xi == Ratio(1, 3));

        std::optional<std::size_t> big;
        for (std::size_t n = 24; n >= 1; --n) {
            if (table.at(n).lf_count > 0 && table.at(n).d_min <= 4)
                break;
            big = n;
        }
        CHECK(r.big_n0 == big);

        const double xi = r.xi.value();
        const double alpha = 1.0 / (1.0 + 4.0 * xi);
        const double beta = 1.0 + 4.0 * (1.0 - xi);
        const double q = 6.0;
        const double m = 6.0 + q / (beta - 1.0);
        CHECK(r.alpha == doctest::Approx(alpha));
        CHECK(r.beta == doctest::Approx(beta));
        CHECK(r.q == doctest::Approx(q));
        CHECK(r.m == doctest::Approx(m));
        CHECK(r.t1 == doctest::Approx(-std::log(m) / std::log(beta)));
        CHECK(r.exponent_lower == doctest::Approx(std::log(7.0) / std::log(beta)));
        CHECK(r.exponent_upper == doctest::Approx(std::log(7.0) / std::log(1.0 / alpha)));
        CHECK(r.c1 == doctest::Approx(2.0 * std::pow(7.0, r.t1 - 1.0)));

        CHECK_THROWS_AS(estimate_xi(table, 10, 10), std::invalid_argument);
        CHECK_THROWS_AS(estimate_xi(table, 4, 25), std::invalid_argument);
        // lengths 1..2 include a^n with no b at all
        CHECK_THROWS_AS(estimate_xi(table, 0, 2), std::invalid_argument);
    }

    TEST_CASE("height and sandwich checks pass on computed tables")
    {
        for (auto [a, b] : std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {2, 3}, {1, 3}, {2, 4}}) {
            const auto table = gamma_table(Alphabet(a, b), 64);
            BoundReport r = estimate_xi(table, 4, 64);
            CHECK(height_bounds_check(table, r) == 0);
            CHECK(sandwich_check(table, r) == 0);
            CHECK(r.violations.empty());
            CHECK(r.c2 == doctest::Approx(2.0 * std::pow(2.0 * b - 1, r.t2)));
            for (std::size_t n = 1; n <= 64; ++n)
                CHECK(table.at(n).ht_max <= std::log(double(n)) / -std::log(r.alpha) + r.t2 + 1e-12);
        }
    }

    TEST_CASE("sandwich check detects a corrupted table")
    {
        auto table = gamma_table(Alphabet(1, 2), 64);
        BoundReport r = estimate_xi(table, 4, 64);
        height_bounds_check(table, r);
        table.rows[40].gamma *= 1000000;
        table.rows[50].gamma = 1;
        CHECK(sandwich_check(table, r) == 2);
    }

    TEST_CASE("even-alphabet constants")
    {
        const auto c = even_constants(Alphabet(2, 4));
        CHECK(c.rho_half == 3.0);
        CHECK(c.q1 == 14.0);
        CHECK(c.q2 == 8.0);
        CHECK(c.tau == 2.0);
        CHECK(c.t1 == doctest::Approx(-std::log(13.0) / std::log(3.0)));
        CHECK(c.t2 == doctest::Approx(2.0 - std::log(2.0) / std::log(3.0)));
        CHECK(even_constants_in_range(c));
        CHECK_THROWS_AS(even_constants(Alphabet(1, 2)), std::invalid_argument);
        CHECK_THROWS_AS(even_constants(Alphabet(2, 5)), std::invalid_argument);

        double lowest = 10.0;
        for (unsigned b = 4; b <= 58; b += 2)
            for (unsigned a = 2; a < b; a += 2) {
                const auto e = even_constants(Alphabet(a, b));
                CHECK(even_constants_in_range(e));
                lowest = std::min(lowest, e.t2);
            }
        CHECK(lowest == doctest::Approx(0.794428646).epsilon(1e-8));
        CHECK(even_constants(Alphabet(2, 22)).t2 == doctest::Approx(lowest));
    }

    TEST_CASE("balance and length bounds on even alphabets")
    {
        for (auto [a, b] : std::vector<std::pair<unsigned, unsigned>>{{2, 4}, {2, 6}}) {
            const Alphabet ab(a, b);
            for (std::size_t n = 1; n <= 16; ++n)
                for (const auto& letters : oracle::all_words(a, b, n)) {
                    if (!oracle::smooth(letters, a, b))
                        continue;
                    const Word w = oracle::to_word(ab, letters);
                    const auto d = derivative(w);
                    if (!d || !derivative(d.word()))
                        continue;
                    CHECK(balance_check(w));
                }
        }
        CHECK_THROWS_AS(balance_check(oracle::to_word(Alphabet(1, 2), {1, 2})), std::invalid_argument);
    }

    TEST_CASE("even-alphabet height bounds")
    {
        const Alphabet ab(2, 4);
        const auto table = gamma_table(ab, 60);
        std::vector<std::string> violations;
        CHECK(even_height_check(table, even_constants(ab), violations) == 0);
        CHECK(violations.empty());
    }

    TEST_CASE("Theorem 2 exponent")
    {
        CHECK(theorem2_exponent(Alphabet(2, 4)) == doctest::Approx(1.7712437491614221));
        CHECK(theorem2_exponent(Alphabet(2, 6)) == doctest::Approx(std::log(11.0) / std::log(4.0)));
        CHECK_THROWS_AS(theorem2_exponent(Alphabet(1, 2)), std::invalid_argument);
    }

    TEST_CASE("exponent fit recovers a planted power law")
    {
        const auto table = power_table(2.5, 256);
        const ExponentFit fit = fit_exponent(table);
        CHECK(fit.n_lo == 8);
        CHECK(fit.n_hi == 256);
        CHECK(fit.slope == doctest::Approx(2.5).epsilon(1e-4));
        CHECK(fit.intercept == doctest::Approx(std::log(5.0)).epsilon(1e-3));
        CHECK(fit.r2 > 0.999999);
        CHECK_THROWS_AS(fit_exponent(table, 8, 12), std::invalid_argument);
        CHECK(fit_exponent(table, 8, 300).n_hi == 256);
    }

    TEST_CASE("fit gap to log7/log3 shrinks for {2,4}")
    {
        const auto table = gamma_table(Alphabet(2, 4), 256);
        const double target = theorem2_exponent(Alphabet(2, 4));
        double previous = 1e9;
        for (std::size_t hi : {16, 32, 64, 128, 256}) {
            const double gap = std::abs(fit_exponent(table, 8, hi).slope - target);
            CHECK(gap <= previous);
            previous = gap;
        }
    }
}
