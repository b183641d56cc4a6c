#include <doctest.h>

#include <atomic>
#include <stdexcept>
#include <thread>

#include "oracle.hpp"
#include "smoothwords/operators.hpp"
#include "smoothwords/parallel.hpp"
#include "smoothwords/smoothness.hpp"
#include "smoothwords/word_io.hpp"

using namespace smoothwords;

namespace {

Word height_example()
{
    Word w(Alphabet(2, 3));
    for (auto [x, n] : std::initializer_list<std::pair<Letter, std::uint32_t>>{
             {3, 1}, {2, 3}, {3, 3}, {2, 3}, {3, 2}, {2, 2}, {3, 2}, {2, 3}, {3, 3}, {2, 3}, {3, 1}})
        w.push_back(x, n);
    return w;
}

} // namespace

TEST_SUITE("smooth")
{
    TEST_CASE("smoothness and height examples")
    {
        const Word hw = height_example();
        CHECK(is_smooth(hw));
        CHECK(height(hw) == 3);

        const Alphabet ab(1, 2);
        CHECK(is_smooth(Word(ab)));
        CHECK(is_smooth(parse_word(ab, "1")));
        CHECK(is_smooth(parse_word(ab, "2")));
        CHECK(height(parse_word(ab, "1")) == 0);
        CHECK(height(parse_word(ab, "22")) == 1);
        CHECK_THROWS_AS(height(Word(ab)), std::invalid_argument);
        CHECK_THROWS_AS(height(parse_word(ab, "222")), std::invalid_argument);
    }

    TEST_CASE("the word a^(b-1) b^a a^a b^(b-1)")
    {
        // Not smooth over {1,3} and {3,5}: rho stalls on an interior run.
        for (auto [a, b] : std::vector<std::pair<unsigned, unsigned>>{{1, 3}, {3, 5}}) {
            Word w(Alphabet(a, b));
            w.push_back(a, b - 1);
            w.push_back(b, a);
            w.push_back(a, a);
            w.push_back(b, b - 1);
            CHECK(derivative(w).ok());
            CHECK_FALSE(is_smooth(w));
        }
        // Over {2,4} closure turns it into 2^4 4^2 2^2 4^4 and rho reaches eps.
        const Word w24 = parse_word(Alphabet(2, 4), "2224422444");
        CHECK(format_word(derivative(w24).word()) == "22");
        CHECK(format_word(rho(w24).word()) == "4224");
        CHECK(is_smooth(w24));
    }

    TEST_CASE("smoothness, height and LFE agree with the naive oracle")
    {
        for (auto [a, b] : std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}}) {
            const Alphabet ab(a, b);
            SmoothCache cache;
            for (std::size_t n = 0; n <= 12; ++n) {
                for (const auto& letters : oracle::all_words(a, b, n)) {
                    const Word w = oracle::to_word(ab, letters);
                    const bool smooth = oracle::smooth(letters, a, b);
                    REQUIRE(is_smooth(w, &cache) == smooth);
                    CHECK(is_smooth(w) == smooth);
                    if (!smooth)
                        continue;
                    CHECK(is_lfe(w, &cache) == oracle::lfe(letters, a, b));
                    if (n > 0 && oracle::height(letters, a, b) >= 0)
                        CHECK(static_cast<int>(height(w, &cache)) == oracle::height(letters, a, b));
                }
            }
        }
    }

    TEST_CASE("chains")
    {
        const Word hw = height_example();
        const auto chain = derivative_chain(hw);
        REQUIRE(chain.size() == 5);
        CHECK(chain.front() == hw);
        CHECK(chain.back().empty());
        CHECK(format_word(chain[1]) == "333222333");

        const auto r = rho_chain(hw);
        CHECK(r.back().empty());
        CHECK(rho_chain_length(hw) == r.size() - 1);

        const Word stuck = parse_word(Alphabet(1, 2), "1121211");
        CHECK_FALSE(rho_chain(stuck).back().empty());
        CHECK_THROWS_AS(rho_chain_length(stuck), std::invalid_argument);
    }

    TEST_CASE("left extensions")
    {
        const Alphabet ab(1, 2);
        CHECK(left_extensions(parse_word(ab, "22")) == std::vector<Letter>{1});
        CHECK(left_extensions(Word(ab)) == std::vector<Letter>{1, 2});
        CHECK_THROWS_AS(left_extensions(parse_word(ab, "222")), std::invalid_argument);
        CHECK(is_lfe(Word(ab)));

        for (auto [a, b] : std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {1, 3}, {2, 3}, {2, 4}}) {
            const Alphabet alphabet(a, b);
            SmoothCache cache;
            for (std::size_t n = 0; n <= 11; ++n)
                for (const auto& letters : oracle::all_words(a, b, n)) {
                    const Word w = oracle::to_word(alphabet, letters);
                    if (!is_smooth(w, &cache))
                        continue;
                    const auto ext = left_extensions(w, &cache);
                    CHECK_FALSE(ext.empty());
                    std::vector<Letter> naive;
                    for (unsigned x : {a, b}) {
                        oracle::Letters v{x};
                        v.insert(v.end(), letters.begin(), letters.end());
                        if (oracle::smooth(v, a, b))
                            naive.push_back(x);
                    }
                    CHECK(ext == naive);
                }
        }
    }

    TEST_CASE("shared cache under concurrent readers and writers")
    {
        const Alphabet ab(2, 3);
        const auto words = oracle::all_words(2, 3, 14);
        SmoothCache cache;
        std::atomic<std::size_t> mismatches{0};
        parallel_for(words.size(), 4, [&](std::size_t i) {
            const Word w = oracle::to_word(ab, words[i]);
            if (is_smooth(w, &cache) != oracle::smooth(words[i], 2, 3))
                ++mismatches;
        });
        CHECK(mismatches == 0);
        CHECK(cache.size() > 0);
        cache.clear();
        CHECK(cache.size() == 0);
    }
}
