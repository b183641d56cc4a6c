#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "oracle.hpp"
#include "smoothwords/errors.hpp"
#include "smoothwords/lfe.hpp"
#include "smoothwords/operators.hpp"
#include "smoothwords/smoothness.hpp"
#include "smoothwords/word_io.hpp"

using namespace smoothwords;

namespace {

std::uint64_t formula(unsigned b, unsigned j)
{
    std::uint64_t v = 4 * (b - 1);
    for (unsigned i = 1; i < j; ++i)
        v *= 2 * b - 1;
    return v;
}

std::set<oracle::Letters> as_set(const std::vector<Word>& words)
{
    std::set<oracle::Letters> out;
    for (const Word& w : words)
        out.insert(oracle::to_letters(w));
    return out;
}

} // namespace

TEST_SUITE("lfe-enum")
{
    TEST_CASE("expansion of the empty word")
    {
        CHECK(lfe_expand(Word(Alphabet(1, 2))).size() == 4);
        CHECK(lfe_expand(Word(Alphabet(2, 4))).size() == 12);
        CHECK(lfe_expand(Word(Alphabet(2, 3))).size() == 8);
        CHECK_THROWS_AS(lfe_expand(parse_word(Alphabet(1, 2), "222")), std::invalid_argument);
    }

    TEST_CASE("LFE words ending in b over {2,3} have six LFE primitives")
    {
        const Alphabet ab(2, 3);
        SmoothCache cache;
        std::size_t seen = 0;
        for (std::size_t n = 1; n <= 9; ++n)
            for (const auto& letters : oracle::all_words(2, 3, n)) {
                if (letters.back() != 3 || !oracle::lfe(letters, 2, 3))
                    continue;
                const Word w = oracle::to_word(ab, letters);
                const auto prims = lfe_expand(w, &cache);
                CHECK(prims.size() == 6);
                for (const Word& v : prims) {
                    CHECK(oracle::lfe(oracle::to_letters(v), 2, 3));
                    CHECK(oracle::derivative(oracle::to_letters(v), 2, 3) == letters);
                }
                ++seen;
            }
        CHECK(seen > 0);
    }

    TEST_CASE("expansion equals the LFE preimages")
    {
        for (auto [a, b] : std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {1, 3}, {2, 3}, {2, 4}}) {
            const Alphabet ab(a, b);
            SmoothCache cache;
            for (std::size_t n = 0; n <= 4; ++n)
                for (const auto& letters : oracle::all_words(a, b, n)) {
                    if (!oracle::lfe(letters, a, b))
                        continue;
                    std::set<oracle::Letters> naive;
                    for (const Word& v : primitives(oracle::to_word(ab, letters)))
                        if (oracle::lfe(oracle::to_letters(v), a, b))
                            naive.insert(oracle::to_letters(v));
                    CHECK(as_set(lfe_expand(oracle::to_word(ab, letters), &cache)) == naive);
                }
        }
    }

    TEST_CASE("level sizes for alphabets with b = a + 1")
    {
        CHECK(p_level(Alphabet(1, 2), 1).words.size() == 4);
        CHECK(p_level(Alphabet(1, 2), 3).words.size() == 36);
        CHECK(p_level(Alphabet(2, 3), 2).words.size() == 40);
        CHECK(p_level(Alphabet(2, 3), 3).words.size() == 200);
        for (unsigned j = 1; j <= 6; ++j)
            CHECK(p_level(Alphabet(1, 2), j).words.size() == formula(2, j));
    }

    TEST_CASE("level sizes when b > a + 1")
    {
        // Under rho-smoothness closure pads the closing run, so fewer
        // primitives survive than 2b-1 per word.
        CHECK(p_level(Alphabet(2, 4), 1).words.size() == 12);
        CHECK(p_level(Alphabet(2, 4), 2).words.size() == 74);
        CHECK(p_level(Alphabet(1, 3), 2).words.size() == 34);
        CHECK(p_level(Alphabet(1, 3), 3).words.size() == 140);
        CHECK(p_level(Alphabet(2, 4), 4).words.size() < formula(4, 4));
    }

    TEST_CASE("levels partition LFE words by D-steps to eps")
    {
        for (auto [a, b] : std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {1, 3}, {2, 3}, {2, 4}}) {
            const Alphabet ab(a, b);
            constexpr std::size_t kMaxLen = 12;
            // naive: level = number of D applications to reach eps
            std::map<int, std::set<oracle::Letters>> naive;
            for (std::size_t n = 1; n <= kMaxLen; ++n)
                for (const auto& letters : oracle::all_words(a, b, n))
                    if (oracle::lfe(letters, a, b))
                        naive[oracle::height(letters, a, b) + 1].insert(letters);

            const auto levels = p_levels(ab, 3);
            for (const LfeLevel& level : levels) {
                std::set<oracle::Letters> bounded;
                for (const Word& w : level.words) {
                    CHECK(lfe_level_of(w) == level.j);
                    if (w.size() <= kMaxLen)
                        bounded.insert(oracle::to_letters(w));
                }
                CHECK(bounded == naive[static_cast<int>(level.j)]);
                CHECK(std::is_sorted(level.words.begin(), level.words.end()));
            }
        }
    }

    TEST_CASE("levels are closed under complement")
    {
        for (auto [a, b] : std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {1, 3}, {2, 4}}) {
            for (const LfeLevel& level : p_levels(Alphabet(a, b), 3)) {
                std::set<Word> words(level.words.begin(), level.words.end());
                for (const Word& w : level.words)
                    CHECK(words.count(complement(w)) == 1);
            }
        }
    }

    TEST_CASE("constructive levels equal the filter-based oracle")
    {
        const auto check = [](const Alphabet& ab, unsigned j) {
            const auto built = p_levels(ab, j);
            const auto filtered = p_levels_oracle(ab, j);
            REQUIRE(built.size() == filtered.size());
            for (std::size_t i = 0; i < built.size(); ++i) {
                CHECK(built[i].j == filtered[i].j);
                CHECK(built[i].words == filtered[i].words);
            }
        };
        check(Alphabet(1, 2), 5);
        check(Alphabet(2, 3), 3);
        check(Alphabet(1, 3), 3);
        check(Alphabet(2, 4), 3);

        CHECK(p_level_oracle(Alphabet(1, 2), 1, 12).words == p_level(Alphabet(1, 2), 1).words);
        CHECK(p_level_oracle(Alphabet(2, 3), 2, 20).words == p_level(Alphabet(2, 3), 2).words);
        CHECK_THROWS_AS(p_level_oracle(Alphabet(2, 3), 3, 5), std::invalid_argument);
    }

    TEST_CASE("LF_k")
    {
        const auto lf0 = lf_k(Alphabet(1, 2), 0);
        REQUIRE(lf0.words.size() == 1);
        CHECK(lf0.words.front().empty());

        for (auto [a, b] : std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {2, 5}}) {
            LfeFrontier frontier(Alphabet(a, b));
            for (std::size_t k = 1; k <= 12; ++k) {
                const auto& cls = frontier.advance();
                CHECK(cls.k == k);
                std::set<oracle::Letters> naive;
                for (const auto& letters : oracle::all_words(a, b, k))
                    if (oracle::lfe(letters, a, b))
                        naive.insert(letters);
                CHECK(as_set(cls.words) == naive);
            }
        }
    }

    TEST_CASE("resource guard")
    {
        EnumerationOptions tiny;
        tiny.max_states = 50;
        CHECK_THROWS_AS(p_level(Alphabet(2, 3), 3, tiny), ResourceLimitError);
        tiny.max_states = 4;
        CHECK_THROWS_AS(lf_k(Alphabet(2, 3), 30, tiny), ResourceLimitError);
    }

    TEST_CASE("thread count does not change the result")
    {
        EnumerationOptions one;
        EnumerationOptions four;
        four.threads = 4;
        CHECK(p_level(Alphabet(2, 4), 3, one).words == p_level(Alphabet(2, 4), 3, four).words);
        CHECK(lf_k(Alphabet(1, 3), 20, one).words == lf_k(Alphabet(1, 3), 20, four).words);
    }
}
