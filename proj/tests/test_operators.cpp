#include <doctest.h>

#include <set>
#include <stdexcept>

#include "oracle.hpp"
#include "smoothwords/operators.hpp"
#include "smoothwords/word_io.hpp"

using namespace smoothwords;

namespace {

const std::vector<std::pair<unsigned, unsigned>> kAlphabets{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}};

Word w_of(unsigned a, unsigned b, const char* text)
{
    return parse_word(Alphabet(a, b), text);
}

std::vector<Letter> expand(std::initializer_list<std::pair<Letter, std::size_t>> runs)
{
    std::vector<Letter> out;
    for (auto [x, n] : runs)
        out.insert(out.end(), n, x);
    return out;
}

} // namespace

TEST_SUITE("operators")
{
    TEST_CASE("closure examples")
    {
        CHECK(format_word(closure(w_of(1, 3, "3311133313133311133"))) == "333111333131333111333");
        CHECK(format_word(closure(w_of(1, 3, "3313133311"))) == "333131333111");
        CHECK(closure(Word(Alphabet(2, 4))).empty());
        CHECK_THROWS_AS(closure(w_of(1, 2, "2221")), std::invalid_argument);
        // one run is both first and last: padded once
        CHECK(format_word(closure(w_of(1, 3, "11"))) == "111");
    }

    TEST_CASE("closure is the identity when b = a + 1")
    {
        for (std::size_t n = 0; n <= 10; ++n)
            for (const auto& letters : oracle::all_words(2, 3, n)) {
                const Word w = oracle::to_word(Alphabet(2, 3), letters);
                if (derivative(w).ok())
                    CHECK(closure(w) == w);
            }
    }

    TEST_CASE("derivative examples")
    {
        const Alphabet ab(2, 3);
        Word hw(ab);
        for (auto [x, n] : std::initializer_list<std::pair<Letter, std::uint32_t>>{
                 {3, 1}, {2, 3}, {3, 3}, {2, 3}, {3, 2}, {2, 2}, {3, 2}, {2, 3}, {3, 3}, {2, 3}, {3, 1}})
            hw.push_back(x, n);
        CHECK(format_word(derivative(hw).word()) == "333222333");

        const auto too_long = derivative(w_of(2, 4, "2222444444"));
        REQUIRE_FALSE(too_long.ok());
        CHECK(too_long.reason() == NotDifferentiable::RunTooLong);
        CHECK_THROWS_AS(too_long.word(), std::logic_error);

        const auto interior = derivative(w_of(1, 3, "31133"));
        REQUIRE_FALSE(interior.ok());
        CHECK(interior.reason() == NotDifferentiable::InteriorRunNotInAlphabet);

        CHECK(format_word(derivative(w_of(1, 2, "22")).word()) == "2");
        CHECK(derivative(w_of(1, 2, "2")).word().empty());
        CHECK(format_word(derivative(w_of(2, 4, "2224422444")).word()) == "22");
        CHECK(derivative(Word(ab)).word().empty());
    }

    TEST_CASE("D, closure and rho agree with the naive oracle")
    {
        for (auto [a, b] : kAlphabets) {
            const Alphabet ab(a, b);
            for (std::size_t n = 0; n <= 10; ++n) {
                for (const auto& letters : oracle::all_words(a, b, n)) {
                    const Word w = oracle::to_word(ab, letters);
                    const auto d = derivative(w);
                    const auto d_naive = oracle::derivative(letters, a, b);
                    REQUIRE(d.ok() == d_naive.has_value());
                    if (d)
                        CHECK(oracle::to_letters(d.word()) == *d_naive);

                    const auto c_naive = oracle::closure(letters, a, b);
                    if (c_naive)
                        CHECK(oracle::to_letters(closure(w)) == *c_naive);
                    else
                        CHECK_THROWS_AS(closure(w), std::invalid_argument);

                    const auto r = rho(w);
                    const auto r_naive = oracle::rho(letters, a, b);
                    REQUIRE(r.ok() == r_naive.has_value());
                    if (r)
                        CHECK(oracle::to_letters(r.word()) == *r_naive);
                }
            }
        }
    }

    TEST_CASE("inverse derivative")
    {
        CHECK(format_word(inverse_derivative(w_of(1, 2, "21"), 2)) == "221");
        CHECK(format_word(inverse_derivative(w_of(1, 3, "33"), 3)) == "333111");
        CHECK(inverse_derivative(Word(Alphabet(1, 3)), 1).empty());
        CHECK_THROWS(inverse_derivative(w_of(1, 3, "33"), 2));

        // the run lengths of the expansion read back the input
        for (std::size_t n = 1; n <= 8; ++n)
            for (const auto& letters : oracle::all_words(2, 5, n)) {
                const Word u = oracle::to_word(Alphabet(2, 5), letters);
                for (Letter start : {2u, 5u}) {
                    const auto expansion = oracle::runs(oracle::to_letters(inverse_derivative(u, start)));
                    REQUIRE(expansion.size() == letters.size());
                    CHECK(expansion.front().first == start);
                    for (std::size_t i = 0; i < letters.size(); ++i)
                        CHECK(expansion[i].second == letters[i]);
                }
            }
    }

    TEST_CASE("primitives match exhaustive preimage search")
    {
        for (auto [a, b] : std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {1, 3}, {2, 3}}) {
            const Alphabet ab(a, b);
            for (std::size_t n = 0; n <= 3; ++n) {
                for (const auto& target : oracle::all_words(a, b, n)) {
                    std::size_t sum = 0;
                    for (unsigned x : target)
                        sum += x;
                    // a preimage is the expansion plus at most b-1 letters per side
                    const std::size_t longest = sum + 2 * (b - 1);
                    std::set<oracle::Letters> naive;
                    for (std::size_t len = 1; len <= longest; ++len)
                        for (const auto& v : oracle::all_words(a, b, len)) {
                            const auto d = oracle::derivative(v, a, b);
                            if (d && *d == target)
                                naive.insert(v);
                        }
                    std::set<oracle::Letters> library;
                    for (const Word& v : primitives(oracle::to_word(ab, target)))
                        library.insert(oracle::to_letters(v));
                    CHECK(library == naive);
                    CHECK(library.size() <= 2 * b * b);
                }
            }
        }
    }

    TEST_CASE("primitives of the one-letter word b")
    {
        for (auto [a, b] : kAlphabets) {
            const Alphabet ab(a, b);
            Word single(ab);
            single.push_back(b);
            const auto prims = primitives(single);
            CHECK(prims.size() == 2 * b * b);
            std::size_t shortest = prims.front().size();
            for (const Word& p : prims)
                shortest = std::min(shortest, p.size());
            CHECK(shortest == b);
            std::vector<std::string> minimal;
            for (const Word& p : prims)
                if (p.size() == shortest)
                    minimal.push_back(format_word(p));
            CHECK(minimal == std::vector<std::string>{std::string(b, char('0' + a)), std::string(b, char('0' + b))});
        }
    }

    TEST_CASE("generic run-length derivative over three letters")
    {
        CHECK(generic_run_length_derivative(expand({{6, 1}, {4, 2}, {2, 6}, {6, 6}, {4, 6}, {6, 6}, {2, 6}, {4, 6}}), 6)
              == expand({{2, 1}, {6, 6}}));
        CHECK(generic_run_length_derivative(expand({{4, 1}, {2, 6}, {6, 6}, {4, 6}, {6, 6}, {2, 6}, {4, 6}}), 6)
              == expand({{6, 6}}));
        CHECK(generic_run_length_derivative(expand({{4, 1}, {2, 6}, {6, 6}, {4, 6}, {6, 6}, {2, 6}}), 6)
              == expand({{6, 5}}));
        CHECK(generic_run_length_derivative(expand({{4, 6}, {2, 2}, {6, 2}}), 6) == expand({{6, 1}, {2, 1}}));
        CHECK(generic_run_length_derivative(
                  expand({{2, 6}, {6, 6}, {2, 6}, {6, 6}, {2, 6}, {6, 6}, {4, 4}, {6, 2}}), 6)
              == expand({{6, 6}, {4, 1}}));
        CHECK(generic_run_length_derivative(expand({{2, 6}, {4, 6}, {2, 2}, {6, 2}}), 6)
              == expand({{6, 2}, {2, 1}}));
        CHECK(generic_run_length_derivative(expand({{2, 2}, {6, 2}, {4, 6}}), 6) == expand({{2, 1}, {6, 1}}));
        CHECK(generic_run_length_derivative(
                  expand({{4, 4}, {2, 2}, {6, 2}, {2, 2}, {6, 2}, {2, 2}, {6, 2}, {4, 6}}), 6)
              == expand({{2, 6}, {6, 1}}));
        CHECK(generic_run_length_derivative(expand({{2, 2}, {4, 2}, {6, 2}}), 6) == expand({{2, 1}}));
        CHECK(generic_run_length_derivative({}, 6).empty());
        CHECK_THROWS_AS(generic_run_length_derivative(expand({{2, 7}}), 6), std::invalid_argument);
    }

    TEST_CASE("generic derivative agrees with D on two-letter words")
    {
        for (std::size_t n = 0; n <= 9; ++n)
            for (const auto& letters : oracle::all_words(1, 3, n)) {
                const auto d = oracle::derivative(letters, 1, 3);
                bool too_long = false;
                for (const auto& run : oracle::runs(letters))
                    too_long = too_long || run.second > 3;
                if (too_long || !d)
                    continue;
                const std::vector<Letter> in(letters.begin(), letters.end());
                const auto g = generic_run_length_derivative(in, 3);
                CHECK(oracle::Letters(g.begin(), g.end()) == *d);
            }
    }
}
