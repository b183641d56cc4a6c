// word.hpp -- two-letter alphabets and run-length encoded finite words

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace smoothwords {

/// Letters are positive integers; a letter doubles as a run length under D.
using Letter = std::uint32_t;

/// An ordered pair of positive integers a < b.
class Alphabet
{
public:
    /// Throws `std::invalid_argument` unless 1 <= a < b.
    Alphabet(std::int64_t a, std::int64_t b);

    Letter a() const noexcept { return _a; }
    Letter b() const noexcept { return _b; }

    /// True iff both letters are even.
    bool is_even() const noexcept { return _a % 2 == 0 && _b % 2 == 0; }

    bool contains(Letter x) const noexcept { return x == _a || x == _b; }

    /// The complementary letter: a <-> b. Throws for letters outside the alphabet.
    Letter other(Letter x) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;
    friend auto operator<=>(const Alphabet&, const Alphabet&) = default;

private:
    Letter _a;
    Letter _b;
};

/// A maximal block letter^length.
struct Run
{
    Letter letter;
    std::uint32_t length;

    friend bool operator==(const Run&, const Run&) = default;
};

/// A finite word over a two-letter alphabet, stored as its run list.
///
/// The run list is canonical: lengths are positive and adjacent runs carry
/// distinct letters, so equality of run lists is equality of words.
/// Ordering is lexicographic on the letter sequence (alphabet first).
class Word
{
public:
    /// The empty word over `alphabet`.
    explicit Word(Alphabet alphabet) : _alphabet(alphabet) {}

    /// Builds a word from runs, merging adjacent equal letters and dropping
    /// zero-length runs. Throws `std::invalid_argument` for foreign letters.
    static Word from_runs(Alphabet alphabet, std::span<const Run> runs);

    const Alphabet& alphabet() const noexcept { return _alphabet; }
    std::span<const Run> runs() const noexcept { return _runs; }
    std::size_t run_count() const noexcept { return _runs.size(); }
    std::size_t size() const noexcept { return _size; }
    bool empty() const noexcept { return _size == 0; }

    Letter front() const;
    Letter back() const;

    /// Materialized letter sequence.
    std::vector<Letter> letters() const;

    /// The factor of length `len` starting at letter offset `pos`.
    Word slice(std::size_t pos, std::size_t len) const;

    /// Appends `count` copies of `x` (no-op for count 0).
    void push_back(Letter x, std::uint32_t count = 1);
    /// Prepends `count` copies of `x`.
    void push_front(Letter x, std::uint32_t count = 1);

    friend bool operator==(const Word& x, const Word& y)
    {
        return x._alphabet == y._alphabet && x._runs == y._runs;
    }
    friend std::strong_ordering operator<=>(const Word& x, const Word& y);

private:
    Alphabet _alphabet;
    std::vector<Run> _runs;
    std::size_t _size = 0;
};

/// Run statistics of a nonempty word: r(w), first/last run letters and lengths.
struct RunProfile
{
    std::size_t r;
    Letter fr_letter;
    Letter lr_letter;
    std::uint32_t lfr;
    std::uint32_t llr;
};

/// Canonical word from a letter sequence. Throws `std::invalid_argument` for
/// letters outside the alphabet.
Word make_word(const Alphabet& alphabet, std::span<const Letter> letters);

/// Throws `std::invalid_argument` on the empty word.
RunProfile profile(const Word& w);

Word complement(const Word& w);
Word reversal(const Word& w);

/// Concatenation; both operands must share an alphabet.
Word concat(const Word& x, const Word& y);

/// Occurrences of `letter`. Throws for letters outside the alphabet.
std::size_t count(const Word& w, Letter letter);

/// True iff `u` occurs as a contiguous factor of `w`.
bool is_factor(const Word& u, const Word& w);

struct WordHash
{
    std::size_t operator()(const Word& w) const noexcept;
};

} // namespace smoothwords

template <>
struct std::hash<smoothwords::Word> : smoothwords::WordHash
{
};
