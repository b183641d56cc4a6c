// kolakoski.hpp -- self-run-length-encoding sequences over {a,b}
//
// Over {1,2} starting with 2 this is the Kolakoski word
// 22 11 2 1 22 1 22 11 2 11 22 ... . Over other alphabets the same rule
// is applied: runs alternate letters starting with the first letter, and
// the k-th run has length equal to the k-th letter of the sequence.

#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "smoothwords/ratio.hpp"
#include "smoothwords/word.hpp"

namespace smoothwords {

class KolakoskiStream
{
public:
    /// Throws `std::invalid_argument` if `first_letter` is not in the alphabet.
    KolakoskiStream(Alphabet alphabet, Letter first_letter);

    const Alphabet& alphabet() const noexcept { return _alphabet; }
    Letter first_letter() const noexcept { return _first; }

    /// Ensures at least n letters are generated.
    void extend_to(std::size_t n);
    /// The first n letters.
    Word prefix(std::size_t n);
    const std::vector<Letter>& letters() const noexcept { return _letters; }

private:
    Alphabet _alphabet;
    Letter _first;
    std::vector<Letter> _letters;
    std::size_t _run = 0; ///< next run to write; its length is _letters[_run]
};

/// First n letters, starting with b unless `first_letter` is given.
/// Throws `std::invalid_argument` for n == 0.
Word kolakoski(const Alphabet& alphabet, std::size_t n);
Word kolakoski(const Alphabet& alphabet, Letter first_letter, std::size_t n);

/// True iff the run lengths of `prefix`, without its last run, spell a
/// prefix of `prefix`.
bool self_encoding_holds(const Word& prefix);

/// |prefix|_letter / |prefix|. Throws `std::invalid_argument` on the empty word.
Ratio density(const Word& prefix, Letter letter);

/// max over L in [min_length, |w|] of the density of `letter` in the
/// length-L prefix. Throws `std::invalid_argument` if min_length is 0 or
/// exceeds |w|.
Ratio max_prefix_density(const Word& w, Letter letter, std::size_t min_length);

/// True iff every factor of length `window` is smooth. Throws
/// `std::invalid_argument` unless 1 <= window <= |prefix|.
bool factor_smoothness_check(const Word& prefix, std::size_t window);

/// {n, density_a, density_b, max_window_density, min_length} where the
/// densities are of letter a and max_window_density is max_prefix_density
/// of letter a; ratios are written as "p/q" strings alongside doubles.
nlohmann::json kolakoski_stats(const Word& prefix, std::size_t min_length);

} // namespace smoothwords
