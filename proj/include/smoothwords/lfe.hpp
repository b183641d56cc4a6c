// lfe.hpp -- enumeration of left fully extendable (LFE) words
//
// Two independent routes produce the height levels P^j(eps):
//   - p_level expands each LFE word into its LFE primitives using the
//     explicit prefix/suffix shapes;
//   - p_level_oracle enumerates LFE words length by length and keeps
//     those whose D-chain has exactly j steps through LFE words.

#pragma once

#include <cstddef>
#include <vector>

#include "smoothwords/smoothness.hpp"
#include "smoothwords/word.hpp"

namespace smoothwords {

struct EnumerationOptions
{
    /// Hard cap on the size of any materialized level or frontier.
    std::size_t max_states = 2'000'000;
    unsigned threads = 1;
    /// Optional shared memo; enumerations create a private one when null.
    SmoothCache* cache = nullptr;
};

/// P^j(eps): LFE words whose D-chain reaches eps in exactly j steps.
struct LfeLevel
{
    unsigned j = 0;
    std::vector<Word> words; ///< lexicographic order
};

/// LF_k: LFE words of length k.
struct LfeLengthClass
{
    std::size_t k = 0;
    std::vector<Word> words; ///< lexicographic order
};

/// LFE primitives of an LFE word: the candidates
/// other(beta)^a . Delta_beta^{-1}(w) . gamma^j (j from 0 when w ends in b,
/// from 1 when it ends in a) that pass is_lfe. For w = eps the candidates
/// are x^i and x^a y^j with 1 <= i, j < b. Throws `std::invalid_argument`
/// when w is not LFE and `std::logic_error` if a candidate does not derive
/// back to w.
std::vector<Word> lfe_expand(const Word& w, SmoothCache* cache = nullptr);

/// Levels P^1(eps) .. P^j(eps). Throws `ResourceLimitError` before a level
/// larger than `max_states` would be built.
std::vector<LfeLevel> p_levels(const Alphabet& alphabet, unsigned j, const EnumerationOptions& options = {});

LfeLevel p_level(const Alphabet& alphabet, unsigned j, const EnumerationOptions& options = {});

/// Filter-based P^j(eps) over all LFE words of length <= max_len. Throws
/// `std::invalid_argument` when some LFE word of length max_len still has
/// level <= j, i.e. level-j words may exist beyond the bound.
LfeLevel p_level_oracle(const Alphabet& alphabet, unsigned j, std::size_t max_len,
                        const EnumerationOptions& options = {});

/// Filter-based P^1(eps) .. P^{j_max}(eps). Grows LF_k until every LFE
/// word of the current length has level > j_max; levels never drop along
/// prefixes, so no longer word can belong to a requested level.
std::vector<LfeLevel> p_levels_oracle(const Alphabet& alphabet, unsigned j_max,
                                      const EnumerationOptions& options = {});

/// Number of D steps from an LFE word down to eps, verifying every
/// intermediate word is LFE. Throws `std::logic_error` otherwise.
unsigned lfe_level_of(const Word& w, SmoothCache* cache = nullptr);

/// Length-by-length generator of LF_0, LF_1, ... . Prefixes of LFE words
/// are LFE, so LF_k is the set of one-letter right extensions of LF_{k-1}
/// that are LFE.
class LfeFrontier
{
public:
    explicit LfeFrontier(Alphabet alphabet, EnumerationOptions options = {});

    const LfeLengthClass& current() const noexcept { return _current; }
    /// Advances to LF_{k+1}.
    const LfeLengthClass& advance();

private:
    Alphabet _alphabet;
    EnumerationOptions _options;
    SmoothCache _own_cache;
    LfeLengthClass _current;
};

LfeLengthClass lf_k(const Alphabet& alphabet, std::size_t k, const EnumerationOptions& options = {});

} // namespace smoothwords
