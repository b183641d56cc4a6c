// smoothness.hpp -- smooth (C-infinity) words, heights and left extensions

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "smoothwords/word.hpp"

namespace smoothwords {

/// Memo of smoothness verdicts keyed by canonical word.
///
/// Safe for concurrent use: the map is split into shards, each behind its
/// own reader/writer lock. Inserts are insert-if-absent and entries never
/// change once written.
class SmoothCache
{
public:
    struct Entry
    {
        bool smooth = false;
        std::optional<unsigned> height;
    };

    std::optional<Entry> find(const Word& w) const;
    void insert(const Word& w, Entry entry);
    /// Adds a height to an existing smooth entry (or creates one).
    void set_height(const Word& w, unsigned height);
    std::size_t size() const;
    void clear();

private:
    static constexpr std::size_t kShards = 64; // index uses the top 6 hash bits
    struct Shard
    {
        mutable std::shared_mutex mutex;
        std::unordered_map<Word, Entry, WordHash> entries;
    };
    Shard& shard_for(const Word& w) const
    {
        return _shards[(WordHash{}(w) * 0x9e3779b97f4a7c15ULL) >> 58];
    }

    mutable std::array<Shard, kShards> _shards;
};

/// True iff iterating rho reaches the empty word.
bool is_smooth(const Word& w, SmoothCache* cache = nullptr);

/// The iterates w, rho(w), rho^2(w), ... up to and including the empty word
/// or the last word where rho is defined.
std::vector<Word> rho_chain(const Word& w);

/// The iterates w, D(w), D^2(w), ... as far as D is defined.
std::vector<Word> derivative_chain(const Word& w);

/// Smallest k with D^{k+1}(w) empty. Throws `std::invalid_argument` for the
/// empty word or a word that is not smooth.
unsigned height(const Word& w, SmoothCache* cache = nullptr);

/// Number of rho applications needed to reach the empty word. Throws for
/// words that are not smooth.
unsigned rho_chain_length(const Word& w);

/// Letters x with x.w smooth. Throws `std::invalid_argument` if w is not smooth.
std::vector<Letter> left_extensions(const Word& w, SmoothCache* cache = nullptr);

/// Left fully extendable: both a.w and b.w are smooth.
bool is_lfe(const Word& w, SmoothCache* cache = nullptr);

} // namespace smoothwords
