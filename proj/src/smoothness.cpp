#include "smoothwords/smoothness.hpp"

#include <mutex>
#include <stdexcept>

#include "smoothwords/operators.hpp"

namespace smoothwords {

std::optional<SmoothCache::Entry> SmoothCache::find(const Word& w) const
{
    Shard& shard = shard_for(w);
    std::shared_lock lock(shard.mutex);
    auto it = shard.entries.find(w);
    if (it == shard.entries.end())
        return std::nullopt;
    return it->second;
}

void SmoothCache::insert(const Word& w, Entry entry)
{
    Shard& shard = shard_for(w);
    std::unique_lock lock(shard.mutex);
    shard.entries.try_emplace(w, entry);
}

void SmoothCache::set_height(const Word& w, unsigned height)
{
    Shard& shard = shard_for(w);
    std::unique_lock lock(shard.mutex);
    auto [it, inserted] = shard.entries.try_emplace(w, Entry{true, height});
    if (!inserted && !it->second.height)
        it->second.height = height;
}

std::size_t SmoothCache::size() const
{
    std::size_t n = 0;
    for (const Shard& shard : _shards) {
        std::shared_lock lock(shard.mutex);
        n += shard.entries.size();
    }
    return n;
}

void SmoothCache::clear()
{
    for (Shard& shard : _shards) {
        std::unique_lock lock(shard.mutex);
        shard.entries.clear();
    }
}

namespace {

// |rho(w)| < |w| for every nonempty w, so the chain is at most |w| long.
// A non-decreasing step means the operator implementation is broken.
void check_progress(std::size_t before, std::size_t after)
{
    if (after >= before)
        throw std::logic_error("rho failed to shorten a nonempty word");
}

std::size_t total_length(const std::vector<Run>& runs)
{
    std::size_t n = 0;
    for (const Run& r : runs)
        n += r.length;
    return n;
}

bool is_smooth_uncached(const Word& w)
{
    thread_local std::vector<Run> current;
    thread_local std::vector<Run> next;
    current.assign(w.runs().begin(), w.runs().end());
    std::size_t length = w.size();
    while (!current.empty()) {
        if (detail::derive_runs(w.alphabet(), current, true, next))
            return false;
        const std::size_t next_length = total_length(next);
        check_progress(length, next_length);
        length = next_length;
        current.swap(next);
    }
    return true;
}

} // namespace

bool is_smooth(const Word& w, SmoothCache* cache)
{
    if (!cache)
        return is_smooth_uncached(w);

    std::vector<Word> visited;
    Word current = w;
    std::vector<Run> next;
    bool verdict = true;
    while (!current.empty()) {
        if (auto hit = cache->find(current)) {
            verdict = hit->smooth;
            break;
        }
        visited.push_back(current);
        if (detail::derive_runs(w.alphabet(), current.runs(), true, next)) {
            verdict = false;
            break;
        }
        Word derived = Word::from_runs(w.alphabet(), next);
        check_progress(current.size(), derived.size());
        current = std::move(derived);
    }
    for (const Word& v : visited)
        cache->insert(v, SmoothCache::Entry{verdict, std::nullopt});
    return verdict;
}

std::vector<Word> rho_chain(const Word& w)
{
    std::vector<Word> chain{w};
    while (!chain.back().empty()) {
        auto next = rho(chain.back());
        if (!next)
            break;
        check_progress(chain.back().size(), next.word().size());
        chain.push_back(next.word());
    }
    return chain;
}

std::vector<Word> derivative_chain(const Word& w)
{
    std::vector<Word> chain{w};
    while (!chain.back().empty()) {
        auto next = derivative(chain.back());
        if (!next)
            break;
        chain.push_back(next.word());
    }
    return chain;
}

unsigned height(const Word& w, SmoothCache* cache)
{
    if (w.empty())
        throw std::invalid_argument("height of the empty word is undefined");
    if (cache) {
        if (auto hit = cache->find(w); hit && hit->height)
            return *hit->height;
    }
    if (!is_smooth(w, cache))
        throw std::invalid_argument("height is only defined for smooth words");

    thread_local std::vector<Run> current;
    thread_local std::vector<Run> next;
    current.assign(w.runs().begin(), w.runs().end());
    unsigned k = 0;
    for (;;) {
        if (detail::derive_runs(w.alphabet(), current, false, next))
            throw std::logic_error("D-chain of a smooth word left the differentiable words");
        if (next.empty())
            break;
        ++k;
        current.swap(next);
    }
    if (cache)
        cache->set_height(w, k);
    return k;
}

unsigned rho_chain_length(const Word& w)
{
    const auto chain = rho_chain(w);
    if (!chain.back().empty())
        throw std::invalid_argument("rho-chain length is only defined for smooth words");
    return static_cast<unsigned>(chain.size() - 1);
}

std::vector<Letter> left_extensions(const Word& w, SmoothCache* cache)
{
    if (!is_smooth(w, cache))
        throw std::invalid_argument("left extensions are only defined for smooth words");
    std::vector<Letter> out;
    for (Letter x : {w.alphabet().a(), w.alphabet().b()}) {
        Word v = w;
        v.push_front(x);
        if (is_smooth(v, cache))
            out.push_back(x);
    }
    return out;
}

bool is_lfe(const Word& w, SmoothCache* cache)
{
    Word v = w;
    v.push_front(w.alphabet().a());
    if (!is_smooth(v, cache))
        return false;
    v = w;
    v.push_front(w.alphabet().b());
    return is_smooth(v, cache);
}

} // namespace smoothwords
