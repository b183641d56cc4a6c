#include "smoothwords/lfe.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "smoothwords/errors.hpp"
#include "smoothwords/operators.hpp"
#include "smoothwords/parallel.hpp"

namespace smoothwords {

namespace {

void verify_primitive(const Word& v, const Word& parent)
{
    const auto d = derivative(v);
    if (!d.ok() || d.word() != parent)
        throw std::logic_error("constructed word is not a primitive of its parent");
}

std::size_t expansion_size(const Word& w)
{
    const std::size_t b = w.alphabet().b();
    if (w.empty())
        return 4 * (b - 1);
    return w.back() == w.alphabet().b() ? 2 * b : 2 * (b - 1);
}

} // namespace

std::vector<Word> lfe_expand(const Word& w, SmoothCache* cache)
{
    if (!is_lfe(w, cache))
        throw std::invalid_argument("lfe_expand requires an LFE word");
    const Alphabet& alphabet = w.alphabet();
    const Letter a = alphabet.a();
    const Letter b = alphabet.b();
    std::vector<Word> out;
    out.reserve(expansion_size(w));

    if (w.empty()) {
        // x^i for 1 <= i < b, and x^a y^j for 1 <= j < b
        for (Letter x : {a, b}) {
            const Letter y = alphabet.other(x);
            for (std::uint32_t i = 1; i < b; ++i) {
                Word v(alphabet);
                v.push_back(x, i);
                out.push_back(std::move(v));
            }
            for (std::uint32_t j = 1; j < b; ++j) {
                Word v(alphabet);
                v.push_back(x, a);
                v.push_back(y, j);
                out.push_back(std::move(v));
            }
        }
    } else {
        // A closing run of length 0 is allowed only when the last kept run
        // already has length b.
        const std::uint32_t first_j = w.back() == b ? 0 : 1;
        for (Letter beta : {a, b}) {
            const Word core = inverse_derivative(w, beta);
            const Letter closing = alphabet.other(core.back());
            for (std::uint32_t j = first_j; j < b; ++j) {
                Word v(alphabet);
                v.push_back(alphabet.other(beta), a);
                v = concat(v, core);
                v.push_back(closing, j);
                out.push_back(std::move(v));
            }
        }
    }
    // When b > a+1 closure may pad the closing run of x.v, so not every
    // candidate survives the LFE test.
    for (const Word& v : out)
        verify_primitive(v, w);
    std::erase_if(out, [&](const Word& v) { return !is_lfe(v, cache); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LfeLevel> p_levels(const Alphabet& alphabet, unsigned j, const EnumerationOptions& options)
{
    if (j == 0)
        throw std::invalid_argument("level index must be positive");
    SmoothCache own;
    SmoothCache* cache = options.cache ? options.cache : &own;

    std::vector<LfeLevel> levels;
    const Word empty(alphabet);
    if (expansion_size(empty) > options.max_states)
        throw ResourceLimitError("level 1 exceeds the state cap");
    levels.push_back({1, lfe_expand(empty, cache)});

    for (unsigned level = 2; level <= j; ++level) {
        const auto& parents = levels.back().words;
        std::size_t expected = 0;
        for (const Word& w : parents)
            expected += expansion_size(w);
        if (expected > options.max_states)
            throw ResourceLimitError("level " + std::to_string(level) + " would hold " + std::to_string(expected)
                                     + " words, above the cap of " + std::to_string(options.max_states));
        std::vector<std::vector<Word>> children(parents.size());
        parallel_for(parents.size(), options.threads,
                     [&](std::size_t i) { children[i] = lfe_expand(parents[i], cache); });
        LfeLevel next{level, {}};
        next.words.reserve(expected);
        for (auto& group : children)
            for (Word& v : group)
                next.words.push_back(std::move(v));
        std::sort(next.words.begin(), next.words.end());
        next.words.erase(std::unique(next.words.begin(), next.words.end()), next.words.end());
        levels.push_back(std::move(next));
    }
    return levels;
}

LfeLevel p_level(const Alphabet& alphabet, unsigned j, const EnumerationOptions& options)
{
    auto levels = p_levels(alphabet, j, options);
    return std::move(levels.back());
}

unsigned lfe_level_of(const Word& w, SmoothCache* cache)
{
    Word current = w;
    unsigned steps = 0;
    while (!current.empty()) {
        if (!is_lfe(current, cache))
            throw std::logic_error("D-chain of an LFE word left the LFE words");
        auto d = derivative(current);
        if (!d)
            throw std::logic_error("LFE word is not differentiable");
        current = d.word();
        ++steps;
    }
    return steps;
}

LfeLevel p_level_oracle(const Alphabet& alphabet, unsigned j, std::size_t max_len, const EnumerationOptions& options)
{
    if (j == 0)
        throw std::invalid_argument("level index must be positive");
    SmoothCache own;
    EnumerationOptions frontier_options = options;
    if (!frontier_options.cache)
        frontier_options.cache = &own;
    LfeFrontier frontier(alphabet, frontier_options);

    LfeLevel result{j, {}};
    for (std::size_t k = 1; k <= max_len; ++k) {
        const auto& words = frontier.advance().words;
        std::vector<unsigned> levels(words.size());
        parallel_for(words.size(), options.threads,
                     [&](std::size_t i) { levels[i] = lfe_level_of(words[i], frontier_options.cache); });
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (levels[i] == j)
                result.words.push_back(words[i]);
            if (k == max_len && levels[i] <= j)
                throw std::invalid_argument("length bound " + std::to_string(max_len)
                                            + " is too small for level " + std::to_string(j));
        }
    }
    std::sort(result.words.begin(), result.words.end());
    return result;
}

std::vector<LfeLevel> p_levels_oracle(const Alphabet& alphabet, unsigned j_max, const EnumerationOptions& options)
{
    if (j_max == 0)
        throw std::invalid_argument("level index must be positive");
    SmoothCache own;
    EnumerationOptions frontier_options = options;
    if (!frontier_options.cache)
        frontier_options.cache = &own;
    LfeFrontier frontier(alphabet, frontier_options);

    // Levels of all LFE words seen so far. D(w) of an LFE word is a shorter
    // LFE word, so its level is already known when w is reached.
    std::unordered_map<Word, unsigned, WordHash> known{{Word(alphabet), 0u}};
    std::vector<LfeLevel> levels;
    for (unsigned j = 1; j <= j_max; ++j)
        levels.push_back({j, {}});
    for (;;) {
        const auto& words = frontier.advance().words;
        std::vector<unsigned> level(words.size());
        parallel_for(words.size(), options.threads, [&](std::size_t i) {
            const auto d = derivative(words[i]);
            if (!d)
                throw std::logic_error("LFE word is not differentiable");
            auto it = known.find(d.word());
            if (it == known.end())
                throw std::logic_error("derivative of an LFE word is not LFE");
            level[i] = it->second + 1;
        });
        bool open = false;
        for (std::size_t i = 0; i < words.size(); ++i) {
            known.emplace(words[i], level[i]);
            if (level[i] <= j_max) {
                levels[level[i] - 1].words.push_back(words[i]);
                open = true;
            }
        }
        if (!open)
            break;
    }
    for (auto& l : levels)
        std::sort(l.words.begin(), l.words.end());
    return levels;
}

LfeFrontier::LfeFrontier(Alphabet alphabet, EnumerationOptions options)
  : _alphabet(alphabet), _options(options), _current{0, {Word(alphabet)}}
{
    if (!_options.cache)
        _options.cache = &_own_cache;
}

const LfeLengthClass& LfeFrontier::advance()
{
    const auto& parents = _current.words;
    const Letter letters[2] = {_alphabet.a(), _alphabet.b()};
    std::vector<char> keep(parents.size() * 2, 0);
    parallel_for(parents.size(), _options.threads, [&](std::size_t i) {
        for (int x = 0; x < 2; ++x) {
            Word v = parents[i];
            v.push_back(letters[x]);
            keep[2 * i + x] = is_lfe(v, _options.cache);
        }
    });
    const auto kept = static_cast<std::size_t>(std::count(keep.begin(), keep.end(), 1));
    if (kept > _options.max_states)
        throw ResourceLimitError("LF_" + std::to_string(_current.k + 1) + " holds " + std::to_string(kept)
                                 + " words, above the cap of " + std::to_string(_options.max_states));
    // Right extensions of a sorted same-length list stay sorted.
    LfeLengthClass next{_current.k + 1, {}};
    next.words.reserve(kept);
    for (std::size_t i = 0; i < parents.size(); ++i) {
        for (int x = 0; x < 2; ++x) {
            if (keep[2 * i + x]) {
                Word v = parents[i];
                v.push_back(letters[x]);
                next.words.push_back(std::move(v));
            }
        }
    }
    _current = std::move(next);
    return _current;
}

LfeLengthClass lf_k(const Alphabet& alphabet, std::size_t k, const EnumerationOptions& options)
{
    LfeFrontier frontier(alphabet, options);
    for (std::size_t i = 0; i < k; ++i)
        frontier.advance();
    return frontier.current();
}

} // namespace smoothwords
