#include "smoothwords/kolakoski.hpp"

#include <stdexcept>
#include <unordered_set>

#include "smoothwords/smoothness.hpp"

namespace smoothwords {

KolakoskiStream::KolakoskiStream(Alphabet alphabet, Letter first_letter)
  : _alphabet(alphabet), _first(first_letter)
{
    alphabet.other(first_letter); // validates
}

void KolakoskiStream::extend_to(std::size_t n)
{
    while (_letters.size() < n) {
        const Letter letter = _run % 2 == 0 ? _first : _alphabet.other(_first);
        // A run that has not been written yet describes itself.
        const Letter length = _run < _letters.size() ? _letters[_run] : letter;
        _letters.insert(_letters.end(), length, letter);
        ++_run;
    }
}

Word KolakoskiStream::prefix(std::size_t n)
{
    extend_to(n);
    return make_word(_alphabet, std::span<const Letter>(_letters.data(), n));
}

Word kolakoski(const Alphabet& alphabet, std::size_t n)
{
    return kolakoski(alphabet, alphabet.b(), n);
}

Word kolakoski(const Alphabet& alphabet, Letter first_letter, std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("prefix length must be positive");
    KolakoskiStream stream(alphabet, first_letter);
    return stream.prefix(n);
}

bool self_encoding_holds(const Word& prefix)
{
    const auto runs = prefix.runs();
    if (runs.empty())
        return true;
    const auto letters = prefix.letters();
    const std::size_t complete = runs.size() - 1;
    if (complete > letters.size())
        return false;
    for (std::size_t i = 0; i < complete; ++i)
        if (runs[i].length != letters[i])
            return false;
    return true;
}

Ratio density(const Word& prefix, Letter letter)
{
    if (prefix.empty())
        throw std::invalid_argument("density of the empty word is undefined");
    return Ratio(count(prefix, letter), prefix.size());
}

Ratio max_prefix_density(const Word& w, Letter letter, std::size_t min_length)
{
    if (min_length == 0 || min_length > w.size())
        throw std::invalid_argument("min_length must lie in [1, |w|]");
    w.alphabet().other(letter); // validates
    Ratio best(0, 1);
    std::size_t seen = 0;
    std::size_t hits = 0;
    for (const Run& run : w.runs()) {
        for (std::uint32_t i = 0; i < run.length; ++i) {
            ++seen;
            hits += run.letter == letter;
            if (seen >= min_length)
                best = std::max(best, Ratio(hits, seen));
        }
    }
    return best;
}

bool factor_smoothness_check(const Word& prefix, std::size_t window)
{
    if (window == 0 || window > prefix.size())
        throw std::invalid_argument("window must lie in [1, |prefix|]");
    std::unordered_set<Word, WordHash> seen;
    for (std::size_t pos = 0; pos + window <= prefix.size(); ++pos) {
        Word factor = prefix.slice(pos, window);
        if (!seen.insert(factor).second)
            continue;
        if (!is_smooth(factor))
            return false;
    }
    return true;
}

nlohmann::json kolakoski_stats(const Word& prefix, std::size_t min_length)
{
    const Alphabet& alphabet = prefix.alphabet();
    const Ratio da = density(prefix, alphabet.a());
    const Ratio db = density(prefix, alphabet.b());
    const Ratio window = max_prefix_density(prefix, alphabet.a(), min_length);
    return {
        {"n", prefix.size()},
        {"min_length", min_length},
        {"density_a", da.value()},
        {"density_a_exact", da.str()},
        {"density_b", db.value()},
        {"density_b_exact", db.str()},
        {"max_window_density", window.value()},
        {"max_window_density_exact", window.str()},
    };
}

} // namespace smoothwords
