#include "smoothwords/word.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace smoothwords {

Alphabet::Alphabet(std::int64_t a, std::int64_t b)
{
    if (a < 1 || b < 1)
        throw std::invalid_argument("alphabet letters must be positive integers");
    if (a >= b)
        throw std::invalid_argument("alphabet requires a < b");
    if (b > static_cast<std::int64_t>(UINT32_MAX))
        throw std::invalid_argument("alphabet letter too large");
    _a = static_cast<Letter>(a);
    _b = static_cast<Letter>(b);
}

Letter Alphabet::other(Letter x) const
{
    if (x == _a)
        return _b;
    if (x == _b)
        return _a;
    throw std::invalid_argument("letter " + std::to_string(x) + " is not in the alphabet");
}

Word Word::from_runs(Alphabet alphabet, std::span<const Run> runs)
{
    Word w(alphabet);
    for (const Run& run : runs) {
        if (!alphabet.contains(run.letter))
            throw std::invalid_argument("letter " + std::to_string(run.letter)
                                        + " is not in the alphabet");
        w.push_back(run.letter, run.length);
    }
    return w;
}

Letter Word::front() const
{
    if (_runs.empty())
        throw std::out_of_range("front() of the empty word");
    return _runs.front().letter;
}

Letter Word::back() const
{
    if (_runs.empty())
        throw std::out_of_range("back() of the empty word");
    return _runs.back().letter;
}

std::vector<Letter> Word::letters() const
{
    std::vector<Letter> out;
    out.reserve(_size);
    for (const Run& run : _runs)
        out.insert(out.end(), run.length, run.letter);
    return out;
}

Word Word::slice(std::size_t pos, std::size_t len) const
{
    if (pos > _size || len > _size - pos)
        throw std::out_of_range("slice outside the word");
    Word out(_alphabet);
    std::size_t offset = 0;
    for (const Run& run : _runs) {
        const std::size_t lo = std::max(pos, offset);
        const std::size_t hi = std::min(pos + len, offset + run.length);
        if (lo < hi)
            out.push_back(run.letter, static_cast<std::uint32_t>(hi - lo));
        offset += run.length;
        if (offset >= pos + len)
            break;
    }
    return out;
}

void Word::push_back(Letter x, std::uint32_t count)
{
    if (count == 0)
        return;
    if (!_alphabet.contains(x))
        throw std::invalid_argument("letter " + std::to_string(x) + " is not in the alphabet");
    if (!_runs.empty() && _runs.back().letter == x)
        _runs.back().length += count;
    else
        _runs.push_back({x, count});
    _size += count;
}

void Word::push_front(Letter x, std::uint32_t count)
{
    if (count == 0)
        return;
    if (!_alphabet.contains(x))
        throw std::invalid_argument("letter " + std::to_string(x) + " is not in the alphabet");
    if (!_runs.empty() && _runs.front().letter == x)
        _runs.front().length += count;
    else
        _runs.insert(_runs.begin(), Run{x, count});
    _size += count;
}

std::strong_ordering operator<=>(const Word& x, const Word& y)
{
    if (auto c = x._alphabet <=> y._alphabet; c != 0)
        return c;
    // Walk both run lists in lockstep, consuming the common part of the
    // current runs.
    std::size_t i = 0, j = 0;
    std::uint32_t used_x = 0, used_y = 0;
    while (i < x._runs.size() && j < y._runs.size()) {
        const Run& rx = x._runs[i];
        const Run& ry = y._runs[j];
        if (rx.letter != ry.letter)
            return rx.letter <=> ry.letter;
        const std::uint32_t step = std::min(rx.length - used_x, ry.length - used_y);
        used_x += step;
        used_y += step;
        if (used_x == rx.length) {
            ++i;
            used_x = 0;
        }
        if (used_y == ry.length) {
            ++j;
            used_y = 0;
        }
    }
    const bool x_done = i == x._runs.size();
    const bool y_done = j == y._runs.size();
    if (x_done && y_done)
        return std::strong_ordering::equal;
    return x_done ? std::strong_ordering::less : std::strong_ordering::greater;
}

Word make_word(const Alphabet& alphabet, std::span<const Letter> letters)
{
    Word w(alphabet);
    for (Letter x : letters)
        w.push_back(x);
    return w;
}

RunProfile profile(const Word& w)
{
    if (w.empty())
        throw std::invalid_argument("run profile of the empty word is undefined");
    const auto runs = w.runs();
    return RunProfile{
        .r = runs.size(),
        .fr_letter = runs.front().letter,
        .lr_letter = runs.back().letter,
        .lfr = runs.front().length,
        .llr = runs.back().length,
    };
}

Word complement(const Word& w)
{
    std::vector<Run> runs(w.runs().begin(), w.runs().end());
    for (Run& run : runs)
        run.letter = w.alphabet().other(run.letter);
    return Word::from_runs(w.alphabet(), runs);
}

Word reversal(const Word& w)
{
    std::vector<Run> runs(w.runs().rbegin(), w.runs().rend());
    return Word::from_runs(w.alphabet(), runs);
}

Word concat(const Word& x, const Word& y)
{
    if (x.alphabet() != y.alphabet())
        throw std::invalid_argument("concatenation of words over different alphabets");
    Word out = x;
    for (const Run& run : y.runs())
        out.push_back(run.letter, run.length);
    return out;
}

std::size_t count(const Word& w, Letter letter)
{
    if (!w.alphabet().contains(letter))
        throw std::invalid_argument("letter " + std::to_string(letter) + " is not in the alphabet");
    std::size_t n = 0;
    for (const Run& run : w.runs())
        if (run.letter == letter)
            n += run.length;
    return n;
}

bool is_factor(const Word& u, const Word& w)
{
    if (u.alphabet() != w.alphabet() || u.size() > w.size())
        return false;
    if (u.empty())
        return true;
    const auto ur = u.runs();
    const auto wr = w.runs();
    if (ur.size() == 1) {
        return std::any_of(wr.begin(), wr.end(), [&](const Run& r) {
            return r.letter == ur[0].letter && r.length >= ur[0].length;
        });
    }
    // Interior runs of u must match exactly; its boundary runs may be
    // suffix/prefix parts of the matching runs of w.
    const std::size_t k = ur.size();
    for (std::size_t s = 0; s + k <= wr.size(); ++s) {
        if (wr[s].letter != ur[0].letter || wr[s].length < ur[0].length)
            continue;
        if (wr[s + k - 1].letter != ur[k - 1].letter || wr[s + k - 1].length < ur[k - 1].length)
            continue;
        if (std::equal(ur.begin() + 1, ur.end() - 1, wr.begin() + static_cast<std::ptrdiff_t>(s + 1)))
            return true;
    }
    return false;
}

std::size_t WordHash::operator()(const Word& w) const noexcept
{
    std::size_t h = std::hash<std::uint64_t>{}((std::uint64_t{w.alphabet().a()} << 32) | w.alphabet().b());
    for (const Run& run : w.runs()) {
        const std::uint64_t v = (std::uint64_t{run.letter} << 32) | run.length;
        h ^= std::hash<std::uint64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

} // namespace smoothwords
