#include "smoothwords/word_io.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace smoothwords {

namespace {

std::int64_t parse_integer(std::string_view token)
{
    while (!token.empty() && token.front() == ' ')
        token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ')
        token.remove_suffix(1);
    std::int64_t value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end || token.empty())
        throw std::invalid_argument("not an integer: '" + std::string(token) + "'");
    return value;
}

std::vector<std::int64_t> split_integers(std::string_view text)
{
    std::vector<std::int64_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t stop = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(parse_integer(text.substr(start, stop - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

Letter checked_letter(const Alphabet& alphabet, std::int64_t value)
{
    if (value < 0 || !alphabet.contains(static_cast<Letter>(value)))
        throw std::invalid_argument("letter " + std::to_string(value) + " is not in the alphabet");
    return static_cast<Letter>(value);
}

} // namespace

Word parse_word(const Alphabet& alphabet, std::string_view text)
{
    Word w(alphabet);
    if (text.empty() || text == "ε")
        return w;
    if (text.find(',') != std::string_view::npos) {
        for (std::int64_t v : split_integers(text))
            w.push_back(checked_letter(alphabet, v));
        return w;
    }
    if (alphabet.b() > 9) {
        // a single multi-digit letter is still unambiguous
        w.push_back(checked_letter(alphabet, parse_integer(text)));
        return w;
    }
    for (char c : text) {
        if (c < '0' || c > '9')
            throw std::invalid_argument(std::string("unexpected character '") + c + "' in word");
        w.push_back(checked_letter(alphabet, c - '0'));
    }
    return w;
}

std::string format_word(const Word& w)
{
    std::string out;
    const bool compact = w.alphabet().b() <= 9;
    for (const Run& run : w.runs()) {
        const std::string symbol = std::to_string(run.letter);
        for (std::uint32_t i = 0; i < run.length; ++i) {
            if (!compact && !out.empty())
                out += ',';
            out += symbol;
        }
    }
    return out;
}

std::string display_word(const Word& w)
{
    return w.empty() ? std::string("ε") : format_word(w);
}

nlohmann::json to_json(const Word& w)
{
    nlohmann::json runs = nlohmann::json::array();
    for (const Run& run : w.runs())
        runs.push_back({run.letter, run.length});
    return {{"alphabet", {w.alphabet().a(), w.alphabet().b()}}, {"runs", runs}};
}

Word word_from_json(const nlohmann::json& j)
{
    const auto& ab = j.at("alphabet");
    if (!ab.is_array() || ab.size() != 2)
        throw std::invalid_argument("alphabet must be a pair [a,b]");
    Alphabet alphabet(ab[0].get<std::int64_t>(), ab[1].get<std::int64_t>());
    Word w(alphabet);
    Letter previous = 0;
    for (const auto& run : j.at("runs")) {
        if (!run.is_array() || run.size() != 2)
            throw std::invalid_argument("run must be a pair [letter,len]");
        const Letter letter = checked_letter(alphabet, run[0].get<std::int64_t>());
        const std::int64_t len = run[1].get<std::int64_t>();
        if (len < 1 || len > static_cast<std::int64_t>(UINT32_MAX))
            throw std::invalid_argument("run length must be positive");
        if (letter == previous)
            throw std::invalid_argument("adjacent runs must have distinct letters");
        w.push_back(letter, static_cast<std::uint32_t>(len));
        previous = letter;
    }
    return w;
}

Alphabet parse_alphabet(std::string_view text)
{
    const auto values = split_integers(text);
    if (values.size() != 2)
        throw std::invalid_argument("alphabet must be given as 'a,b'");
    return Alphabet(values[0], values[1]);
}

} // namespace smoothwords
