#include "smoothwords/operators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace smoothwords {

const char* to_string(NotDifferentiable reason) noexcept
{
    switch (reason) {
    case NotDifferentiable::RunTooLong:
        return "RunTooLong";
    case NotDifferentiable::InteriorRunNotInAlphabet:
        return "InteriorRunNotInAlphabet";
    }
    return "unknown";
}

const Word& DerivativeOutcome::word() const
{
    if (!_word)
        throw std::logic_error(std::string("word is not differentiable: ") + to_string(_reason));
    return *_word;
}

namespace detail {

namespace {

void emit(std::vector<Run>& out, Letter symbol)
{
    if (!out.empty() && out.back().letter == symbol)
        ++out.back().length;
    else
        out.push_back({symbol, 1});
}

} // namespace

std::optional<NotDifferentiable> derive_runs(const Alphabet& alphabet, std::span<const Run> in,
                                             bool with_closure, std::vector<Run>& out)
{
    out.clear();
    const Letter a = alphabet.a();
    const Letter b = alphabet.b();
    for (const Run& run : in)
        if (run.length > b)
            return NotDifferentiable::RunTooLong;
    const std::size_t k = in.size();
    for (std::size_t i = 1; i + 1 < k; ++i)
        if (in[i].length != a && in[i].length != b)
            return NotDifferentiable::InteriorRunNotInAlphabet;
    if (k == 0)
        return std::nullopt;

    // Closure pads a boundary run longer than a up to b; D keeps a boundary
    // run only when its length is exactly b.
    auto boundary_kept = [&](std::uint32_t len) { return len == b || (with_closure && len > a); };

    if (boundary_kept(in.front().length))
        emit(out, b);
    for (std::size_t i = 1; i + 1 < k; ++i)
        emit(out, in[i].length);
    if (k > 1 && boundary_kept(in.back().length))
        emit(out, b);
    return std::nullopt;
}

} // namespace detail

Word closure(const Word& w)
{
    const Letter a = w.alphabet().a();
    const Letter b = w.alphabet().b();
    std::vector<Run> runs(w.runs().begin(), w.runs().end());
    for (const Run& run : runs)
        if (run.length > b)
            throw std::invalid_argument("closure undefined: run of length " + std::to_string(run.length)
                                        + " exceeds b=" + std::to_string(b));
    if (!runs.empty()) {
        if (runs.front().length > a)
            runs.front().length = b;
        if (runs.back().length > a)
            runs.back().length = b;
    }
    return Word::from_runs(w.alphabet(), runs);
}

namespace {

DerivativeOutcome derive(const Word& w, bool with_closure)
{
    std::vector<Run> out;
    if (auto failure = detail::derive_runs(w.alphabet(), w.runs(), with_closure, out))
        return DerivativeOutcome::failure(*failure);
    return DerivativeOutcome::success(Word::from_runs(w.alphabet(), out));
}

} // namespace

DerivativeOutcome derivative(const Word& w)
{
    return derive(w, false);
}

DerivativeOutcome rho(const Word& w)
{
    return derive(w, true);
}

Word inverse_derivative(const Word& u, Letter start)
{
    const Alphabet& alphabet = u.alphabet();
    Letter current = start;
    alphabet.other(current); // validates start
    Word out(alphabet);
    for (const Run& run : u.runs()) {
        for (std::uint32_t i = 0; i < run.length; ++i) {
            out.push_back(current, run.letter);
            current = alphabet.other(current);
        }
    }
    return out;
}

std::vector<Word> primitives(const Word& w)
{
    const Alphabet& alphabet = w.alphabet();
    const Letter b = alphabet.b();
    std::vector<Word> out;
    for (Letter alpha : {alphabet.a(), alphabet.b()}) {
        const Word core = inverse_derivative(w, alpha);
        // The closing letter continues the alternation after the core (or
        // after the prefix when the core is empty).
        const Letter before = alphabet.other(alpha);
        const Letter closing = core.empty() ? alpha : alphabet.other(core.back());
        for (std::uint32_t i = 0; i < b; ++i) {
            for (std::uint32_t j = 0; j < b; ++j) {
                Word v(alphabet);
                v.push_back(before, i);
                v = concat(v, core);
                v.push_back(closing, j);
                if (v.empty())
                    continue;
                const auto d = derivative(v);
                if (d.ok() && d.word() == w)
                    out.push_back(std::move(v));
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Letter> generic_run_length_derivative(std::span<const Letter> letters, Letter max_letter)
{
    std::vector<Letter> lengths;
    for (std::size_t i = 0; i < letters.size();) {
        if (letters[i] == 0)
            throw std::invalid_argument("letters must be positive");
        std::size_t j = i;
        while (j < letters.size() && letters[j] == letters[i])
            ++j;
        if (j - i > max_letter)
            throw std::invalid_argument("run of length " + std::to_string(j - i) + " exceeds "
                                        + std::to_string(max_letter));
        lengths.push_back(static_cast<Letter>(j - i));
        i = j;
    }
    if (lengths.empty())
        return lengths;
    std::size_t first = 0;
    std::size_t last = lengths.size();
    if (lengths.front() < max_letter)
        ++first;
    if (last > first && lengths.back() < max_letter)
        --last;
    return {lengths.begin() + static_cast<std::ptrdiff_t>(first),
            lengths.begin() + static_cast<std::ptrdiff_t>(last)};
}

} // namespace smoothwords
