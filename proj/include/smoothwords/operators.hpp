// operators.hpp -- closure, derivative, rho, inverse derivative, primitives

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "smoothwords/word.hpp"

namespace smoothwords {

enum class NotDifferentiable
{
    RunTooLong,               ///< some run is longer than b
    InteriorRunNotInAlphabet, ///< an interior run length is neither a nor b
};

const char* to_string(NotDifferentiable reason) noexcept;

/// Result of applying D: a word, or the reason D is undefined.
class DerivativeOutcome
{
public:
    static DerivativeOutcome success(Word w) { return DerivativeOutcome(std::move(w)); }
    static DerivativeOutcome failure(NotDifferentiable reason) { return DerivativeOutcome(reason); }

    bool ok() const noexcept { return _word.has_value(); }
    explicit operator bool() const noexcept { return ok(); }

    /// Throws `std::logic_error` when not ok.
    const Word& word() const;
    /// Only meaningful when !ok().
    NotDifferentiable reason() const noexcept { return _reason; }

private:
    explicit DerivativeOutcome(Word w) : _word(std::move(w)) {}
    explicit DerivativeOutcome(NotDifferentiable r) : _reason(r) {}

    std::optional<Word> _word;
    NotDifferentiable _reason = NotDifferentiable::RunTooLong;
};

/// Closure: a boundary run longer than a is padded to length b with its own
/// letter. A single run is padded once. Throws `std::invalid_argument` when
/// some run is longer than b.
Word closure(const Word& w);

/// D(w): the word of run lengths, discarding a boundary run shorter than b.
DerivativeOutcome derivative(const Word& w);

/// rho(w) = D(closure(w)). Runs longer than b yield RunTooLong.
DerivativeOutcome rho(const Word& w);

/// Expands u into alternating runs beta^{u1} other(beta)^{u2} ...
/// Throws `std::invalid_argument` if `start` is not in u's alphabet.
Word inverse_derivative(const Word& u, Letter start);

/// All nonempty v with D(v) = w, sorted lexicographically.
std::vector<Word> primitives(const Word& w);

/// Run-length derivative of an arbitrary positive integer sequence with the
/// boundary discard rule taken against `max_letter`. Throws
/// `std::invalid_argument` for zero letters or runs longer than `max_letter`.
std::vector<Letter> generic_run_length_derivative(std::span<const Letter> letters, Letter max_letter);

namespace detail {

/// Run-level D or rho. Writes the derivative's runs to `out` and returns
/// nullopt, or returns the failure reason. `out` must not alias `in`.
std::optional<NotDifferentiable> derive_runs(const Alphabet& alphabet, std::span<const Run> in,
                                             bool with_closure, std::vector<Run>& out);

} // namespace detail

} // namespace smoothwords
