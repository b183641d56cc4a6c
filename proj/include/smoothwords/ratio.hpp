// ratio.hpp -- exact nonnegative rationals for frequency statistics

#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace smoothwords {

class Ratio
{
public:
    constexpr Ratio() = default;
    Ratio(std::uint64_t num, std::uint64_t den) : _num(num), _den(den)
    {
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        const std::uint64_t g = std::gcd(num, den);
        _num /= g;
        _den /= g;
    }

    std::uint64_t num() const noexcept { return _num; }
    std::uint64_t den() const noexcept { return _den; }
    double value() const noexcept { return static_cast<double>(_num) / static_cast<double>(_den); }
    std::string str() const { return std::to_string(_num) + "/" + std::to_string(_den); }

    friend bool operator==(const Ratio& x, const Ratio& y) noexcept
    {
        return x._num == y._num && x._den == y._den;
    }
    friend std::strong_ordering operator<=>(const Ratio& x, const Ratio& y) noexcept
    {
        // numerators and denominators are letter counts, well below 2^32
        return x._num * y._den <=> y._num * x._den;
    }

private:
    std::uint64_t _num = 0;
    std::uint64_t _den = 1;
};

} // namespace smoothwords
