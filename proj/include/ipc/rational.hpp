#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ipc {

// Exact rational endpoint. Always normalized: den > 0, gcd(|num|, den) == 1.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT implicit
    Rational(std::int64_t num, std::int64_t den);

    // Accepts "p", "-p", "p/q".
    static Rational parse(std::string_view text);

    [[nodiscard]] constexpr std::int64_t num() const { return num_; }
    [[nodiscard]] constexpr std::int64_t den() const { return den_; }

    [[nodiscard]] std::string str() const;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Rational& a, const Rational& b) = default;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace ipc
