#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cag {

/// Exact rational number over int64 with checked arithmetic.
///
/// Always stored reduced with a positive denominator. Intermediate
/// products run through 128-bit arithmetic; a result that does not fit
/// int64 after reduction throws std::overflow_error instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    Rational(long long value) : num_(value), den_(1) {}
    Rational(long long num, long long den);

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// Remainder of this modulo 1 mapped into [0, 1).
    Rational mod1() const;

    /// Greatest integer <= value.
    long long floor() const;

    /// Rendered as "p/q" in lowest terms, q >= 1 (integers as "p/1"
    /// would be noisy, so they print as plain "p").
    std::string str() const;

    /// Parses "p/q" or "p". Throws std::invalid_argument on malformed
    /// input or a zero denominator.
    static Rational parse(std::string_view text);

private:
    long long num_ = 0;
    long long den_ = 1;
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace cag
