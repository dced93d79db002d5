#include "cag/rational.hpp"

#include <charconv>
#include <numeric>

namespace cag {

namespace {

using int128 = __int128;

long long narrow(int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw std::overflow_error("rational arithmetic overflow");
    }
    return static_cast<long long>(v);
}

int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational::Rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    int128 n = num, d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n);
    den_ = narrow(d);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = narrow(-static_cast<int128>(num_));
    r.den_ = den_;
    return r;
}

namespace {

Rational make_reduced(int128 n, int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational(narrow(n), narrow(d));
}

}  // namespace

Rational& Rational::operator+=(const Rational& o) {
    *this = make_reduced(static_cast<int128>(num_) * o.den_ + static_cast<int128>(o.num_) * den_,
                         static_cast<int128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    *this = make_reduced(static_cast<int128>(num_) * o.den_ - static_cast<int128>(o.num_) * den_,
                         static_cast<int128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    *this = make_reduced(static_cast<int128>(num_) * o.num_, static_cast<int128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::invalid_argument("rational division by zero");
    *this = make_reduced(static_cast<int128>(num_) * o.den_, static_cast<int128>(den_) * o.num_);
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int128 lhs = static_cast<int128>(a.num_) * b.den_;
    int128 rhs = static_cast<int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::mod1() const {
    long long q = floor();
    return *this - Rational(q);
}

long long Rational::floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&] { return std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };
    size_t slash = text.find('/');
    long long num = 0, den = 1;
    std::string_view num_part = text.substr(0, slash);
    if (num_part.empty()) throw bad();
    auto [p, ec] = std::from_chars(num_part.data(), num_part.data() + num_part.size(), num);
    if (ec != std::errc() || p != num_part.data() + num_part.size()) throw bad();
    if (slash != std::string_view::npos) {
        std::string_view den_part = text.substr(slash + 1);
        if (den_part.empty()) throw bad();
        auto [p2, ec2] = std::from_chars(den_part.data(), den_part.data() + den_part.size(), den);
        if (ec2 != std::errc() || p2 != den_part.data() + den_part.size()) throw bad();
        if (den == 0) throw bad();
    }
    return Rational(num, den);
}

}  // namespace cag
