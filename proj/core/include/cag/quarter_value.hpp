#pragma once

#include "cag/rational.hpp"

namespace cag {

/// A non-negative rational extended with "infinite" (used across
/// disconnected components). Hyperbolicity values produced by the delta
/// engine are always finite multiples of 1/4; diameters may be infinite.
class QuarterValue {
public:
    QuarterValue() = default;
    QuarterValue(Rational v) : value_(v), infinite_(false) {}
    QuarterValue(long long v) : value_(v), infinite_(false) {}

    static QuarterValue infinity() {
        QuarterValue q;
        q.infinite_ = true;
        return q;
    }

    bool is_infinite() const { return infinite_; }
    const Rational& value() const {
        if (infinite_) throw std::logic_error("value() on infinite QuarterValue");
        return value_;
    }

    bool is_quarter_multiple() const {
        return !infinite_ && (value_ * Rational(4)).is_integer();
    }

    friend bool operator==(const QuarterValue& a, const QuarterValue& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }
    friend bool operator<(const QuarterValue& a, const QuarterValue& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const QuarterValue& a, const QuarterValue& b) { return a == b || a < b; }
    friend bool operator>(const QuarterValue& a, const QuarterValue& b) { return b < a; }
    friend bool operator>=(const QuarterValue& a, const QuarterValue& b) { return b <= a; }

    std::string str() const { return infinite_ ? "inf" : value_.str(); }

private:
    Rational value_;
    bool infinite_ = false;
};

inline QuarterValue max(const QuarterValue& a, const QuarterValue& b) { return a < b ? b : a; }

}  // namespace cag
