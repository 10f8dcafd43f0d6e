#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace boltzkit {

/// Exact rational arithmetic on 64-bit integers, always kept in lowest terms
/// with a positive denominator. Intermediate products run through 128-bit
/// integers; results that do not fit back into 64 bits throw.
///
/// Exponent bookkeeping works in "reciprocal space": a Lebesgue exponent p is
/// carried as the rational 1/p, so p = infinity is the rational 0 and scaling
/// relations become linear identities that can be checked exactly.
class Rational {
  public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Renders "n/d", or just "n" for integers.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "n", "n/d", or "inf" (the exponent infinity, stored by callers
    /// as the reciprocal 0 — parse_reciprocal handles that reading).
    static Rational parse(const std::string& text);

    /// Parses an exponent value ("4/3", "inf") into its reciprocal 1/p.
    static Rational parse_reciprocal(const std::string& text);

    Rational operator-() const { return raw(-num_, den_); }

    Rational operator+(const Rational& o) const {
        return make(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return make(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return make(i128(num_) * o.num_, i128(den_) * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        return make(i128(num_) * o.den_, i128(den_) * o.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return i128(num_) * o.den_ < i128(o.num_) * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    /// Reciprocal; throws on zero.
    Rational inverse() const {
        if (num_ == 0) throw std::domain_error("Rational: inverse of zero");
        return raw(den_ * sign(), num_ * sign());
    }

    Rational abs() const { return raw(num_ < 0 ? -num_ : num_, den_); }

  private:
    using i128 = __int128;

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;

    int sign() const { return num_ < 0 ? -1 : 1; }

    static Rational raw(std::int64_t n, std::int64_t d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }

    static Rational make(i128 n, i128 d);

    void normalize();
};

}  // namespace boltzkit
