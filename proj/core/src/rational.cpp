#include "boltzkit/rational.hpp"

#include <limits>

namespace boltzkit {

void Rational::normalize() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rational Rational::make(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 a = n < 0 ? -n : n;
    i128 b = d;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        n /= a;
        d /= a;
    }
    constexpr i128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr i128 hi = std::numeric_limits<std::int64_t>::max();
    if (n < lo || n > hi || d > hi) throw std::overflow_error("Rational: 64-bit overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = n == 0 ? 1 : static_cast<std::int64_t>(d);
    return r;
}

namespace {

/// Whole-token integer parse: surrounding whitespace is allowed, anything
/// else left over (a decimal point, a second slash) is an error.
std::int64_t parse_int(const std::string& piece) {
    std::size_t lo = piece.find_first_not_of(" \t");
    std::size_t hi = piece.find_last_not_of(" \t");
    if (lo == std::string::npos) throw std::invalid_argument("empty");
    const std::string core = piece.substr(lo, hi - lo + 1);
    std::size_t used = 0;
    const long long value = std::stoll(core, &used);
    if (used != core.size()) throw std::invalid_argument("trailing characters");
    return value;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(parse_int(text));
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("Rational: value out of range in '" + text + "'");
    } catch (const std::exception&) {
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
}

Rational Rational::parse_reciprocal(const std::string& text) {
    if (text == "inf" || text == "infinity") return Rational(0);
    return parse(text).inverse();
}

}  // namespace boltzkit
