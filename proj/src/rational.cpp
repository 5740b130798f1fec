#include "countdown/rational.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/integer.hpp>

#include "countdown/errors.hpp"

namespace countdown {

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) throw DivisionByZero("rational with zero denominator");
    if (num_ < 0 || den_ < 0) throw NegativeResult("rational outside the non-negative domain");
    normalize();
}

Rational::Rational(int n) : num_(n), den_(1) {
    if (n < 0) throw NegativeResult("rational outside the non-negative domain");
}

void Rational::normalize() {
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
}

std::optional<Rational> Rational::parse(std::string_view text) {
    auto parse_uint = [](std::string_view s) -> std::optional<BigInt> {
        if (s.empty()) return std::nullopt;
        for (char c : s) {
            if (c < '0' || c > '9') return std::nullopt;
        }
        // No leading zeros except the literal "0"; keeps str() a bijection.
        if (s.size() > 1 && s.front() == '0') return std::nullopt;
        return BigInt(std::string(s));
    };

    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_uint(text);
        if (!n) return std::nullopt;
        return Rational(std::move(*n), 1);
    }
    auto n = parse_uint(text.substr(0, slash));
    auto d = parse_uint(text.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return Rational(std::move(*n), std::move(*d));
}

Rational Rational::operator+(const Rational& rhs) const {
    return Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator-(const Rational& rhs) const {
    BigInt n = num_ * rhs.den_ - rhs.num_ * den_;
    if (n < 0) throw NegativeResult("subtraction result is negative");
    return Rational(std::move(n), den_ * rhs.den_);
}

Rational Rational::operator*(const Rational& rhs) const {
    return Rational(num_ * rhs.num_, den_ * rhs.den_);
}

Rational Rational::operator/(const Rational& rhs) const {
    if (rhs.num_ == 0) throw DivisionByZero("division by zero");
    return Rational(num_ * rhs.den_, den_ * rhs.num_);
}

bool Rational::operator<(const Rational& rhs) const {
    return num_ * rhs.den_ < rhs.num_ * den_;
}

std::string Rational::str() const {
    std::ostringstream os;
    os << num_;
    if (den_ != 1) os << '/' << den_;
    return os.str();
}

double Rational::to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

Rational Rational::abs_diff(const Rational& a, const Rational& b) {
    return a < b ? b - a : a - b;
}

std::size_t Rational::hash() const {
    std::size_t seed = boost::hash<BigInt>{}(num_);
    boost::hash_combine(seed, boost::hash<BigInt>{}(den_));
    return seed;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace countdown
