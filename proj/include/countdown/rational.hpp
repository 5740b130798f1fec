#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace countdown {

using BigInt = boost::multiprecision::cpp_int;

// Exact non-negative rational, always kept in lowest terms with den >= 1.
// Subtraction below zero and division by zero throw rather than wrap; the
// value domain mirrors the arithmetic the puzzles are played over.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt numerator, BigInt denominator);
    Rational(std::uint64_t n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose
    Rational(int n);

    static std::optional<Rational> parse(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    Rational operator+(const Rational& rhs) const;
    Rational operator-(const Rational& rhs) const;  // throws NegativeResult
    Rational operator*(const Rational& rhs) const;
    Rational operator/(const Rational& rhs) const;  // throws DivisionByZero

    bool operator==(const Rational& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }
    bool operator!=(const Rational& rhs) const { return !(*this == rhs); }
    bool operator<(const Rational& rhs) const;
    bool operator<=(const Rational& rhs) const { return !(rhs < *this); }
    bool operator>(const Rational& rhs) const { return rhs < *this; }
    bool operator>=(const Rational& rhs) const { return !(*this < rhs); }

    // "p" for integers, "p/q" otherwise.
    std::string str() const;

    // Lossy conversion for heuristics and summary statistics.
    double to_double() const;

    // |a - b|, safe regardless of order.
    static Rational abs_diff(const Rational& a, const Rational& b);

    std::size_t hash() const;

private:
    BigInt num_;
    BigInt den_;

    void normalize();
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace countdown

template <>
struct std::hash<countdown::Rational> {
    std::size_t operator()(const countdown::Rational& r) const { return r.hash(); }
};
