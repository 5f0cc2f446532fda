#pragma once

/**
 * @file rational.hpp
 * @brief Exact rationals over a signed 64-bit integer.
 *
 * Always stored in lowest terms with a positive denominator; zero is 0/1.
 * Intermediate products are formed in 128 bits and the result is checked to
 * fit back into 64 bits, so arithmetic either is exact or throws
 * std::overflow_error. Nothing here rounds.
 */

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace selfdesc {

class Rational {
public:
    using int_type = std::int64_t;

    constexpr Rational() noexcept = default;
    constexpr Rational(int_type n) noexcept : num_(n) {}  // NOLINT(implicit)
    constexpr Rational(int_type n, int_type d) { assign(n, d); }

    constexpr int_type num() const noexcept { return num_; }
    constexpr int_type den() const noexcept { return den_; }

    constexpr bool is_zero() const noexcept { return num_ == 0; }
    constexpr bool is_integer() const noexcept { return den_ == 1; }

    explicit constexpr operator double() const noexcept {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }
    constexpr double to_double() const noexcept { return static_cast<double>(*this); }

    /// "num/den", always with the slash ("3/1", "0/1").
    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    constexpr Rational operator-() const { return from_wide(-wide(num_), den_); }

    constexpr Rational& operator+=(const Rational& o) { return *this = *this + o; }
    constexpr Rational& operator-=(const Rational& o) { return *this = *this - o; }
    constexpr Rational& operator*=(const Rational& o) { return *this = *this * o; }
    constexpr Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend constexpr Rational operator+(const Rational& a, const Rational& b) {
        // a/b + c/d over lcm(b, d) keeps the intermediates small.
        const int_type g = std::gcd(a.den_, b.den_);
        const wide_type lhs = wide(a.num_) * (b.den_ / g);
        const wide_type rhs = wide(b.num_) * (a.den_ / g);
        return from_wide(lhs + rhs, wide(a.den_ / g) * b.den_);
    }
    friend constexpr Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend constexpr Rational operator*(const Rational& a, const Rational& b) {
        // Cross-cancel first.
        const int_type g1 = std::gcd(a.num_, b.den_);
        const int_type g2 = std::gcd(b.num_, a.den_);
        const int_type n1 = g1 ? a.num_ / g1 : 0, d2 = g1 ? b.den_ / g1 : b.den_;
        const int_type n2 = g2 ? b.num_ / g2 : 0, d1 = g2 ? a.den_ / g2 : a.den_;
        return from_wide(wide(n1) * n2, wide(d1) * d2);
    }

    friend constexpr Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return a * Rational(b.den_, b.num_);
    }

    friend constexpr bool operator==(const Rational&, const Rational&) noexcept = default;

    friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        return wide(a.num_) * b.den_ <=> wide(b.num_) * a.den_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    using wide_type = __int128;

    static constexpr wide_type wide(int_type v) noexcept { return static_cast<wide_type>(v); }

    static constexpr wide_type wabs(wide_type v) noexcept { return v < 0 ? -v : v; }

    static constexpr wide_type wgcd(wide_type a, wide_type b) noexcept {
        a = wabs(a);
        b = wabs(b);
        while (b != 0) {
            const wide_type t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static constexpr Rational from_wide(wide_type n, wide_type d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) return Rational{};
        const wide_type g = wgcd(n, d);
        n /= g;
        d /= g;
        constexpr wide_type lo = std::numeric_limits<int_type>::min() + 1;
        constexpr wide_type hi = std::numeric_limits<int_type>::max();
        if (n < lo || n > hi || d > hi) throw std::overflow_error("Rational: 64-bit overflow");
        Rational r;
        r.num_ = static_cast<int_type>(n);
        r.den_ = static_cast<int_type>(d);
        return r;
    }

    constexpr void assign(int_type n, int_type d) { *this = from_wide(wide(n), wide(d)); }

    int_type num_ = 0;
    int_type den_ = 1;
};

}  // namespace selfdesc
