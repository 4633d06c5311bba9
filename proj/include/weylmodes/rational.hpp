#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace weylmodes {

// Exact rational over 64-bit integers, always stored normalized with a
// positive denominator.  Every arithmetic step is range-checked through
// __int128; the root-system tables stay far below the limit, so an
// overflow here means a logic bug and throws.
class Rational {
  public:
    constexpr Rational() = default;
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    bool is_integer() const { return den_ == 1; }

    // Exact conversion; throws if the value is not an integer.
    long long to_integer() const {
        if (den_ != 1) throw std::logic_error("Rational: not an integer: " + str());
        return num_;
    }

    // Parse a nonnegative decimal literal ("2", "2.5", "0.125") exactly.
    static Rational from_decimal(const std::string& text);

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                    checked_mul(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(checked_sub(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                    checked_mul(a.den_, b.den_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return make(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
    }
    Rational operator-() const { return make(-num_, den_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  private:
    static long long narrow(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rational: 64-bit overflow");
        return static_cast<long long>(v);
    }
    static long long checked_mul(long long a, long long b) { return narrow((__int128)a * b); }
    static long long checked_add(long long a, long long b) { return narrow((__int128)a + b); }
    static long long checked_sub(long long a, long long b) { return narrow((__int128)a - b); }

    static Rational make(long long n, long long d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        r.normalize();
        return r;
    }

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    long long num_ = 0;
    long long den_ = 1;
};

inline Rational Rational::from_decimal(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty decimal literal");
    std::size_t dot = text.find('.');
    std::string digits = (dot == std::string::npos) ? text : text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = (dot == std::string::npos) ? 0 : text.size() - dot - 1;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("Rational: bad decimal literal '" + text + "'");
    if (digits.size() > 18) throw std::invalid_argument("Rational: decimal literal too long '" + text + "'");
    long long n = 0;
    for (char c : digits) n = n * 10 + (c - '0');
    long long d = 1;
    for (std::size_t i = 0; i < frac_len; ++i) d *= 10;
    return Rational(n, d);
}

} // namespace weylmodes
