#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "genera/errors.hpp"

namespace genera {

/// Exact rational arithmetic.  Always reduced, denominator positive.
/// Magnitudes stay tiny in this domain (vertex and edge counts), so
/// int64 components are ample.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw InputError("rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    /// Least integer >= *this.
    long long ceil() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

    /// Parses "p/q" or an integer literal.
    static Rational parse(const std::string& text) {
        if (text.empty()) throw InputError("empty rational literal");
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos) {
                return Rational(std::stoll(text));
            }
            long long n = std::stoll(text.substr(0, slash));
            long long d = std::stoll(text.substr(slash + 1));
            return Rational(n, d);
        } catch (const std::exception&) {
            throw InputError("bad rational literal: '" + text + "'");
        }
    }

private:
    void normalize() {
        if (den_ == 0) throw InputError("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    long long num_;
    long long den_;
};

} // namespace genera
