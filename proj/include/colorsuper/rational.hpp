#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

#include "colorsuper/errors.hpp"

namespace colorsuper {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, always reduced, denominator > 0, zero is 0/1.
class Rational {
  public:
    Rational() = default;
    Rational(long long n) : num_(n) {}  // NOLINT: implicit by design
    explicit Rational(BigInt n) : num_(std::move(n)) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(BigInt(s));
            return {BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1))};
        } catch (const std::exception&) {
            throw SchemaError("not a rational: '" + s + "'");
        }
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DomainError("rational division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        BigInt l = a.num_ * b.den_, r = b.num_ * a.den_;
        return l < r ? std::strong_ordering::less
                     : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    /// "n" when integral, "n/d" otherwise.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    /// Decimal rendering for human-readable report text only; never compared.
    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

  private:
    void normalize() {
        if (den_ == 0) throw DomainError("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    BigInt num_{0};
    BigInt den_{1};
};

inline Rational rat(long long n, long long d = 1) { return {n, d}; }

}  // namespace colorsuper
