#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "colorsuper/errors.hpp"
#include "colorsuper/rational.hpp"

namespace colorsuper {

/// Trial-division bound for radicand factorization. Desk-scale inputs only;
/// numbers that do not factor completely below the bound are rejected.
inline std::int64_t& factor_bound() {
    static std::int64_t bound = [] {
        if (const char* env = std::getenv("COLORSUPER_FACTOR_BOUND")) {
            long long v = std::atoll(env);
            if (v > 1) return static_cast<std::int64_t>(v);
        }
        return static_cast<std::int64_t>(1000000);
    }();
    return bound;
}

/// n = c^2 * d with d squarefree. Throws FactorBoundError when trial division
/// up to factor_bound() cannot finish the job.
inline std::pair<BigInt, std::int64_t> squarefree_decompose(BigInt n) {
    if (n < 0) throw DomainError("squarefree_decompose: negative input");
    BigInt c = 1;
    std::int64_t d = 1;
    const std::int64_t bound = factor_bound();
    for (std::int64_t p = 2; p <= bound && BigInt(p) * p <= n; p == 2 ? p = 3 : p += 2) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int k = 0; k < e / 2; ++k) c *= p;
        if (e % 2) d *= p;
    }
    if (n > bound) {
        throw FactorBoundError("radicand factor " + n.str() + " exceeds trial-division bound " +
                               std::to_string(bound));
    }
    d *= static_cast<std::int64_t>(n);
    return {c, d};
}

inline bool is_squarefree(std::int64_t n) {
    if (n < 1) return false;
    auto [c, d] = squarefree_decompose(BigInt(n));
    return c == 1;
}

/// Exact element of Q[sqrt(n) : n squarefree]: a finite sum q_d * sqrt(d),
/// keyed by the squarefree radicand d. Radicand 1 is the rational part.
/// Canonical: no zero coefficients, so equality is map equality.
class RadicalScalar {
  public:
    RadicalScalar() = default;
    RadicalScalar(Rational q) {  // NOLINT: implicit by design
        if (!q.is_zero()) terms_[1] = std::move(q);
    }
    RadicalScalar(long long n) : RadicalScalar(Rational(n)) {}  // NOLINT

    /// c * sqrt(d); validates that d is squarefree.
    static RadicalScalar radical(Rational c, std::int64_t d) {
        if (!is_squarefree(d)) {
            throw SchemaError("radicand " + std::to_string(d) + " is not squarefree");
        }
        RadicalScalar r;
        if (!c.is_zero()) r.terms_[d] = std::move(c);
        return r;
    }

    /// Exact square root of a non-negative rational, as c*sqrt(d).
    static RadicalScalar sqrt_of(const Rational& q) {
        if (q.is_negative()) throw DomainError("sqrt of negative rational " + q.str());
        if (q.is_zero()) return {};
        auto [c, d] = squarefree_decompose(q.num() * q.den());
        RadicalScalar r;
        r.terms_[d] = Rational(std::move(c), q.den());
        return r;
    }

    const std::map<std::int64_t, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
    }
    Rational rational_part() const {
        auto it = terms_.find(1);
        return it == terms_.end() ? Rational() : it->second;
    }

    friend RadicalScalar operator+(const RadicalScalar& a, const RadicalScalar& b) {
        RadicalScalar r = a;
        for (const auto& [d, q] : b.terms_) r.add_term(d, q);
        return r;
    }
    friend RadicalScalar operator-(const RadicalScalar& a, const RadicalScalar& b) {
        RadicalScalar r = a;
        for (const auto& [d, q] : b.terms_) r.add_term(d, -q);
        return r;
    }
    RadicalScalar operator-() const {
        RadicalScalar r;
        for (const auto& [d, q] : terms_) r.terms_[d] = -q;
        return r;
    }

    /// sqrt(m)*sqrt(n) = g*sqrt((m/g)(n/g)) with g = gcd(m,n); stays squarefree.
    friend RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b) {
        RadicalScalar r;
        for (const auto& [d1, q1] : a.terms_) {
            for (const auto& [d2, q2] : b.terms_) {
                std::int64_t g = std::gcd(d1, d2);
                r.add_term((d1 / g) * (d2 / g), q1 * q2 * Rational(g));
            }
        }
        return r;
    }
    friend RadicalScalar operator*(const RadicalScalar& a, const Rational& c) {
        RadicalScalar r;
        if (c.is_zero()) return r;
        for (const auto& [d, q] : a.terms_) r.terms_[d] = q * c;
        return r;
    }

    RadicalScalar& operator+=(const RadicalScalar& o) { return *this = *this + o; }
    RadicalScalar& operator-=(const RadicalScalar& o) { return *this = *this - o; }
    RadicalScalar& operator*=(const RadicalScalar& o) { return *this = *this * o; }

    friend bool operator==(const RadicalScalar&, const RadicalScalar&) = default;
    friend auto operator<=>(const RadicalScalar&, const RadicalScalar&) = default;

    /// Inverse of a single-term c*sqrt(d): (1/(c d)) sqrt(d). Anything else is
    /// out of scope for this ring.
    RadicalScalar invert_single_term() const {
        if (terms_.size() != 1) {
            throw UnsupportedDivisionError("inverse requires exactly one radical term, got " +
                                           str());
        }
        auto [d, c] = *terms_.begin();
        RadicalScalar r;
        r.terms_[d] = Rational(1) / (c * Rational(d));
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [d, q] : terms_) {
            std::string mag = q.abs().str();
            std::string piece;
            if (d == 1) {
                piece = mag;
            } else {
                piece = (mag == "1" ? "" : mag + "*") + "sqrt(" + std::to_string(d) + ")";
            }
            if (first) {
                s += (q.is_negative() ? "-" : "") + piece;
                first = false;
            } else {
                s += (q.is_negative() ? " - " : " + ") + piece;
            }
        }
        return s;
    }

    /// Report-only decimal rendering; never used in comparisons.
    double to_double() const {
        double v = 0;
        for (const auto& [d, q] : terms_) v += q.to_double() * std::sqrt(static_cast<double>(d));
        return v;
    }

  private:
    void add_term(std::int64_t d, const Rational& q) {
        if (q.is_zero()) return;
        auto it = terms_.find(d);
        if (it == terms_.end()) {
            terms_[d] = q;
        } else {
            it->second += q;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<std::int64_t, Rational> terms_;
};

inline RadicalScalar operator*(const Rational& c, const RadicalScalar& a) { return a * c; }

}  // namespace colorsuper
