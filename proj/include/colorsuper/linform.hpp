#pragma once

#include <map>
#include <string>

#include "colorsuper/errors.hpp"
#include "colorsuper/rational.hpp"

namespace colorsuper {

/// Rational-linear form c0 + sum c_i u_i in indexed symbolic unknowns.
/// Products are defined only when at most one factor carries unknowns;
/// every solver in this project stays linear by construction.
class LinForm {
  public:
    LinForm() = default;
    LinForm(Rational c) : const_(std::move(c)) {}  // NOLINT: implicit by design
    LinForm(long long c) : const_(c) {}            // NOLINT

    static LinForm unknown(int id, Rational coeff = Rational(1)) {
        LinForm f;
        if (!coeff.is_zero()) f.coeffs_[id] = std::move(coeff);
        return f;
    }

    bool is_zero() const { return const_.is_zero() && coeffs_.empty(); }
    bool is_constant() const { return coeffs_.empty(); }
    const Rational& constant_part() const { return const_; }
    const std::map<int, Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(int id) const {
        auto it = coeffs_.find(id);
        return it == coeffs_.end() ? Rational() : it->second;
    }

    friend LinForm operator+(const LinForm& a, const LinForm& b) {
        LinForm r = a;
        r.const_ += b.const_;
        for (const auto& [id, c] : b.coeffs_) r.add(id, c);
        return r;
    }
    friend LinForm operator-(const LinForm& a, const LinForm& b) {
        LinForm r = a;
        r.const_ -= b.const_;
        for (const auto& [id, c] : b.coeffs_) r.add(id, -c);
        return r;
    }
    LinForm operator-() const {
        LinForm r;
        r.const_ = -const_;
        for (const auto& [id, c] : coeffs_) r.coeffs_[id] = -c;
        return r;
    }
    friend LinForm operator*(const LinForm& a, const Rational& c) {
        LinForm r;
        if (c.is_zero()) return r;
        r.const_ = a.const_ * c;
        for (const auto& [id, q] : a.coeffs_) r.coeffs_[id] = q * c;
        return r;
    }
    friend LinForm operator*(const Rational& c, const LinForm& a) { return a * c; }
    friend LinForm operator*(const LinForm& a, const LinForm& b) {
        if (!a.is_constant() && !b.is_constant()) {
            throw NonlinearError("product of two unknown-bearing coefficients");
        }
        return a.is_constant() ? b * a.const_ : a * b.const_;
    }

    LinForm& operator+=(const LinForm& o) { return *this = *this + o; }
    LinForm& operator-=(const LinForm& o) { return *this = *this - o; }

    friend bool operator==(const LinForm&, const LinForm&) = default;

    /// Substitute values for (all) unknowns.
    Rational evaluate(const std::map<int, Rational>& values) const {
        Rational r = const_;
        for (const auto& [id, c] : coeffs_) {
            auto it = values.find(id);
            if (it == values.end()) throw DomainError("unbound unknown u" + std::to_string(id));
            r += c * it->second;
        }
        return r;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        if (!const_.is_zero()) s = const_.str();
        for (const auto& [id, c] : coeffs_) {
            if (!s.empty()) s += c.is_negative() ? " - " : " + ";
            else if (c.is_negative()) s += "-";
            Rational a = c.abs();
            s += (a == Rational(1) ? "" : a.str() + "*") + "u" + std::to_string(id);
        }
        return s;
    }

  private:
    void add(int id, const Rational& c) {
        if (c.is_zero()) return;
        auto it = coeffs_.find(id);
        if (it == coeffs_.end()) {
            coeffs_[id] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    Rational const_;
    std::map<int, Rational> coeffs_;
};

}  // namespace colorsuper
