#pragma once

#include <vector>

#include "colorsuper/rational.hpp"

namespace colorsuper {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

namespace detail {

using ZRow = std::vector<BigInt>;

inline BigInt row_content(const ZRow& r) {
    BigInt g = 0;
    for (const BigInt& v : r) {
        g = boost::multiprecision::gcd(g, v < 0 ? BigInt(-v) : v);
        if (g == 1) break;
    }
    return g;
}

inline ZRow to_integer_row(const QVector& q) {
    BigInt l = 1;
    for (const Rational& x : q) l = boost::multiprecision::lcm(l, x.den());
    ZRow r(q.size());
    for (std::size_t j = 0; j < q.size(); ++j) r[j] = q[j].num() * (l / q[j].den());
    BigInt g = row_content(r);
    if (g > 1) {
        for (BigInt& v : r) v /= g;
    }
    return r;
}

}  // namespace detail

/// Row echelon form over Z, shared rowspace with the rational input.
struct EchelonForm {
    std::vector<detail::ZRow> rows;  // nonzero rows, staircase shape
    std::vector<int> pivot_cols;     // one per row, strictly increasing
    int cols{0};
    int rank() const { return static_cast<int>(rows.size()); }
};

/// Fraction-free elimination: rows are combined by cross-multiplication
/// (piv*row_i - lead*row_piv) and reduced to primitive integer content, so
/// no rational arithmetic ever appears during the sweep.
inline EchelonForm echelon_fraction_free(const QMatrix& m) {
    EchelonForm ef;
    if (m.empty()) return ef;
    ef.cols = static_cast<int>(m[0].size());
    std::vector<detail::ZRow> rows;
    rows.reserve(m.size());
    for (const QVector& r : m) rows.push_back(detail::to_integer_row(r));

    std::size_t pivot_row = 0;
    for (int c = 0; c < ef.cols && pivot_row < rows.size(); ++c) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        const detail::ZRow& pr = rows[pivot_row];
        for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            BigInt lead = rows[i][c];
            for (int j = 0; j < ef.cols; ++j) rows[i][j] = pr[c] * rows[i][j] - lead * pr[j];
            BigInt g = detail::row_content(rows[i]);
            if (g > 1) {
                for (BigInt& v : rows[i]) v /= g;
            }
        }
        ef.pivot_cols.push_back(c);
        ++pivot_row;
    }
    rows.resize(pivot_row);
    ef.rows = std::move(rows);
    return ef;
}

namespace detail {

/// Back-substitute pivot coordinates given fixed free coordinates.
inline void back_substitute(const EchelonForm& ef, QVector& v) {
    for (int r = ef.rank() - 1; r >= 0; --r) {
        int p = ef.pivot_cols[r];
        Rational acc;
        for (int j = p + 1; j < ef.cols; ++j) {
            if (ef.rows[r][j] != 0 && !v[j].is_zero()) acc += Rational(ef.rows[r][j]) * v[j];
        }
        v[p] = -acc / Rational(ef.rows[r][p]);
    }
}

/// Scale to a primitive integer vector with positive leading entry.
inline void canonicalize(QVector& v) {
    BigInt l = 1;
    for (const Rational& x : v) l = boost::multiprecision::lcm(l, x.den());
    BigInt g = 0;
    for (const Rational& x : v) {
        BigInt n = x.num() * (l / x.den());
        g = boost::multiprecision::gcd(g, n < 0 ? BigInt(-n) : n);
    }
    if (g == 0) return;
    Rational scale = Rational(l) / Rational(g);
    for (auto& x : v) x *= scale;
    for (const Rational& x : v) {
        if (x.is_zero()) continue;
        if (x.is_negative()) {
            for (auto& y : v) y = -y;
        }
        break;
    }
}

}  // namespace detail

/// Canonical basis of the right nullspace of an m x ncols rational matrix:
/// one primitive integer vector per free column, unit at its free column.
inline std::vector<QVector> nullspace_basis(const QMatrix& m, int ncols) {
    EchelonForm ef = echelon_fraction_free(m);
    ef.cols = ef.cols == 0 ? ncols : ef.cols;
    std::vector<bool> is_pivot(ncols, false);
    for (int p : ef.pivot_cols) is_pivot[p] = true;
    std::vector<QVector> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        QVector v(ncols);
        v[f] = Rational(1);
        detail::back_substitute(ef, v);
        detail::canonicalize(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

struct AffineSolution {
    bool consistent{false};
    QVector particular;              // free coordinates set to zero
    std::vector<QVector> nullspace;  // of the homogeneous part
    int freedom() const { return static_cast<int>(nullspace.size()); }
};

/// Exact solve of A u = b.
inline AffineSolution solve_affine(const QMatrix& a, const QVector& b) {
    AffineSolution sol;
    if (a.empty()) {
        sol.consistent = true;
        return sol;
    }
    const int n = static_cast<int>(a[0].size());
    QMatrix aug(a.size(), QVector(n + 1));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n] = b[i];
    }
    EchelonForm ef = echelon_fraction_free(aug);
    for (std::size_t r = 0; r < ef.rows.size(); ++r) {
        if (ef.pivot_cols[r] == n) return sol;  // 0 = nonzero row: inconsistent
    }
    sol.consistent = true;
    // particular solution: free vars zero, rhs column pinned to -1 trick
    QVector v(n + 1);
    v[n] = Rational(-1);
    detail::back_substitute(ef, v);
    v.resize(n);
    sol.particular = std::move(v);
    sol.nullspace = nullspace_basis(a, n);
    return sol;
}

}  // namespace colorsuper
