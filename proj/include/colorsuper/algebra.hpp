#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "colorsuper/errors.hpp"
#include "colorsuper/grading.hpp"
#include "colorsuper/rational.hpp"

namespace colorsuper {

struct Generator {
    std::string name;
    Grading grade;
};

/// Rational linear combination of generators, keyed by generator index.
using GenCombo = std::map<int, Rational>;

inline GenCombo& combo_add(GenCombo& x, int gen, const Rational& c) {
    if (c.is_zero()) return x;
    auto it = x.find(gen);
    if (it == x.end()) {
        x[gen] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) x.erase(it);
    }
    return x;
}

/// Z2 x Z2 graded algebra given by structure constants. Brackets are stored
/// only for index pairs i <= j in the fixed generator order; the reversed
/// orientation is derived through graded antisymmetry, and absent pairs are
/// zero.
class GradedAlgebra {
  public:
    GradedAlgebra(std::vector<Generator> gens,
                  std::map<std::pair<int, int>, GenCombo> table)
        : gens_(std::move(gens)), table_(std::move(table)) {
        const int n = size();
        if (n == 0) throw EmptyAlgebraError("algebra needs at least one generator");
        for (const auto& [key, combo] : table_) {
            auto [i, j] = key;
            if (i < 0 || j < 0 || i >= n || j >= n) throw SchemaError("bracket index out of range");
            if (i > j) throw SchemaError("bracket stored with i > j");
            for (const auto& [k, c] : combo) {
                if (k < 0 || k >= n) throw SchemaError("bracket target out of range");
            }
        }
    }

    int size() const { return static_cast<int>(gens_.size()); }
    const Generator& generator(int i) const { return gens_[i]; }
    const std::vector<Generator>& generators() const { return gens_; }
    Grading grade(int i) const { return gens_[i].grade; }
    const std::map<std::pair<int, int>, GenCombo>& table() const { return table_; }

    int index_of(const std::string& name) const {
        for (int i = 0; i < size(); ++i) {
            if (gens_[i].name == name) return i;
        }
        throw SchemaError("unknown generator '" + name + "'");
    }

    GenCombo bracket_gens(int i, int j) const {
        if (i <= j) {
            auto it = table_.find({i, j});
            return it == table_.end() ? GenCombo{} : it->second;
        }
        auto it = table_.find({j, i});
        GenCombo out;
        if (it == table_.end()) return out;
        Rational s(-bracket_sign(grade(i), grade(j)));
        for (const auto& [k, c] : it->second) out[k] = c * s;
        return out;
    }

    GenCombo bracket(const GenCombo& x, const GenCombo& y) const {
        GenCombo out;
        for (const auto& [i, ci] : x) {
            if (i >= size()) throw SchemaError("unknown generator index");
            for (const auto& [j, cj] : y) {
                if (j >= size()) throw SchemaError("unknown generator index");
                for (const auto& [k, ck] : bracket_gens(i, j)) combo_add(out, k, ci * cj * ck);
            }
        }
        return out;
    }

    /// [[X,[[Y,Z]] ]] - [[ [[X,Y]],Z]] - (-1)^(a.b)[[Y,[[X,Z]] ]] on generators.
    GenCombo jacobi_residual(int i, int j, int k) const {
        GenCombo x{{i, Rational(1)}}, y{{j, Rational(1)}}, z{{k, Rational(1)}};
        GenCombo out = bracket(x, bracket(y, z));
        for (const auto& [t, c] : bracket(bracket(x, y), z)) combo_add(out, t, -c);
        Rational s(bracket_sign(grade(i), grade(j)));
        for (const auto& [t, c] : bracket(y, bracket(x, z))) combo_add(out, t, -(s * c));
        return out;
    }

    std::string combo_str(const GenCombo& x) const {
        if (x.empty()) return "0";
        std::string s;
        for (const auto& [i, c] : x) {
            if (!s.empty()) s += c.is_negative() ? " - " : " + ";
            else if (c.is_negative()) s += "-";
            Rational a = c.abs();
            s += (a == Rational(1) ? "" : a.str() + "*") + gens_[i].name;
        }
        return s;
    }

  private:
    std::vector<Generator> gens_;
    std::map<std::pair<int, int>, GenCombo> table_;
};

struct AlgebraCheck {
    std::string name;
    bool pass{false};
    std::string detail;
};

struct AlgebraValidation {
    std::vector<AlgebraCheck> checks;
    long long triples_total{0};
    long long triples_zero{0};
    bool pass() const {
        for (const auto& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
};

/// Grading closure on every stored pair, antisymmetry consistency of the
/// diagonal, and the graded Jacobi identity over all ordered generator
/// triples. Failures are report entries, never exceptions.
inline AlgebraValidation validate_algebra(const GradedAlgebra& alg) {
    AlgebraValidation report;
    {
        AlgebraCheck c{"grading-closure", true, ""};
        for (const auto& [key, combo] : alg.table()) {
            Grading g = alg.grade(key.first) + alg.grade(key.second);
            for (const auto& [k, coeff] : combo) {
                if (alg.grade(k) != g) {
                    c.pass = false;
                    c.detail += "pair (" + alg.generator(key.first).name + "," +
                                alg.generator(key.second).name + ") target " +
                                alg.generator(k).name + " breaks grade additivity; ";
                }
            }
        }
        if (c.pass) c.detail = "all stored pairs grade-additive";
        report.checks.push_back(std::move(c));
    }
    {
        // For dot(a,a) = 0 the bracket of a generator with itself must vanish.
        AlgebraCheck c{"antisymmetry-diagonal", true, ""};
        for (int i = 0; i < alg.size(); ++i) {
            if (dot(alg.grade(i), alg.grade(i)) == 0 && !alg.bracket_gens(i, i).empty()) {
                c.pass = false;
                c.detail += "self-bracket of even " + alg.generator(i).name + " must be zero; ";
            }
        }
        if (c.pass) c.detail = "diagonal consistent with graded antisymmetry";
        report.checks.push_back(std::move(c));
    }
    {
        AlgebraCheck c{"graded-jacobi", true, ""};
        const int n = alg.size();
        report.triples_total = static_cast<long long>(n) * n * n;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                for (int k = 0; k < n; ++k) {
                    GenCombo r = alg.jacobi_residual(i, j, k);
                    if (r.empty()) {
                        ++report.triples_zero;
                    } else if (c.pass || c.detail.size() < 4096) {
                        c.pass = false;
                        c.detail += "triple (" + alg.generator(i).name + "," +
                                    alg.generator(j).name + "," + alg.generator(k).name +
                                    ") residual " + alg.combo_str(r) + "; ";
                    } else {
                        c.pass = false;
                    }
                }
            }
        }
        if (c.pass) {
            c.detail = std::to_string(report.triples_zero) + "/" +
                       std::to_string(report.triples_total) + " triples zero";
        }
        report.checks.push_back(std::move(c));
    }
    return report;
}

/// Closure check for a designated generator subset: do all pairwise brackets
/// land back in the span of the subset?
inline bool subset_closed(const GradedAlgebra& alg, const std::vector<int>& subset) {
    std::vector<bool> in(alg.size(), false);
    for (int i : subset) in.at(i) = true;
    for (int i : subset) {
        for (int j : subset) {
            for (const auto& [k, c] : alg.bracket_gens(i, j)) {
                if (!in[k]) return false;
            }
        }
    }
    return true;
}

// ------------------------------------------------------------------ presets

/// Ten-generator preset. Frozen order (also the PBW order):
/// L+, a+, a~+, L~+, R, R~, L-, a-, a~-, L~-.
inline GradedAlgebra preset_ten() {
    std::vector<Generator> g = {
        {"L+", {0, 0}}, {"a+", {0, 1}}, {"a~+", {1, 0}}, {"L~+", {1, 1}}, {"R", {0, 0}},
        {"R~", {1, 1}}, {"L-", {0, 0}}, {"a-", {0, 1}},  {"a~-", {1, 0}}, {"L~-", {1, 1}},
    };
    auto one = [](int k, long long c) { return GenCombo{{k, Rational(c)}}; };
    std::map<std::pair<int, int>, GenCombo> t;
    t[{0, 4}] = one(0, -2);  // [L+,R]  = -2 L+
    t[{4, 6}] = one(6, -2);  // [R,L-]  = -2 L-
    t[{3, 4}] = one(3, -2);  // [L~+,R] = -2 L~+
    t[{4, 9}] = one(9, -2);  // [R,L~-] = -2 L~-
    t[{1, 4}] = one(1, -1);  // [a+,R]  = -a+
    t[{4, 7}] = one(7, -1);  // [R,a-]  = -a-
    t[{2, 4}] = one(2, -1);  // [a~+,R] = -a~+
    t[{4, 8}] = one(8, -1);  // [R,a~-] = -a~-
    t[{0, 5}] = one(3, -2);  // [L+,R~] = -2 L~+
    t[{5, 6}] = one(9, -2);  // [R~,L-] = -2 L~-
    t[{3, 5}] = one(0, -2);  // [L~+,R~] = -2 L+
    t[{5, 9}] = one(6, -2);  // [R~,L~-] = -2 L-
    t[{1, 5}] = one(2, 1);   // {a+,R~}  = a~+
    t[{5, 7}] = one(8, 1);   // {R~,a-}  = a~-
    t[{2, 5}] = one(1, 1);   // {a~+,R~} = a+
    t[{5, 8}] = one(7, 1);   // {R~,a~-} = a-
    t[{0, 6}] = one(4, -1);  // [L+,L-]  = -R
    t[{0, 9}] = one(5, -1);  // [L+,L~-] = -R~
    t[{3, 6}] = one(5, -1);  // [L~+,L-] = -R~
    t[{3, 9}] = one(4, -1);  // [L~+,L~-] = -R
    t[{0, 8}] = one(2, 1);   // [L+,a~-] = a~+
    t[{2, 6}] = one(8, 1);   // [a~+,L-] = a~-
    t[{0, 7}] = one(1, -1);  // [L+,a-]  = -a+
    t[{1, 6}] = one(7, -1);  // [a+,L-]  = -a-
    t[{3, 7}] = one(2, -1);  // {L~+,a-} = -a~+
    t[{1, 9}] = one(8, -1);  // {a+,L~-} = -a~-
    t[{3, 8}] = one(1, 1);   // {L~+,a~-} = a+
    t[{2, 9}] = one(7, 1);   // {a~+,L~-} = a-
    t[{1, 7}] = one(4, 2);   // {a+,a-}  = 2R
    t[{1, 8}] = one(5, 2);   // [a+,a~-] = 2R~
    t[{2, 7}] = one(5, 2);   // [a~+,a-] = 2R~
    t[{2, 8}] = one(4, 2);   // {a~+,a~-} = 2R
    t[{1, 2}] = one(3, -4);  // [a+,a~+] = -4 L~+
    t[{7, 8}] = one(9, 4);   // [a-,a~-] = 4 L~-
    t[{1, 1}] = one(0, 4);   // {a+,a+}  = 4 L+
    t[{7, 7}] = one(6, 4);   // {a-,a-}  = 4 L-
    t[{2, 2}] = one(0, -4);  // {a~+,a~+} = -4 L+
    t[{8, 8}] = one(6, -4);  // {a~-,a~-} = -4 L-
    return {std::move(g), std::move(t)};
}

/// Eight-generator preset. Frozen order: L+, a+, a~+, R, R~, L-, a-, a~-.
inline GradedAlgebra preset_eight() {
    std::vector<Generator> g = {
        {"L+", {0, 0}}, {"a+", {0, 1}}, {"a~+", {1, 0}}, {"R", {0, 0}},
        {"R~", {1, 1}}, {"L-", {0, 0}}, {"a-", {0, 1}},  {"a~-", {1, 0}},
    };
    auto one = [](int k, long long c) { return GenCombo{{k, Rational(c)}}; };
    std::map<std::pair<int, int>, GenCombo> t;
    t[{0, 3}] = one(0, -2);  // [L+,R] = -2 L+
    t[{3, 5}] = one(5, -2);  // [R,L-] = -2 L-
    t[{0, 5}] = one(3, -1);  // [L+,L-] = -R
    t[{1, 3}] = one(1, -1);  // [a+,R]  = -a+
    t[{3, 6}] = one(6, -1);  // [R,a-]  = -a-
    t[{2, 3}] = one(2, -1);  // [a~+,R] = -a~+
    t[{3, 7}] = one(7, -1);  // [R,a~-] = -a~-
    t[{0, 6}] = one(1, -1);  // [L+,a-] = -a+
    t[{1, 5}] = one(6, -1);  // [a+,L-] = -a-
    t[{1, 4}] = one(2, 1);   // {a+,R~}  = a~+
    t[{4, 6}] = one(7, -1);  // {R~,a-}  = -a~-
    t[{2, 4}] = one(1, -1);  // {a~+,R~} = -a+
    t[{4, 7}] = one(6, 1);   // {R~,a~-} = a-
    t[{1, 6}] = one(3, 2);   // {a+,a-}  = 2R
    t[{1, 7}] = one(4, 2);   // [a+,a~-] = 2R~
    t[{2, 6}] = one(4, -2);  // [a~+,a-] = -2R~
    t[{2, 7}] = one(3, 2);   // {a~+,a~-} = 2R
    t[{0, 7}] = one(2, 1);   // [L+,a~-] = a~+
    t[{2, 5}] = one(7, 1);   // [a~+,L-] = a~-
    t[{1, 1}] = one(0, 4);   // {a+,a+}  = 4 L+
    t[{6, 6}] = one(5, 4);   // {a-,a-}  = 4 L-
    t[{2, 2}] = one(0, -4);  // {a~+,a~+} = -4 L+
    t[{7, 7}] = one(5, -4);  // {a~-,a~-} = -4 L-
    return {std::move(g), std::move(t)};
}

/// gl(m1,m2|n1,n2): elementary matrices E_ij with the block grading pattern
/// (0,0) | (1,1) | (1,0) | (0,1) and
/// [[E_ij, E_kl]] = d_jk E_il - (-1)^(d_ij . d_kl) d_il E_kj.
inline GradedAlgebra preset_gl(int m1, int m2, int n1, int n2) {
    if (m1 < 0 || m2 < 0 || n1 < 0 || n2 < 0) throw SchemaError("negative gl label");
    const int n = m1 + m2 + n1 + n2;
    if (n < 1) throw EmptyAlgebraError("gl(0,0|0,0) is empty");
    std::vector<Grading> d;
    auto block = [&](int count, Grading g) {
        for (int i = 0; i < count; ++i) d.push_back(g);
    };
    block(m1, {0, 0});
    block(m2, {1, 1});
    block(n1, {1, 0});
    block(n2, {0, 1});
    std::vector<Generator> gens;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            gens.push_back({"E" + std::to_string(i + 1) + std::to_string(j + 1), d[i] + d[j]});
        }
    }
    auto idx = [n](int i, int j) { return i * n + j; };
    std::map<std::pair<int, int>, GenCombo> t;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                for (int l = 0; l < n; ++l) {
                    int a = idx(i, j), b = idx(k, l);
                    if (a > b) continue;
                    GenCombo out;
                    if (j == k) combo_add(out, idx(i, l), Rational(1));
                    if (i == l) {
                        combo_add(out, idx(k, j),
                                  Rational(-bracket_sign(gens[a].grade, gens[b].grade)));
                    }
                    if (!out.empty()) t[{a, b}] = std::move(out);
                }
            }
        }
    }
    return {std::move(gens), std::move(t)};
}

}  // namespace colorsuper
