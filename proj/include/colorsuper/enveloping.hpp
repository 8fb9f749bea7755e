#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colorsuper/algebra.hpp"
#include "colorsuper/exact_linalg.hpp"
#include "colorsuper/linform.hpp"

namespace colorsuper {

/// PBW monomial: factors strictly increasing in the frozen generator order.
/// Generators with dot(a,a) = 1 square into the bracket, so their exponent
/// is always 1. The empty key is the unit.
using PBWKey = std::vector<std::pair<int, int>>;  // (generator, exponent >= 1)

using Word = std::vector<int>;
using WordPoly = std::map<Word, LinForm>;
using EnvPoly = std::map<PBWKey, LinForm>;

inline int pbw_degree(const PBWKey& k) {
    int d = 0;
    for (const auto& [g, e] : k) d += e;
    return d;
}

inline Grading pbw_grade(const GradedAlgebra& alg, const PBWKey& k) {
    Grading g{0, 0};
    for (const auto& [gen, e] : k) {
        if (e % 2) g = g + alg.grade(gen);
    }
    return g;
}

inline Word pbw_word(const PBWKey& k) {
    Word w;
    for (const auto& [g, e] : k) w.insert(w.end(), e, g);
    return w;
}

inline std::string pbw_str(const GradedAlgebra& alg, const PBWKey& k) {
    if (k.empty()) return "1";
    std::string s;
    for (const auto& [g, e] : k) {
        if (!s.empty()) s += "*";
        s += alg.generator(g).name;
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

inline std::string env_str(const GradedAlgebra& alg, const EnvPoly& p) {
    if (p.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : p) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*" + pbw_str(alg, k);
    }
    return s;
}

inline void env_add(EnvPoly& p, const PBWKey& k, const LinForm& c) {
    if (c.is_zero()) return;
    auto it = p.find(k);
    if (it == p.end()) {
        p[k] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

enum class RewriteStrategy { FirstReducible, LastReducible };

/// Rewrite every word into the PBW basis: adjacent out-of-order pairs become
/// (-1)^(a.b) (swap) + bracket, and X*X with dot(a,a)=1 becomes (1/2)[[X,X]].
/// Terminates by the degree-then-inversion well-ordering; the result does not
/// depend on the strategy (tested), only the intermediate path does.
inline EnvPoly normal_order(const GradedAlgebra& alg, const WordPoly& input,
                            RewriteStrategy strategy = RewriteStrategy::FirstReducible) {
    EnvPoly out;
    std::vector<std::pair<Word, LinForm>> work(input.begin(), input.end());
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        if (c.is_zero()) continue;
        std::optional<std::size_t> red;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            bool reducible =
                w[i] > w[i + 1] ||
                (w[i] == w[i + 1] && dot(alg.grade(w[i]), alg.grade(w[i])) == 1);
            if (reducible) {
                red = i;
                if (strategy == RewriteStrategy::FirstReducible) break;
            }
        }
        if (!red) {
            PBWKey key;
            for (int g : w) {
                if (!key.empty() && key.back().first == g) {
                    ++key.back().second;
                } else {
                    key.push_back({g, 1});
                }
            }
            env_add(out, key, c);
            continue;
        }
        const std::size_t i = *red;
        const int a = w[i], b = w[i + 1];
        auto splice = [&](int gen) {
            Word nw(w.begin(), w.begin() + static_cast<long>(i));
            nw.push_back(gen);
            nw.insert(nw.end(), w.begin() + static_cast<long>(i) + 2, w.end());
            return nw;
        };
        if (a == b) {
            for (const auto& [k, ck] : alg.bracket_gens(a, a)) {
                work.push_back({splice(k), c * (Rational(1, 2) * ck)});
            }
        } else {
            Word sw = w;
            std::swap(sw[i], sw[i + 1]);
            work.push_back({std::move(sw), c * Rational(bracket_sign(alg.grade(a), alg.grade(b)))});
            for (const auto& [k, ck] : alg.bracket_gens(a, b)) {
                work.push_back({splice(k), c * ck});
            }
        }
    }
    return out;
}

inline EnvPoly normal_order(const GradedAlgebra& alg, const Word& w) {
    return normal_order(alg, WordPoly{{w, LinForm(1)}});
}

/// Common sector of a homogeneous polynomial (constants are ignored).
inline std::optional<Grading> env_sector(const GradedAlgebra& alg, const EnvPoly& p) {
    std::optional<Grading> sec;
    for (const auto& [k, c] : p) {
        if (k.empty()) continue;
        Grading g = pbw_grade(alg, k);
        if (!sec) {
            sec = g;
        } else if (*sec != g) {
            throw SectorError("polynomial mixes sectors " + sec->str() + " and " + g.str());
        }
    }
    return sec;
}

/// normal_order(p*x - (-1)^(s.g) x*p) for homogeneous p of sector s.
inline EnvPoly graded_commutator(const GradedAlgebra& alg, const EnvPoly& p, int x) {
    auto sec = env_sector(alg, p);
    Grading s = sec.value_or(Grading{0, 0});
    Rational sign(bracket_sign(s, alg.grade(x)));
    WordPoly wp;
    for (const auto& [k, c] : p) {
        Word w = pbw_word(k);
        Word right = w;
        right.push_back(x);
        Word left;
        left.push_back(x);
        left.insert(left.end(), w.begin(), w.end());
        wp[right] = (wp.count(right) ? wp[right] : LinForm()) + c;
        wp[left] = (wp.count(left) ? wp[left] : LinForm()) - c * sign;
    }
    return normal_order(alg, wp);
}

/// Plain commutator p*x - x*p, regardless of sectors.
inline EnvPoly ordinary_commutator(const GradedAlgebra& alg, const EnvPoly& p, int x) {
    WordPoly wp;
    for (const auto& [k, c] : p) {
        Word w = pbw_word(k);
        Word right = w;
        right.push_back(x);
        Word left;
        left.push_back(x);
        left.insert(left.end(), w.begin(), w.end());
        wp[right] = (wp.count(right) ? wp[right] : LinForm()) + c;
        wp[left] = (wp.count(left) ? wp[left] : LinForm()) - c;
    }
    return normal_order(alg, wp);
}

/// All PBW monomials of the sector with degree <= 2, plus the constant for
/// sector (0,0). Enumeration order: constant, degree 1, degree 2 by index.
inline std::vector<PBWKey> casimir_ansatz(const GradedAlgebra& alg, Grading sector) {
    std::vector<PBWKey> mons;
    if (sector == Grading{0, 0}) mons.push_back({});
    for (int i = 0; i < alg.size(); ++i) {
        if (alg.grade(i) == sector) mons.push_back({{i, 1}});
    }
    for (int i = 0; i < alg.size(); ++i) {
        for (int j = i; j < alg.size(); ++j) {
            if (!(alg.grade(i) + alg.grade(j) == sector)) continue;
            if (i == j) {
                if (dot(alg.grade(i), alg.grade(i)) == 1) continue;  // exponent cap
                mons.push_back({{i, 2}});
            } else {
                mons.push_back({{i, 1}, {j, 1}});
            }
        }
    }
    return mons;
}

struct CasimirSolution {
    Grading sector;
    bool graded_definition{true};
    std::vector<PBWKey> ansatz;
    // Nontrivial nullspace rays, canonical primitive vectors over the ansatz.
    std::vector<std::map<PBWKey, Rational>> rays;
    // The constant is always central; reported separately from the rays.
    bool constant_in_ansatz{false};
};

/// Build the general degree-<=2 ansatz of the sector, demand a vanishing
/// (graded or ordinary) commutator against every generator, and return a
/// basis of the resulting nullspace.
inline CasimirSolution solve_casimir(const GradedAlgebra& alg, Grading sector,
                                     bool ordinary = false) {
    CasimirSolution sol;
    sol.sector = sector;
    sol.graded_definition = !ordinary;
    sol.ansatz = casimir_ansatz(alg, sector);

    EnvPoly ansatz;
    int constant_id = -1;
    for (std::size_t t = 0; t < sol.ansatz.size(); ++t) {
        if (sol.ansatz[t].empty()) {
            constant_id = static_cast<int>(t);
            sol.constant_in_ansatz = true;
            continue;  // scalars are always central; kept out of the system
        }
        ansatz[sol.ansatz[t]] = LinForm::unknown(static_cast<int>(t));
    }

    QMatrix rows;
    for (int x = 0; x < alg.size(); ++x) {
        EnvPoly res = ordinary ? ordinary_commutator(alg, ansatz, x)
                               : graded_commutator(alg, ansatz, x);
        for (const auto& [key, form] : res) {
            QVector row(sol.ansatz.size());
            for (const auto& [id, c] : form.coefficients()) row[static_cast<std::size_t>(id)] = c;
            rows.push_back(std::move(row));
        }
    }
    auto basis = nullspace_basis(rows, static_cast<int>(sol.ansatz.size()));
    for (auto& vec : basis) {
        // the constant column never enters an equation: its unit ray is the
        // trivial solution, not reported as a ray
        if (constant_id >= 0 && !vec[static_cast<std::size_t>(constant_id)].is_zero()) continue;
        std::map<PBWKey, Rational> ray;
        for (std::size_t t = 0; t < vec.size(); ++t) {
            if (!vec[t].is_zero()) ray[sol.ansatz[t]] = vec[t];
        }
        if (!ray.empty()) sol.rays.push_back(std::move(ray));
    }
    return sol;
}

/// Evaluate an enveloping polynomial with plain rational coefficients.
inline EnvPoly env_from_rational(const std::map<PBWKey, Rational>& p) {
    EnvPoly out;
    for (const auto& [k, c] : p) {
        if (!c.is_zero()) out[k] = LinForm(c);
    }
    return out;
}

}  // namespace colorsuper
