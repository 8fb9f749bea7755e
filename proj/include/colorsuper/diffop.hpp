#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colorsuper/algebra.hpp"
#include "colorsuper/enveloping.hpp"
#include "colorsuper/exact_linalg.hpp"
#include "colorsuper/linform.hpp"

namespace colorsuper {

// Graded polynomial algebra in the module parameters x, z, theta, psi plus
// the formal weights r (commuting) and rt (grade (1,1), sign-carrying).
// Canonical variable order: x < z < theta < psi < r < rt; theta and psi
// square to zero; all reordering signs live in the coefficients.

enum GVar : int { GvX = 0, GvZ = 1, GvTheta = 2, GvPsi = 3, GvR = 4, GvRt = 5 };

inline const char* gvar_name(int v) {
    static const char* names[6] = {"x", "z", "theta", "psi", "r", "rt"};
    return names[v];
}

struct VarContext {
    std::string preset;             // "ten" | "eight"
    std::array<Grading, 6> grades;  // per GVar
    std::vector<int> module_vars;   // variables of the polynomial module

    static VarContext ten() {
        return {"ten",
                {Grading{0, 0}, Grading{1, 1}, Grading{0, 1}, Grading{1, 0}, Grading{0, 0},
                 Grading{1, 1}},
                {GvX, GvZ, GvTheta, GvPsi}};
    }
    static VarContext eight() {
        // no x; z is even here
        return {"eight",
                {Grading{0, 0}, Grading{0, 0}, Grading{0, 1}, Grading{1, 0}, Grading{0, 0},
                 Grading{1, 1}},
                {GvZ, GvTheta, GvPsi}};
    }
    static VarContext for_preset(const std::string& p) {
        if (p == "ten") return ten();
        if (p == "eight") return eight();
        throw SchemaError("unknown preset '" + p + "'");
    }
};

struct GMono {
    std::array<int, 6> e{0, 0, 0, 0, 0, 0};
    friend bool operator==(const GMono&, const GMono&) = default;
    friend auto operator<=>(const GMono&, const GMono&) = default;
    int module_degree(const VarContext& ctx) const {
        int d = 0;
        for (int v : ctx.module_vars) d += e[static_cast<std::size_t>(v)];
        return d;
    }
};

inline GMono gmono_one() { return {}; }
inline GMono gmono(std::initializer_list<std::pair<int, int>> exps) {
    GMono m;
    for (auto [v, k] : exps) m.e[static_cast<std::size_t>(v)] = k;
    return m;
}

inline Grading mono_grade(const VarContext& ctx, const GMono& m) {
    Grading g{0, 0};
    for (int v = 0; v < 6; ++v) {
        if (m.e[static_cast<std::size_t>(v)] % 2) g = g + ctx.grades[static_cast<std::size_t>(v)];
    }
    return g;
}

/// m1 * m2 reordered into canonical variable order; nullopt kills theta^2 and
/// psi^2. The sign counts inversions weighted by the grade dot products.
inline std::optional<std::pair<int, GMono>> mono_mul(const VarContext& ctx, const GMono& m1,
                                                     const GMono& m2) {
    if ((m1.e[GvTheta] && m2.e[GvTheta]) || (m1.e[GvPsi] && m2.e[GvPsi])) return std::nullopt;
    int s = 0;
    for (int u = 0; u < 6; ++u) {
        if (!m2.e[static_cast<std::size_t>(u)]) continue;
        for (int v = u + 1; v < 6; ++v) {
            if (m1.e[static_cast<std::size_t>(v)]) {
                s += m1.e[static_cast<std::size_t>(v)] * m2.e[static_cast<std::size_t>(u)] *
                     dot(ctx.grades[static_cast<std::size_t>(v)],
                         ctx.grades[static_cast<std::size_t>(u)]);
            }
        }
    }
    GMono m;
    for (int v = 0; v < 6; ++v) {
        m.e[static_cast<std::size_t>(v)] =
            m1.e[static_cast<std::size_t>(v)] + m2.e[static_cast<std::size_t>(v)];
    }
    return std::make_pair(s % 2 ? -1 : 1, m);
}

/// d/d(var) on a canonical monomial: pick up one sign per variable passed on
/// the way in (graded Leibniz), then lower the exponent.
inline std::optional<std::pair<Rational, GMono>> mono_deriv(const VarContext& ctx, int var,
                                                            const GMono& m) {
    if (m.e[static_cast<std::size_t>(var)] == 0) return std::nullopt;
    int s = 0;
    for (int u = 0; u < var; ++u) {
        if (m.e[static_cast<std::size_t>(u)]) {
            s += m.e[static_cast<std::size_t>(u)] *
                 dot(ctx.grades[static_cast<std::size_t>(var)],
                     ctx.grades[static_cast<std::size_t>(u)]);
        }
    }
    Rational c(static_cast<long long>(m.e[static_cast<std::size_t>(var)]));
    if (s % 2) c = -c;
    GMono out = m;
    --out.e[static_cast<std::size_t>(var)];
    return std::make_pair(c, out);
}

using GPoly = std::map<GMono, LinForm>;

inline void gpoly_add(GPoly& p, const GMono& m, const LinForm& c) {
    if (c.is_zero()) return;
    auto it = p.find(m);
    if (it == p.end()) {
        p[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

inline GPoly gpoly_sum(const GPoly& a, const GPoly& b, const Rational& c = Rational(1)) {
    GPoly out = a;
    for (const auto& [m, q] : b) gpoly_add(out, m, q * c);
    return out;
}

inline GPoly gpoly_mul(const VarContext& ctx, const GPoly& a, const GPoly& b) {
    GPoly out;
    for (const auto& [m1, c1] : a) {
        for (const auto& [m2, c2] : b) {
            if (auto r = mono_mul(ctx, m1, m2)) {
                gpoly_add(out, r->second, (c1 * c2) * Rational(r->first));
            }
        }
    }
    return out;
}

inline std::string gmono_str(const GMono& m) {
    std::string s;
    for (int v = 0; v < 6; ++v) {
        int e = m.e[static_cast<std::size_t>(v)];
        if (!e) continue;
        if (!s.empty()) s += "*";
        s += gvar_name(v);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

inline std::string gpoly_str(const GPoly& p) {
    if (p.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : p) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*" + gmono_str(m);
    }
    return s;
}

// ---------------------------------------------------------------- operators

/// Derivative slot pair of an operator term; kNone = pure multiplication.
/// First-order terms keep d1 = kNone; second-order pairs appear only inside
/// brackets and Casimir substitution, where they must cancel.
struct DKey {
    static constexpr int kNone = -1;
    int d1{kNone};
    int d2{kNone};
    friend bool operator==(const DKey&, const DKey&) = default;
    friend auto operator<=>(const DKey&, const DKey&) = default;
    int order() const { return (d1 != kNone ? 1 : 0) + (d2 != kNone ? 1 : 0); }
};

using DiffOp = std::map<DKey, GPoly>;

inline DiffOp op_term(const GPoly& coeff, int d = DKey::kNone) {
    if (coeff.empty()) return {};
    return {{DKey{DKey::kNone, d}, coeff}};
}

inline void op_accumulate(DiffOp& a, const DKey& k, const GMono& m, const LinForm& c) {
    if (c.is_zero()) return;
    auto& p = a[k];
    gpoly_add(p, m, c);
    if (p.empty()) a.erase(k);
}

inline DiffOp op_sum(const DiffOp& a, const DiffOp& b, const Rational& c = Rational(1)) {
    DiffOp out = a;
    for (const auto& [k, p] : b) {
        for (const auto& [m, q] : p) op_accumulate(out, k, m, q * c);
    }
    return out;
}

inline bool op_is_zero(const DiffOp& a) { return a.empty(); }

inline Grading dkey_grade(const VarContext& ctx, const DKey& k) {
    Grading g{0, 0};
    if (k.d1 != DKey::kNone) g = g + ctx.grades[static_cast<std::size_t>(k.d1)];
    if (k.d2 != DKey::kNone) g = g + ctx.grades[static_cast<std::size_t>(k.d2)];
    return g;
}

/// Grade of a homogeneous operator; SectorError when terms disagree.
inline std::optional<Grading> op_grade(const VarContext& ctx, const DiffOp& op) {
    std::optional<Grading> grade;
    for (const auto& [k, p] : op) {
        Grading gk = dkey_grade(ctx, k);
        for (const auto& [m, c] : p) {
            Grading g = gk + mono_grade(ctx, m);
            if (!grade) {
                grade = g;
            } else if (*grade != g) {
                throw SectorError("operator is not grade-homogeneous: " + grade->str() + " vs " +
                                  g.str());
            }
        }
    }
    return grade;
}

/// Canonicalize a derivative pair d_u d_v; nullopt when u = v with dot = 1.
inline std::optional<std::pair<int, DKey>> dkey_pair(const VarContext& ctx, int u, int v) {
    if (u == v && dot(ctx.grades[static_cast<std::size_t>(u)],
                      ctx.grades[static_cast<std::size_t>(u)]) == 1) {
        return std::nullopt;
    }
    if (u <= v) return std::make_pair(1, DKey{u, v});
    int s = dot(ctx.grades[static_cast<std::size_t>(u)], ctx.grades[static_cast<std::size_t>(v)]);
    return std::make_pair(s ? -1 : 1, DKey{v, u});
}

/// A o B for first-order A, B. Second-order terms are kept so brackets can
/// check that they cancel.
inline DiffOp compose(const VarContext& ctx, const DiffOp& a, const DiffOp& b) {
    DiffOp out;
    for (const auto& [ka, pa] : a) {
        if (ka.d1 != DKey::kNone) throw NonRealizationError("compose expects first-order input");
        const int da = ka.d2;
        for (const auto& [kb, pb] : b) {
            if (kb.d1 != DKey::kNone) {
                throw NonRealizationError("compose expects first-order input");
            }
            const int db = kb.d2;
            for (const auto& [mb, cb] : pb) {
                const Grading gb = mono_grade(ctx, mb);
                for (const auto& [ma, ca] : pa) {
                    if (da == DKey::kNone) {
                        if (auto r = mono_mul(ctx, ma, mb)) {
                            op_accumulate(out, DKey{DKey::kNone, db}, r->second,
                                          (ca * cb) * Rational(r->first));
                        }
                        continue;
                    }
                    // ma * d_da acting on (mb * d_db f):
                    // derivative hits the coefficient ...
                    if (auto dm = mono_deriv(ctx, da, mb)) {
                        if (auto r = mono_mul(ctx, ma, dm->second)) {
                            op_accumulate(out, DKey{DKey::kNone, db}, r->second,
                                          (ca * cb) * (dm->first * Rational(r->first)));
                        }
                    }
                    // ... or passes it with the Leibniz sign
                    int sgn = dot(ctx.grades[static_cast<std::size_t>(da)], gb) ? -1 : 1;
                    if (auto r = mono_mul(ctx, ma, mb)) {
                        Rational coeff = Rational(r->first * sgn);
                        if (db == DKey::kNone) {
                            op_accumulate(out, DKey{DKey::kNone, da}, r->second,
                                          (ca * cb) * coeff);
                        } else if (auto dk = dkey_pair(ctx, da, db)) {
                            op_accumulate(out, dk->second, r->second,
                                          (ca * cb) * (coeff * Rational(dk->first)));
                        }
                    }
                }
            }
        }
    }
    return out;
}

/// A o B - (-1)^(g(A).g(B)) B o A, kept in canonical (possibly second-order)
/// form. Use first_order_or_throw to enforce closure.
inline DiffOp op_bracket(const VarContext& ctx, const DiffOp& a, const DiffOp& b) {
    Grading ga = op_grade(ctx, a).value_or(Grading{0, 0});
    Grading gb = op_grade(ctx, b).value_or(Grading{0, 0});
    return op_sum(compose(ctx, a, b), compose(ctx, b, a), Rational(-bracket_sign(ga, gb)));
}

inline DiffOp second_order_part(const DiffOp& op) {
    DiffOp out;
    for (const auto& [k, p] : op) {
        if (k.order() == 2) out[k] = p;
    }
    return out;
}

inline DiffOp first_order_or_throw(const VarContext& ctx, const DiffOp& op) {
    (void)ctx;
    for (const auto& [k, p] : op) {
        if (k.order() == 2) {
            throw NonRealizationError("bracket does not close: surviving second-order term d" +
                                      std::string(gvar_name(k.d1)) + " d" +
                                      std::string(gvar_name(k.d2)));
        }
    }
    return op;
}

/// Independent application path (never goes through compose).
inline GPoly apply_op(const VarContext& ctx, const DiffOp& op, const GPoly& arg) {
    GPoly out;
    for (const auto& [k, coeff] : op) {
        for (const auto& [ma, ca] : arg) {
            Rational factor(1);
            GMono cur = ma;
            bool dead = false;
            for (int d : {k.d2, k.d1}) {
                if (d == DKey::kNone) continue;
                auto dm = mono_deriv(ctx, d, cur);
                if (!dm) {
                    dead = true;
                    break;
                }
                factor *= dm->first;
                cur = dm->second;
            }
            if (dead) continue;
            for (const auto& [mc, cc] : coeff) {
                if (auto r = mono_mul(ctx, mc, cur)) {
                    gpoly_add(out, r->second, (cc * ca) * (factor * Rational(r->first)));
                }
            }
        }
    }
    return out;
}

inline std::string op_str(const DiffOp& op) {
    if (op.empty()) return "0";
    std::string s;
    for (const auto& [k, p] : op) {
        for (const auto& [m, c] : p) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")*" + gmono_str(m);
            if (k.d1 != DKey::kNone) s += "*d" + std::string(gvar_name(k.d1));
            if (k.d2 != DKey::kNone) s += "*d" + std::string(gvar_name(k.d2));
        }
    }
    return s;
}

// ------------------------------------------------------------- realizations

struct Realization {
    std::string preset;                  // matches VarContext / algebra preset
    std::map<std::string, DiffOp> ops;   // keyed by generator name
};

namespace diffop_detail {

inline GPoly gp(std::initializer_list<std::pair<long long, GMono>> terms) {
    GPoly p;
    for (const auto& [c, m] : terms) gpoly_add(p, m, LinForm(Rational(c)));
    return p;
}

}  // namespace diffop_detail

/// First-order realization of the ten-generator algebra, transcribed with the
/// sign glitch in the L~+ line resolved to "+" (repair_realization confirms
/// this reading as the unique consistent one).
inline Realization printed_realization_ten() {
    using diffop_detail::gp;
    const GMono x = gmono({{GvX, 1}}), z = gmono({{GvZ, 1}}), th = gmono({{GvTheta, 1}}),
                ps = gmono({{GvPsi, 1}}), r = gmono({{GvR, 1}}), rt = gmono({{GvRt, 1}});
    Realization re;
    re.preset = "ten";
    auto& o = re.ops;
    o["L-"] = op_term(gp({{1, gmono_one()}}), GvX);
    o["L~-"] = op_term(gp({{1, gmono_one()}}), GvZ);
    o["a-"] = op_sum(op_term(gp({{1, gmono_one()}}), GvTheta), op_term(gp({{2, th}}), GvX));
    o["a~-"] = op_sum(op_sum(op_term(gp({{1, gmono_one()}}), GvPsi), op_term(gp({{-2, ps}}), GvX)),
                      op_term(gp({{4, th}}), GvZ));
    o["R"] = op_sum(op_sum(op_term(gp({{1, r}})), op_term(gp({{2, x}}), GvX)),
                    op_sum(op_sum(op_term(gp({{2, z}}), GvZ), op_term(gp({{1, th}}), GvTheta)),
                           op_term(gp({{1, ps}}), GvPsi)));
    o["R~"] = op_sum(
        op_sum(op_term(gp({{1, rt}})),
               op_term(gp({{2, z}, {-4, gmono({{GvTheta, 1}, {GvPsi, 1}})}}), GvX)),
        op_sum(op_sum(op_term(gp({{2, x}}), GvZ), op_term(gp({{1, th}}), GvPsi)),
               op_term(gp({{1, ps}}), GvTheta)));
    o["a+"] = op_sum(
        op_sum(op_term(gp({{2, gmono({{GvTheta, 1}, {GvR, 1}})},
                           {-2, gmono({{GvPsi, 1}, {GvRt, 1}})}})),
               op_term(gp({{2, gmono({{GvX, 1}, {GvTheta, 1}})},
                           {2, gmono({{GvZ, 1}, {GvPsi, 1}})}}),
                       GvX)),
        op_sum(op_sum(op_term(gp({{2, gmono({{GvTheta, 1}, {GvPsi, 1}})}, {-1, z}}), GvPsi),
                      op_term(gp({{1, x}}), GvTheta)),
               op_term(gp({{-4, gmono({{GvZ, 1}, {GvTheta, 1}})}}), GvZ)));
    o["a~+"] = op_sum(
        op_sum(op_term(gp({{2, gmono({{GvPsi, 1}, {GvR, 1}})},
                           {-2, gmono({{GvTheta, 1}, {GvRt, 1}})}})),
               op_term(gp({{2, gmono({{GvZ, 1}, {GvTheta, 1}})},
                           {2, gmono({{GvX, 1}, {GvPsi, 1}})}}),
                       GvX)),
        op_sum(op_sum(op_term(gp({{1, z}, {-2, gmono({{GvTheta, 1}, {GvPsi, 1}})}}), GvTheta),
                      op_term(gp({{-1, x}}), GvPsi)),
               op_term(gp({{-4, gmono({{GvX, 1}, {GvTheta, 1}})}}), GvZ)));
    o["L+"] = op_sum(
        op_sum(op_term(gp({{1, gmono({{GvX, 1}, {GvR, 1}})},
                           {1, gmono({{GvZ, 1}, {GvRt, 1}})},
                           {-2, gmono({{GvTheta, 1}, {GvPsi, 1}, {GvRt, 1}})}})),
               op_term(gp({{1, gmono({{GvX, 2}})},
                           {1, gmono({{GvZ, 2}})},
                           {-4, gmono({{GvZ, 1}, {GvTheta, 1}, {GvPsi, 1}})}}),
                       GvX)),
        op_sum(op_sum(op_term(gp({{1, gmono({{GvX, 1}, {GvPsi, 1}})},
                                  {1, gmono({{GvZ, 1}, {GvTheta, 1}})}}),
                              GvPsi),
                      op_term(gp({{1, gmono({{GvX, 1}, {GvTheta, 1}})},
                                  {1, gmono({{GvZ, 1}, {GvPsi, 1}})}}),
                              GvTheta)),
               op_term(gp({{2, gmono({{GvX, 1}, {GvZ, 1}})}}), GvZ)));
    o["L~+"] = op_sum(
        op_sum(op_term(gp({{1, gmono({{GvZ, 1}, {GvR, 1}})},
                           {1, gmono({{GvX, 1}, {GvRt, 1}})},
                           {-2, gmono({{GvTheta, 1}, {GvPsi, 1}, {GvR, 1}})}})),
               op_term(gp({{-4, gmono({{GvX, 1}, {GvTheta, 1}, {GvPsi, 1}})},
                           {2, gmono({{GvX, 1}, {GvZ, 1}})}}),
                       GvX)),
        op_sum(op_sum(op_term(gp({{1, gmono({{GvZ, 1}, {GvTheta, 1}})},
                                  {1, gmono({{GvX, 1}, {GvPsi, 1}})}}),
                              GvTheta),
                      op_term(gp({{1, gmono({{GvZ, 1}, {GvPsi, 1}})},
                                  {1, gmono({{GvX, 1}, {GvTheta, 1}})}}),
                              GvPsi)),
               op_term(gp({{1, gmono({{GvZ, 2}})}, {1, gmono({{GvX, 2}})}}), GvZ)));
    return re;
}

/// First-order realization of the eight-generator algebra, as printed.
inline Realization printed_realization_eight() {
    using diffop_detail::gp;
    const GMono z = gmono({{GvZ, 1}}), th = gmono({{GvTheta, 1}}), ps = gmono({{GvPsi, 1}}),
                r = gmono({{GvR, 1}}), rt = gmono({{GvRt, 1}});
    Realization re;
    re.preset = "eight";
    auto& o = re.ops;
    o["a-"] = op_sum(op_term(gp({{1, gmono_one()}}), GvTheta), op_term(gp({{2, th}}), GvZ));
    o["a+"] = op_sum(
        op_sum(op_term(gp({{1, z}}), GvTheta),
               op_term(gp({{-2, gmono({{GvPsi, 1}, {GvRt, 1}})},
                           {2, gmono({{GvTheta, 1}, {GvR, 1}})}}))),
        op_sum(op_term(gp({{2, gmono({{GvZ, 1}, {GvTheta, 1}})}}), GvZ),
               op_term(gp({{2, gmono({{GvTheta, 1}, {GvPsi, 1}})}}), GvPsi)));
    o["R"] = op_sum(op_sum(op_term(gp({{1, r}})), op_term(gp({{1, th}}), GvTheta)),
                    op_sum(op_term(gp({{1, ps}}), GvPsi), op_term(gp({{2, z}}), GvZ)));
    o["a~-"] = op_sum(op_term(gp({{1, gmono_one()}}), GvPsi), op_term(gp({{-2, ps}}), GvZ));
    o["a~+"] = op_sum(
        op_sum(op_term(gp({{-1, z}}), GvPsi),
               op_term(gp({{2, gmono({{GvTheta, 1}, {GvRt, 1}})},
                           {2, gmono({{GvPsi, 1}, {GvR, 1}})}}))),
        op_sum(op_term(gp({{2, gmono({{GvZ, 1}, {GvPsi, 1}})}}), GvZ),
               op_term(gp({{2, gmono({{GvTheta, 1}, {GvPsi, 1}})}}), GvTheta)));
    o["R~"] = op_sum(op_term(gp({{1, rt}})),
                     op_sum(op_term(gp({{1, ps}}), GvTheta), op_term(gp({{-1, th}}), GvPsi)));
    o["L-"] = op_term(gp({{1, gmono_one()}}), GvZ);
    o["L+"] = op_sum(
        op_sum(op_term(gp({{1, gmono({{GvZ, 1}, {GvR, 1}})},
                           {-2, gmono({{GvTheta, 1}, {GvPsi, 1}, {GvRt, 1}})}})),
               op_term(gp({{1, gmono({{GvZ, 2}})}}), GvZ)),
        op_sum(op_term(gp({{1, gmono({{GvZ, 1}, {GvPsi, 1}})}}), GvPsi),
               op_term(gp({{1, gmono({{GvZ, 1}, {GvTheta, 1}})}}), GvTheta)));
    return re;
}

inline Realization printed_realization(const std::string& preset) {
    if (preset == "ten") return printed_realization_ten();
    if (preset == "eight") return printed_realization_eight();
    throw SchemaError("unknown preset '" + preset + "'");
}

// ------------------------------------------------------------- verification

inline std::vector<GMono> module_monomials(const VarContext& ctx, int max_degree) {
    std::vector<GMono> out;
    std::vector<int> vs = ctx.module_vars;
    GMono cur;
    // depth-first enumeration in canonical order, degree capped
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int deg) {
        if (i == vs.size()) {
            out.push_back(cur);
            return;
        }
        int v = vs[i];
        int cap = (v == GvTheta || v == GvPsi) ? 1 : max_degree;
        for (int e = 0; e <= cap && deg + e <= max_degree; ++e) {
            cur.e[static_cast<std::size_t>(v)] = e;
            rec(i + 1, deg + e);
        }
        cur.e[static_cast<std::size_t>(v)] = 0;
    };
    rec(0, 0);
    return out;
}

struct RealizationPairCheck {
    std::string left;
    std::string right;
    bool canonical_pass{false};
    bool application_pass{false};
    std::string residual;  // empty when passing
    bool pass() const { return canonical_pass && application_pass; }
};

struct RealizationReport {
    std::string preset;
    int max_degree{4};
    std::vector<RealizationPairCheck> pairs;
    // resolved convention: the constant polynomial is the lowest-weight
    // vector; these record X(1) for every generator
    std::vector<std::pair<std::string, std::string>> action_on_unit;
    bool pass() const {
        for (const auto& p : pairs) {
            if (!p.pass()) return false;
        }
        return true;
    }
};

/// Check every generator pair two ways: once as canonical operators through
/// compose (second-order terms must cancel), once by applying both sides of
/// the bracket to every module monomial of degree <= max_degree.
inline RealizationReport verify_realization(const VarContext& ctx, const GradedAlgebra& alg,
                                            const Realization& real, int max_degree = 4) {
    if (max_degree < 2) throw SchemaError("max_degree must be >= 2");
    RealizationReport report;
    report.preset = ctx.preset;
    report.max_degree = max_degree;
    for (int i = 0; i < alg.size(); ++i) {
        if (!real.ops.count(alg.generator(i).name)) {
            throw SchemaError("realization misses generator " + alg.generator(i).name);
        }
    }
    const auto monos = module_monomials(ctx, max_degree);
    for (int i = 0; i < alg.size(); ++i) {
        for (int j = i; j < alg.size(); ++j) {
            const DiffOp& A = real.ops.at(alg.generator(i).name);
            const DiffOp& B = real.ops.at(alg.generator(j).name);
            RealizationPairCheck pc;
            pc.left = alg.generator(i).name;
            pc.right = alg.generator(j).name;
            DiffOp rhs;
            for (const auto& [k, c] : alg.bracket_gens(i, j)) {
                rhs = op_sum(rhs, real.ops.at(alg.generator(k).name), c);
            }
            DiffOp lhs = op_bracket(ctx, A, B);
            DiffOp diff = op_sum(lhs, rhs, Rational(-1));
            pc.canonical_pass = op_is_zero(diff);
            if (!pc.canonical_pass) pc.residual = op_str(diff);
            pc.application_pass = true;
            const Rational s(bracket_sign(alg.grade(i), alg.grade(j)));
            for (const GMono& m : monos) {
                GPoly pm{{m, LinForm(Rational(1))}};
                GPoly l = gpoly_sum(apply_op(ctx, A, apply_op(ctx, B, pm)),
                                    apply_op(ctx, B, apply_op(ctx, A, pm)), -s);
                GPoly r = apply_op(ctx, rhs, pm);
                if (!(l == r)) {
                    pc.application_pass = false;
                    if (pc.residual.empty()) {
                        pc.residual = "application mismatch at " + gmono_str(m);
                    }
                    break;
                }
            }
            report.pairs.push_back(std::move(pc));
        }
    }
    GPoly unit{{gmono_one(), LinForm(Rational(1))}};
    for (int i = 0; i < alg.size(); ++i) {
        const std::string& n = alg.generator(i).name;
        report.action_on_unit.push_back({n, gpoly_str(apply_op(ctx, real.ops.at(n), unit))});
    }
    return report;
}

// -------------------------------------------------------------------- repair

inline bool op_has_unknowns(const DiffOp& op) {
    for (const auto& [k, p] : op) {
        for (const auto& [m, c] : p) {
            if (!c.is_constant()) return true;
        }
    }
    return false;
}

/// General first-order ansatz of the given grade: every (action, coefficient
/// monomial) pair with module degree <= 3, weight degree <= 1, total <= 3,
/// one fresh unknown each.
inline DiffOp general_operator_ansatz(const VarContext& ctx, Grading target, int& next_unknown) {
    DiffOp op;
    std::vector<int> actions{DKey::kNone};
    for (int v : ctx.module_vars) actions.push_back(v);
    for (int d : actions) {
        Grading need =
            d == DKey::kNone ? target : target + ctx.grades[static_cast<std::size_t>(d)];
        for (const GMono& base : module_monomials(ctx, 3)) {
            for (int er = 0; er <= 1; ++er) {
                for (int ert = 0; ert + er <= 1; ++ert) {
                    GMono m = base;
                    m.e[GvR] = er;
                    m.e[GvRt] = ert;
                    if (m.module_degree(ctx) + er + ert > 3) continue;
                    if (!(mono_grade(ctx, m) == need)) continue;
                    op_accumulate(op, DKey{DKey::kNone, d}, m, LinForm::unknown(next_unknown++));
                }
            }
        }
    }
    return op;
}

struct RepairResult {
    bool consistent{false};
    int freedom{0};  // solution-space dimension of the unknowns
    Realization repaired;
    std::map<int, Rational> solution;
    std::vector<std::pair<std::string, std::string>> skipped_pairs;  // both sides unknown
};

/// Solve the linear system "all brackets match the structure constants" for
/// the unknown template coefficients. Pairs whose two operands both carry
/// unknowns would be quadratic; they are skipped here and re-checked by
/// verify_realization after substitution.
inline RepairResult repair_realization(const VarContext& ctx, const GradedAlgebra& alg,
                                       const Realization& tmpl) {
    RepairResult result;
    std::vector<int> unknown_ids;
    {
        std::map<int, bool> seen;
        for (const auto& [name, op] : tmpl.ops) {
            for (const auto& [k, p] : op) {
                for (const auto& [m, c] : p) {
                    for (const auto& [id, q] : c.coefficients()) seen[id] = true;
                }
            }
        }
        for (const auto& [id, b] : seen) unknown_ids.push_back(id);
    }
    std::map<int, std::size_t> col_of;
    for (std::size_t t = 0; t < unknown_ids.size(); ++t) col_of[unknown_ids[t]] = t;

    QMatrix rows;
    QVector rhs;
    for (int i = 0; i < alg.size(); ++i) {
        for (int j = i; j < alg.size(); ++j) {
            const DiffOp& A = tmpl.ops.at(alg.generator(i).name);
            const DiffOp& B = tmpl.ops.at(alg.generator(j).name);
            if (op_has_unknowns(A) && op_has_unknowns(B)) {
                result.skipped_pairs.push_back({alg.generator(i).name, alg.generator(j).name});
                continue;
            }
            DiffOp diff = op_bracket(ctx, A, B);
            for (const auto& [k, c] : alg.bracket_gens(i, j)) {
                diff = op_sum(diff, tmpl.ops.at(alg.generator(k).name), -c);
            }
            for (const auto& [k, p] : diff) {
                for (const auto& [m, c] : p) {
                    QVector row(unknown_ids.size());
                    for (const auto& [id, q] : c.coefficients()) row[col_of.at(id)] = q;
                    rows.push_back(std::move(row));
                    rhs.push_back(-c.constant_part());
                }
            }
        }
    }
    AffineSolution sol = solve_affine(rows, rhs);
    if (!sol.consistent) {
        throw NoRealizationError("template bracket constraints are inconsistent");
    }
    result.consistent = true;
    result.freedom = sol.freedom();
    for (std::size_t t = 0; t < unknown_ids.size(); ++t) {
        result.solution[unknown_ids[t]] =
            sol.particular.empty() ? Rational() : sol.particular[t];
    }
    result.repaired.preset = tmpl.preset;
    for (const auto& [name, op] : tmpl.ops) {
        DiffOp fixed;
        for (const auto& [k, p] : op) {
            for (const auto& [m, c] : p) {
                op_accumulate(fixed, k, m, LinForm(c.evaluate(result.solution)));
            }
        }
        result.repaired.ops[name] = std::move(fixed);
    }
    return result;
}

// ------------------------------------------------- Casimir as diff operator

struct CasimirSubstitution {
    bool derivative_free{false};  // all first- and second-order terms cancel
    bool weights_only{false};     // remainder involves only r and rt
    GPoly remainder;              // multiplication part of the total operator
    std::string remainder_str;
};

/// Substitute the realization into an enveloping polynomial of degree <= 2
/// and reduce. For an invariant this must collapse to a polynomial in the
/// weights alone: a multiple of the identity on the module.
inline CasimirSubstitution substitute_casimir(const VarContext& ctx, const GradedAlgebra& alg,
                                              const Realization& real,
                                              const std::map<PBWKey, Rational>& casimir) {
    DiffOp total;
    for (const auto& [key, coeff] : casimir) {
        Word w = pbw_word(key);
        if (w.size() > 2) throw SchemaError("casimir substitution is limited to degree 2");
        DiffOp term;
        if (w.empty()) {
            term = op_term(GPoly{{gmono_one(), LinForm(Rational(1))}});
        } else if (w.size() == 1) {
            term = real.ops.at(alg.generator(w[0]).name);
        } else {
            term = compose(ctx, real.ops.at(alg.generator(w[0]).name),
                           real.ops.at(alg.generator(w[1]).name));
        }
        total = op_sum(total, term, coeff);
    }
    CasimirSubstitution out;
    out.derivative_free = true;
    for (const auto& [k, p] : total) {
        if (k.order() > 0) {
            out.derivative_free = false;
        } else {
            out.remainder = p;
        }
    }
    out.weights_only = true;
    for (const auto& [m, c] : out.remainder) {
        for (int v : ctx.module_vars) {
            if (m.e[static_cast<std::size_t>(v)] != 0) out.weights_only = false;
        }
    }
    out.remainder_str = gpoly_str(out.remainder);
    return out;
}

}  // namespace colorsuper
