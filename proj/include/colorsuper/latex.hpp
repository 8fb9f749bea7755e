#pragma once

#include <string>

#include "colorsuper/representation.hpp"

namespace colorsuper {

namespace latex_detail {

inline std::string rational_latex(const Rational& q, bool suppress_one) {
    if (q.is_integer()) {
        if (suppress_one && q == Rational(1)) return "";
        if (suppress_one && q == Rational(-1)) return "-";
        return q.str();
    }
    std::string sign = q.is_negative() ? "-" : "";
    Rational a = q.abs();
    return sign + "\\frac{" + a.num().str() + "}{" + a.den().str() + "}";
}

}  // namespace latex_detail

inline std::string radical_latex(const RadicalScalar& r) {
    if (r.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [d, q] : r.terms()) {
        std::string piece;
        if (d == 1) {
            piece = latex_detail::rational_latex(q, false);
        } else {
            piece = latex_detail::rational_latex(q, true) + "\\sqrt{" + std::to_string(d) + "}";
        }
        if (!first && piece[0] != '-') s += "+";
        s += piece;
        first = false;
    }
    return s;
}

inline std::string generator_latex(const std::string& name) {
    // "L~+" -> \tilde{L}_{+}, "a-" -> a_{-}, "R" -> R
    std::string base(1, name[0]);
    bool tilde = name.find('~') != std::string::npos;
    std::string sub;
    if (name.back() == '+' || name.back() == '-') sub = std::string(1, name.back());
    std::string s = tilde ? "\\tilde{" + base + "}" : base;
    if (!sub.empty()) s += "_{" + sub + "}";
    return s;
}

/// One bmatrix block per generator in the frozen preset order.
inline std::string emit_latex(const Representation& rep) {
    if (rep.dimension() > 64) {
        throw RenderingGuardError("refusing to render a matrix of dimension " +
                                  std::to_string(rep.dimension()));
    }
    const GradedAlgebra& alg = rep.algebra_preset();
    std::string out;
    for (int g = 0; g < alg.size(); ++g) {
        const std::string& name = alg.generator(g).name;
        const RadMatrix& m = rep.matrices.at(name);
        out += "\\begin{equation}\n" + generator_latex(name) + " = \n\\begin{bmatrix}\n";
        for (int i = 0; i < m.size(); ++i) {
            for (int j = 0; j < m.size(); ++j) {
                out += radical_latex(m(i, j));
                if (j + 1 < m.size()) out += " & ";
            }
            out += " \\\\\n";
        }
        out += "\\end{bmatrix}\n\\end{equation}\n\n";
    }
    return out;
}

}  // namespace colorsuper
