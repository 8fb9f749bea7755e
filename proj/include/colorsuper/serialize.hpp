#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "colorsuper/algebra.hpp"
#include "colorsuper/representation.hpp"

namespace colorsuper {

using nlohmann::json;

// nlohmann::json objects are backed by std::map, so object keys serialize in
// sorted order; together with "no timestamps anywhere" this makes every
// emitted document byte-stable.

// ------------------------------------------------------------ RadicalScalar

/// Bit-exact wire format: sorted array of {"num","den","rad"} terms.
inline json radical_to_json(const RadicalScalar& r) {
    json arr = json::array();
    for (const auto& [d, q] : r.terms()) {
        if (q.num() < std::numeric_limits<std::int64_t>::min() ||
            q.num() > std::numeric_limits<std::int64_t>::max() ||
            q.den() > std::numeric_limits<std::int64_t>::max()) {
            throw SchemaError("radical coefficient exceeds the 64-bit wire range");
        }
        arr.push_back(json{{"num", static_cast<std::int64_t>(q.num())},
                           {"den", static_cast<std::int64_t>(q.den())},
                           {"rad", d}});
    }
    return arr;
}

inline RadicalScalar radical_from_json(const json& j) {
    if (!j.is_array()) throw SchemaError("radical scalar must be an array of terms");
    RadicalScalar out;
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("num") || !t.contains("den") || !t.contains("rad")) {
            throw SchemaError("radical term needs fields num, den, rad");
        }
        Rational q(BigInt(t.at("num").get<std::int64_t>()),
                   BigInt(t.at("den").get<std::int64_t>()));
        out += RadicalScalar::radical(q, t.at("rad").get<std::int64_t>());
    }
    return out;
}

// ------------------------------------------------------------------ algebra

inline json algebra_to_json(const GradedAlgebra& alg) {
    json gens = json::array();
    for (const auto& g : alg.generators()) {
        gens.push_back(json{{"name", g.name}, {"grade", {g.grade.a1, g.grade.a2}}});
    }
    json brackets = json::array();
    for (const auto& [key, combo] : alg.table()) {
        json terms = json::array();
        for (const auto& [k, c] : combo) {
            terms.push_back(json{{"coeff", c.str()}, {"gen", alg.generator(k).name}});
        }
        brackets.push_back(json{{"left", alg.generator(key.first).name},
                                {"right", alg.generator(key.second).name},
                                {"terms", terms}});
    }
    return json{{"generators", gens}, {"brackets", brackets}};
}

inline GradedAlgebra algebra_from_json(const json& j) {
    if (!j.contains("generators") || !j.contains("brackets")) {
        throw SchemaError("algebra document needs fields generators, brackets");
    }
    std::vector<Generator> gens;
    std::map<std::string, int> index;
    for (const auto& g : j.at("generators")) {
        if (!g.contains("name") || !g.contains("grade") || g.at("grade").size() != 2) {
            throw SchemaError("generator needs fields name, grade=[b,b]");
        }
        int a1 = g.at("grade")[0].get<int>(), a2 = g.at("grade")[1].get<int>();
        if ((a1 != 0 && a1 != 1) || (a2 != 0 && a2 != 1)) {
            throw SchemaError("grade bits must be 0 or 1");
        }
        index[g.at("name").get<std::string>()] = static_cast<int>(gens.size());
        gens.push_back({g.at("name").get<std::string>(), Grading{a1, a2}});
    }
    std::map<std::pair<int, int>, GenCombo> table;
    for (const auto& b : j.at("brackets")) {
        if (!b.contains("left") || !b.contains("right") || !b.contains("terms")) {
            throw SchemaError("bracket needs fields left, right, terms");
        }
        auto look = [&](const std::string& n) {
            auto it = index.find(n);
            if (it == index.end()) throw SchemaError("unknown generator '" + n + "'");
            return it->second;
        };
        int i = look(b.at("left").get<std::string>());
        int k = look(b.at("right").get<std::string>());
        GenCombo combo;
        for (const auto& t : b.at("terms")) {
            combo_add(combo, look(t.at("gen").get<std::string>()),
                      Rational::parse(t.at("coeff").get<std::string>()));
        }
        table[{i, k}] = std::move(combo);
    }
    return {std::move(gens), std::move(table)};
}

// ----------------------------------------------------------- representation

inline json rep_to_json(const Representation& rep) {
    json states = json::array();
    for (const auto& s : rep.states) {
        states.push_back(json{{"j", s.j}, {"m", s.m}, {"sector", {s.sector.a1, s.sector.a2}}});
    }
    json mats = json::object();
    for (const auto& [name, m] : rep.matrices) {
        json rows = json::array();
        for (int i = 0; i < m.size(); ++i) {
            json row = json::array();
            for (int j = 0; j < m.size(); ++j) row.push_back(radical_to_json(m(i, j)));
            rows.push_back(std::move(row));
        }
        mats[name] = std::move(rows);
    }
    const char* prov = rep.provenance == Provenance::Built
                           ? "built"
                           : (rep.provenance == Provenance::Embedded ? "embedded" : "user");
    return json{{"algebra", rep.algebra},
                {"ell", rep.ell},
                {"states", states},
                {"matrices", mats},
                {"provenance", prov}};
}

inline Representation rep_from_json(const json& j) {
    for (const char* f : {"algebra", "ell", "states", "matrices"}) {
        if (!j.contains(f)) throw SchemaError(std::string("representation misses field ") + f);
    }
    Representation rep;
    rep.algebra = j.at("algebra").get<std::string>();
    if (rep.algebra != "ten" && rep.algebra != "eight") {
        throw SchemaError("field algebra must be 'ten' or 'eight'");
    }
    rep.ell = j.at("ell").get<int>();
    for (const auto& s : j.at("states")) {
        if (!s.contains("j") || !s.contains("m") || !s.contains("sector")) {
            throw SchemaError("state needs fields j, m, sector");
        }
        rep.states.push_back({s.at("j").get<int>(), s.at("m").get<int>(),
                              Grading{s.at("sector")[0].get<int>(), s.at("sector")[1].get<int>()}});
    }
    const int n = static_cast<int>(rep.states.size());
    for (const auto& [name, rows] : j.at("matrices").items()) {
        if (static_cast<int>(rows.size()) != n) {
            throw SchemaError("matrix " + name + " has wrong row count");
        }
        RadMatrix m(n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) {
                throw SchemaError("matrix " + name + " is not square");
            }
            for (int c = 0; c < n; ++c) {
                m(i, c) = radical_from_json(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
            }
        }
        rep.matrices[name] = std::move(m);
    }
    std::string prov = j.value("provenance", "user");
    rep.provenance = prov == "built" ? Provenance::Built
                                     : (prov == "embedded" ? Provenance::Embedded
                                                           : Provenance::UserSupplied);
    return rep;
}

// ------------------------------------------------------------------ casimir

/// One object per nontrivial ray:
/// {"sector":[s1,s2], "basis":[{"monomial","coeff"}...], "definition":...}.
inline json casimir_to_json(const GradedAlgebra& alg, const CasimirSolution& sol) {
    json rays = json::array();
    for (const auto& ray : sol.rays) {
        json basis = json::array();
        for (const auto& [key, coeff] : ray) {
            basis.push_back(json{{"monomial", pbw_str(alg, key)}, {"coeff", coeff.str()}});
        }
        rays.push_back(json{{"sector", {sol.sector.a1, sol.sector.a2}},
                            {"basis", std::move(basis)},
                            {"definition", sol.graded_definition ? "graded" : "ordinary"}});
    }
    return json{{"sector", {sol.sector.a1, sol.sector.a2}},
                {"definition", sol.graded_definition ? "graded" : "ordinary"},
                {"rays", rays},
                {"constant_is_central", true},
                {"nontrivial_count", sol.rays.size()}};
}

}  // namespace colorsuper
