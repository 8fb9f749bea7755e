#include <catch2/catch_amalgamated.hpp>

#include "colorsuper/representation.hpp"
#include "colorsuper/serialize.hpp"

using namespace colorsuper;

namespace {

RadicalScalar sq(long long mult, std::int64_t rad = 2) {
    return RadicalScalar::radical(Rational(mult), rad);
}

std::map<PBWKey, Rational> casimir_00(const GradedAlgebra& alg) {
    auto k = [&](std::initializer_list<std::pair<const char*, int>> factors) {
        PBWKey key;
        for (auto [n, e] : factors) key.push_back({alg.index_of(n), e});
        return key;
    };
    if (alg.size() == 10) {
        return {{k({{"R", 1}}), Rational(1)},
                {k({{"R", 2}}), Rational(-1, 2)},
                {k({{"R~", 2}}), Rational(-1, 2)},
                {k({{"L+", 1}, {"L-", 1}}), Rational(2)},
                {k({{"L~+", 1}, {"L~-", 1}}), Rational(2)},
                {k({{"a+", 1}, {"a-", 1}}), Rational(1, 2)},
                {k({{"a~+", 1}, {"a~-", 1}}), Rational(1, 2)}};
    }
    return {{k({{"R", 2}}), Rational(-1, 4)},
            {k({{"R~", 2}}), Rational(-1, 4)},
            {k({{"L+", 1}, {"L-", 1}}), Rational(1)},
            {k({{"a+", 1}, {"a-", 1}}), Rational(1, 4)},
            {k({{"a~+", 1}, {"a~-", 1}}), Rational(1, 4)}};
}

std::map<PBWKey, Rational> casimir_11_ten(const GradedAlgebra& alg) {
    auto k = [&](std::initializer_list<std::pair<const char*, int>> factors) {
        PBWKey key;
        for (auto [n, e] : factors) key.push_back({alg.index_of(n), e});
        return key;
    };
    return {{k({{"L+", 1}, {"L~-", 1}}), Rational(1)},
            {k({{"L~+", 1}, {"L-", 1}}), Rational(1)},
            {k({{"a+", 1}, {"a~-", 1}}), Rational(1, 4)},
            {k({{"a~+", 1}, {"a-", 1}}), Rational(1, 4)},
            {k({{"R~", 1}}), Rational(1, 2)},
            {k({{"R", 1}, {"R~", 1}}), Rational(-1, 2)}};
}

}  // namespace

TEST_CASE("ladder action examples") {
    StateLabel top{2, 2, {0, 0}};
    auto lm = act("L-", top, 2);
    REQUIRE(lm.size() == 1);
    CHECK(lm[0].first == sq(1));
    CHECK(lm[0].second == StateLabel{2, 0, {0, 0}});

    CHECK(act("a+", top, 2).empty());  // highest weight annihilation

    auto atm = act("a~-", StateLabel{1, 1, {0, 1}}, 2);
    REQUIRE(atm.size() == 1);
    CHECK(atm[0].first == sq(-1));
    CHECK(atm[0].second == StateLabel{2, 0, {1, 1}});

    // R is diagonal with eigenvalue m
    auto r = act("R", StateLabel{2, -2, {1, 1}}, 2);
    REQUIRE(r.size() == 1);
    CHECK(r[0].first == RadicalScalar(Rational(-2)));
    CHECK(r[0].second == StateLabel{2, -2, {1, 1}});

    CHECK_THROWS_AS(act("E11", top, 2), UnsupportedError);
}

TEST_CASE("state enumeration and dimensions") {
    for (int ell : {1, 2, 3, 4, 5}) {
        auto states = states_ten(ell);
        CHECK(static_cast<int>(states.size()) == 4 * ell + 2);
        int c00 = 0, c01 = 0, c10 = 0, c11 = 0;
        for (const auto& s : states) {
            if (s.sector == Grading{0, 0}) ++c00;
            if (s.sector == Grading{0, 1}) ++c01;
            if (s.sector == Grading{1, 0}) ++c10;
            if (s.sector == Grading{1, 1}) ++c11;
            CHECK((s.m % 2 + 2) % 2 == (s.j % 2 + 2) % 2);
            CHECK(std::abs(s.m) <= s.j);
        }
        CHECK(c00 == ell + 1);
        CHECK(c01 == ell);
        CHECK(c10 == ell);
        CHECK(c11 == ell + 1);
    }
    CHECK(states_ten(2).size() == 10);
    CHECK_THROWS_AS(build_rep_ten(0), SchemaError);
}

TEST_CASE("built representations satisfy every relation") {
    for (int ell : {1, 2, 3}) {
        Representation rep = build_rep_ten(ell);
        CHECK(rep.dimension() == 4 * ell + 2);
        RepReport report = verify_rep(rep);
        INFO("ell = " << ell);
        CHECK(report.pass());
        CHECK(report.pairs_total == 55);
        CHECK(report.pairs_pass == 55);
    }
}

TEST_CASE("built ell=2 equals the embedded matrices entry for entry") {
    Representation built = build_rep_ten(2);
    Representation embedded = embedded_rep("ten");
    auto diffs = compare_reps(built, embedded);
    CHECK(diffs.empty());
}

TEST_CASE("embedded matrices pass verification") {
    RepReport ten = verify_rep(embedded_rep("ten"));
    CHECK(ten.pass());
    CHECK(ten.pairs_total == 55);
    RepReport eight = verify_rep(embedded_rep("eight"));
    CHECK(eight.pass());
    CHECK(eight.pairs_total == 36);
}

TEST_CASE("embedded entries match the printed tables") {
    Representation ten = embedded_rep("ten");
    // row |2;0>(0,0), column |2;2>(0,0) of L- is sqrt2
    CHECK(ten.matrices.at("L-")(1, 0) == sq(1));
    // R~ couples |2;2>(0,0) and |2;2>(1,1) with 2
    CHECK(ten.matrices.at("R~")(7, 0) == RadicalScalar(Rational(2)));
    CHECK(ten.matrices.at("R~")(0, 7) == RadicalScalar(Rational(2)));
    // L+ first row has -sqrt2 in column 2 (1-indexed)
    CHECK(ten.matrices.at("L+")(0, 1) == sq(-1));

    Representation eight = embedded_rep("eight");
    std::vector<long long> rdiag{2, 0, -2, 1, -1, 1, -1, 0};
    for (int i = 0; i < 8; ++i) {
        CHECK(eight.matrices.at("R")(i, i) == RadicalScalar(Rational(rdiag[static_cast<std::size_t>(i)])));
    }
}

TEST_CASE("a flipped sign is caught and the pair is named") {
    Representation rep = build_rep_ten(2);
    RadMatrix& lp = rep.matrices.at("L+");
    lp(0, 1) = sq(1);  // was -sqrt2
    RepReport report = verify_rep(rep);
    CHECK_FALSE(report.pass());
    bool named = false;
    for (const auto& c : report.checks) {
        if (c.name == "bracket(L+,L-)" && !c.pass) named = true;
    }
    CHECK(named);
}

TEST_CASE("casimir scalars") {
    GradedAlgebra ten = preset_ten();
    for (int ell : {1, 2, 3}) {
        Representation rep = build_rep_ten(ell);
        CasimirEvaluation ev = casimir_on_rep(rep, casimir_00(ten));
        CHECK(ev.scalar);
        CHECK(ev.value == RadicalScalar(Rational(-ell * (ell + 1))));
    }
    // identity element evaluates to 1
    Representation two = build_rep_ten(2);
    CasimirEvaluation unit = casimir_on_rep(two, {{PBWKey{}, Rational(1)}});
    CHECK(unit.scalar);
    CHECK(unit.value == RadicalScalar(Rational(1)));

    GradedAlgebra eight = preset_eight();
    CasimirEvaluation e8 = casimir_on_rep(embedded_rep("eight"), casimir_00(eight));
    CHECK(e8.scalar);
    CHECK(e8.value == RadicalScalar(Rational(-1)));

    // R^2 alone is not central: reducibility-or-inconsistency error
    PBWKey r2{{ten.index_of("R"), 2}};
    CHECK_THROWS_AS(casimir_on_rep(two, {{r2, Rational(1)}}), ReducibilityError);
}

TEST_CASE("the casimir matrix commutes with every generator matrix") {
    GradedAlgebra ten = preset_ten();
    Representation rep = build_rep_ten(2);
    CasimirEvaluation ev = casimir_on_rep(rep, casimir_00(ten));
    for (const auto& [name, x] : rep.matrices) {
        RadMatrix comm = ev.matrix * x;
        comm.add_scaled(x * ev.matrix, Rational(-1));
        INFO(name);
        CHECK(comm.is_zero());
    }
}

TEST_CASE("the (1,1) casimir squares to 9 on the ell=2 module") {
    GradedAlgebra ten = preset_ten();
    Representation rep = build_rep_ten(2);
    CasimirEvaluation ev = casimir_on_rep(rep, casimir_11_ten(ten), false);
    CHECK_FALSE(ev.scalar);
    RadMatrix sq11 = ev.matrix * ev.matrix;
    RadMatrix nine = RadMatrix::identity(10);
    nine.add_scaled(RadMatrix::identity(10), Rational(8));
    CHECK(sq11 == nine);
}

TEST_CASE("commutant dimensions") {
    Representation ten2 = build_rep_ten(2);
    CommutantInfo info = commutant(ten2);
    CHECK(info.graded_dim == 1);
    CHECK(info.full_dim == 2);  // the graded module splits as an ungraded one
    CHECK(info.field_degree == 2);
    CHECK(commutant_dimension(ten2) == 1);

    CommutantInfo e8 = commutant(embedded_rep("eight"));
    CHECK(e8.graded_dim == 1);
    CHECK(e8.full_dim == 1);

    Representation one = build_rep_ten(1);
    CommutantInfo doubled = commutant(direct_sum(one, one));
    CHECK(doubled.graded_dim == 4);
    CHECK(doubled.full_dim == 8);
}

TEST_CASE("norm formula") {
    for (int ell : {1, 2, 3, 4, 5}) {
        Representation rep = build_rep_ten(ell);
        for (int n = 0; n <= ell; ++n) {
            INFO("ell " << ell << " n " << n);
            CHECK(norm_formula_actual(rep, n) == RadicalScalar(norm_formula_expected(ell, n)));
        }
        // one past the ladder end the product annihilates the top state
        CHECK(norm_formula_actual(rep, ell + 1).is_zero());
    }
}

TEST_CASE("R spectrum") {
    for (int ell : {1, 2, 3}) {
        Representation rep = build_rep_ten(ell);
        auto spec = r_spectrum(rep);
        CHECK(spec.begin()->first == Rational(-ell));            // q_min
        CHECK(std::prev(spec.end())->first == Rational(ell));    // q_max = -q_min
        for (const auto& [q, count] : spec) CHECK(count == 2);
        CHECK(static_cast<int>(spec.size()) == 2 * ell + 1);
        // even m: once in (0,0), once in (1,1); odd m: once in each odd sector
        std::map<std::pair<int, Grading>, int> by_sector;
        for (const auto& s : rep.states) ++by_sector[{s.m, s.sector}];
        for (const auto& [key, count] : by_sector) CHECK(count == 1);
    }
}

TEST_CASE("closed-form ladder coefficients agree with the n-indexed ones") {
    for (int ell : {1, 2, 3, 4, 5}) {
        for (const auto& st : states_ten(ell)) {
            const bool even = st.sector == Grading{0, 0} || st.sector == Grading{1, 1};
            const int lj = even ? ell : ell - 1;
            // L-: 1/2 sqrt((lj+m)(lj-m+2)), L+: -1/2 sqrt((lj-m)(lj+m+2))
            auto lm = act("L-", st, ell);
            Rational c_lm(static_cast<long long>(lj + st.m) * (lj - st.m + 2), 4);
            if (lm.empty()) {
                CHECK(c_lm.is_zero());
            } else {
                CHECK(lm[0].first == RadicalScalar::sqrt_of(c_lm));
            }
            auto lp = act("L+", st, ell);
            Rational c_lp(static_cast<long long>(lj - st.m) * (lj + st.m + 2), 4);
            if (lp.empty()) {
                CHECK(c_lp.is_zero());
            } else {
                CHECK(lp[0].first == RadicalScalar::sqrt_of(c_lp) * Rational(-1));
            }
        }
    }
}

TEST_CASE("representation JSON round trip") {
    Representation rep = build_rep_ten(2);
    json doc = rep_to_json(rep);
    Representation back = rep_from_json(doc);
    CHECK(back.states == rep.states);
    CHECK(back.matrices == rep.matrices);
    CHECK(rep_to_json(back).dump() == doc.dump());
    CHECK(verify_rep(back).pass());

    json bad = doc;
    bad.erase("states");
    CHECK_THROWS_AS(rep_from_json(bad), SchemaError);
    json bad2 = doc;
    bad2["algebra"] = "nine";
    CHECK_THROWS_AS(rep_from_json(bad2), SchemaError);
}

TEST_CASE("radical serialization is canonical") {
    RadicalScalar v = sq(-3) + RadicalScalar(Rational(7, 2));
    json j = radical_to_json(v);
    CHECK(radical_from_json(j) == v);
    CHECK(j.dump() == R"([{"den":2,"num":7,"rad":1},{"den":1,"num":-3,"rad":2}])");
    CHECK_THROWS_AS(radical_from_json(json::array({json{{"num", 1}, {"den", 1}}})), SchemaError);
}
