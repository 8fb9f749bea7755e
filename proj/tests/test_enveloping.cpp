#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "colorsuper/enveloping.hpp"

using namespace colorsuper;

namespace {

PBWKey key(std::initializer_list<std::pair<int, int>> factors) {
    PBWKey k;
    for (auto [g, e] : factors) k.push_back({g, e});
    return k;
}

EnvPoly rational_poly(const GradedAlgebra& alg,
                      std::initializer_list<std::pair<PBWKey, Rational>> terms) {
    (void)alg;
    EnvPoly p;
    for (const auto& [k, c] : terms) env_add(p, k, LinForm(c));
    return p;
}

/// Normal-ordered C2 of the (0,0) sector of the ten-generator algebra:
/// R - R^2/2 - R~^2/2 + 2 L+L- + 2 L~+L~- + a+a-/2 + a~+a~-/2.
EnvPoly casimir_ten_00(const GradedAlgebra& ten) {
    const int Lp = ten.index_of("L+"), Lm = ten.index_of("L-"), R = ten.index_of("R"),
              Rt = ten.index_of("R~"), Ltp = ten.index_of("L~+"), Ltm = ten.index_of("L~-"),
              ap = ten.index_of("a+"), am = ten.index_of("a-"), atp = ten.index_of("a~+"),
              atm = ten.index_of("a~-");
    return rational_poly(ten, {
        {key({{R, 1}}), Rational(1)},
        {key({{R, 2}}), Rational(-1, 2)},
        {key({{Rt, 2}}), Rational(-1, 2)},
        {key({{Lp, 1}, {Lm, 1}}), Rational(2)},
        {key({{Ltp, 1}, {Ltm, 1}}), Rational(2)},
        {key({{ap, 1}, {am, 1}}), Rational(1, 2)},
        {key({{atp, 1}, {atm, 1}}), Rational(1, 2)},
    });
}

}  // namespace

TEST_CASE("normal ordering basics") {
    GradedAlgebra ten = preset_ten();
    const int Lp = ten.index_of("L+"), Lm = ten.index_of("L-"), R = ten.index_of("R"),
              ap = ten.index_of("a+"), am = ten.index_of("a-");

    // L- L+ = L+ L- + R
    EnvPoly got = normal_order(ten, Word{Lm, Lp});
    EnvPoly want = rational_poly(ten, {{key({{Lp, 1}, {Lm, 1}}), Rational(1)},
                                       {key({{R, 1}}), Rational(1)}});
    CHECK(got == want);

    // a- a+ = -a+ a- + 2R
    got = normal_order(ten, Word{am, ap});
    want = rational_poly(ten, {{key({{ap, 1}, {am, 1}}), Rational(-1)},
                               {key({{R, 1}}), Rational(2)}});
    CHECK(got == want);

    // a+ a+ = 2 L+
    got = normal_order(ten, Word{ap, ap});
    want = rational_poly(ten, {{key({{Lp, 1}}), Rational(2)}});
    CHECK(got == want);

    // a+ a+ a+ = 2 L+ a+
    got = normal_order(ten, Word{ap, ap, ap});
    want = rational_poly(ten, {{key({{Lp, 1}, {ap, 1}}), Rational(2)}});
    CHECK(got == want);

    // already ordered words stay put, exponents collapse
    got = normal_order(ten, Word{Lp, Lp, R});
    want = rational_poly(ten, {{key({{Lp, 2}, {R, 1}}), Rational(1)}});
    CHECK(got == want);
}

TEST_CASE("confluence and filtration on random words") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 400; ++trial) {
        GradedAlgebra alg = (trial % 2) ? preset_ten() : preset_eight();
        std::uniform_int_distribution<int> len(1, 6);
        std::uniform_int_distribution<int> gen(0, alg.size() - 1);
        Word w;
        int n = len(rng);
        for (int i = 0; i < n; ++i) w.push_back(gen(rng));
        EnvPoly first = normal_order(alg, WordPoly{{w, LinForm(1)}},
                                     RewriteStrategy::FirstReducible);
        EnvPoly last = normal_order(alg, WordPoly{{w, LinForm(1)}},
                                    RewriteStrategy::LastReducible);
        CHECK(first == last);
        for (const auto& [k, c] : first) {
            CHECK(pbw_degree(k) <= static_cast<int>(w.size()));
        }
    }
}

TEST_CASE("graded commutator examples") {
    GradedAlgebra ten = preset_ten();
    const int Lp = ten.index_of("L+"), Lm = ten.index_of("L-"), R = ten.index_of("R");

    // [R, L+] = 2 L+
    EnvPoly p = rational_poly(ten, {{key({{R, 1}}), Rational(1)}});
    CHECK(graded_commutator(ten, p, Lp) ==
          rational_poly(ten, {{key({{Lp, 1}}), Rational(2)}}));

    // L+L- has adR weight zero
    EnvPoly q = rational_poly(ten, {{key({{Lp, 1}, {Lm, 1}}), Rational(1)}});
    CHECK(graded_commutator(ten, q, R).empty());

    // sector mixing is rejected
    EnvPoly mixed = rational_poly(ten, {{key({{Lp, 1}}), Rational(1)},
                                        {key({{ten.index_of("a+"), 1}}), Rational(1)}});
    CHECK_THROWS_AS(graded_commutator(ten, mixed, R), SectorError);
}

TEST_CASE("the printed Casimir is central and its two forms agree") {
    GradedAlgebra ten = preset_ten();
    EnvPoly c2 = casimir_ten_00(ten);
    for (int x = 0; x < ten.size(); ++x) {
        INFO("generator " << ten.generator(x).name);
        CHECK(graded_commutator(ten, c2, x).empty());
    }

    const int Lp = ten.index_of("L+"), Lm = ten.index_of("L-"), R = ten.index_of("R"),
              Rt = ten.index_of("R~"), Ltp = ten.index_of("L~+"), Ltm = ten.index_of("L~-"),
              ap = ten.index_of("a+"), am = ten.index_of("a-"), atp = ten.index_of("a~+"),
              atm = ten.index_of("a~-");
    // the reversed-order form: -R - R^2/2 - R~^2/2 + 2 L-L+ + 2 L~-L~+ - a-a+/2 - a~-a~+/2
    WordPoly reversed;
    auto add_word = [&](std::initializer_list<int> gens, Rational c) {
        reversed[Word(gens)] = LinForm(c);
    };
    add_word({R}, Rational(-1));
    add_word({R, R}, Rational(-1, 2));
    add_word({Rt, Rt}, Rational(-1, 2));
    add_word({Lm, Lp}, Rational(2));
    add_word({Ltm, Ltp}, Rational(2));
    add_word({am, ap}, Rational(-1, 2));
    add_word({atm, atp}, Rational(-1, 2));
    EnvPoly reordered = normal_order(ten, reversed);

    WordPoly direct;
    direct[Word{R}] = LinForm(Rational(1));
    direct[Word{R, R}] = LinForm(Rational(-1, 2));
    direct[Word{Rt, Rt}] = LinForm(Rational(-1, 2));
    direct[Word{Lp, Lm}] = LinForm(Rational(2));
    direct[Word{Ltp, Ltm}] = LinForm(Rational(2));
    direct[Word{ap, am}] = LinForm(Rational(1, 2));
    direct[Word{atp, atm}] = LinForm(Rational(1, 2));
    EnvPoly straight = normal_order(ten, direct);

    CHECK(straight == reordered);
    CHECK(straight == casimir_ten_00(ten));
}

TEST_CASE("casimir solver: ten-generator sector (0,0)") {
    GradedAlgebra ten = preset_ten();
    CasimirSolution sol = solve_casimir(ten, Grading{0, 0});
    CHECK(sol.constant_in_ansatz);
    // constant + 3 degree-1 (L+, R, L-) + 14 degree-2 monomials
    CHECK(sol.ansatz.size() == 18);
    REQUIRE(sol.rays.size() == 1);
    const auto& ray = sol.rays[0];
    // canonical primitive vector: twice the alpha = 1 normalization
    std::map<PBWKey, Rational> expected{
        {key({{ten.index_of("R"), 1}}), Rational(2)},
        {key({{ten.index_of("R"), 2}}), Rational(-1)},
        {key({{ten.index_of("R~"), 2}}), Rational(-1)},
        {key({{ten.index_of("L+"), 1}, {ten.index_of("L-"), 1}}), Rational(4)},
        {key({{ten.index_of("L~+"), 1}, {ten.index_of("L~-"), 1}}), Rational(4)},
        {key({{ten.index_of("a+"), 1}, {ten.index_of("a-"), 1}}), Rational(1)},
        {key({{ten.index_of("a~+"), 1}, {ten.index_of("a~-"), 1}}), Rational(1)},
    };
    CHECK(ray == expected);
}

TEST_CASE("casimir solver: ten-generator sector (1,1)") {
    GradedAlgebra ten = preset_ten();
    CasimirSolution sol = solve_casimir(ten, Grading{1, 1});
    CHECK_FALSE(sol.constant_in_ansatz);
    REQUIRE(sol.rays.size() == 1);
    std::map<PBWKey, Rational> expected{
        {key({{ten.index_of("R~"), 1}}), Rational(2)},
        {key({{ten.index_of("L+"), 1}, {ten.index_of("L~-"), 1}}), Rational(4)},
        {key({{ten.index_of("L~+"), 1}, {ten.index_of("L-"), 1}}), Rational(4)},
        {key({{ten.index_of("a+"), 1}, {ten.index_of("a~-"), 1}}), Rational(1)},
        {key({{ten.index_of("a~+"), 1}, {ten.index_of("a-"), 1}}), Rational(1)},
        {key({{ten.index_of("R"), 1}, {ten.index_of("R~"), 1}}), Rational(-2)},
    };
    CHECK(sol.rays[0] == expected);

    // graded-central but not ordinary-central: under the ordinary definition
    // the (1,1) sector has no invariant at all
    CasimirSolution ord = solve_casimir(ten, Grading{1, 1}, true);
    CHECK(ord.rays.empty());
}

TEST_CASE("casimir solver: eight-generator algebra") {
    GradedAlgebra eight = preset_eight();
    CasimirSolution s00 = solve_casimir(eight, Grading{0, 0});
    REQUIRE(s00.rays.size() == 1);
    std::map<PBWKey, Rational> expected{
        {key({{eight.index_of("L+"), 1}, {eight.index_of("L-"), 1}}), Rational(4)},
        {key({{eight.index_of("a+"), 1}, {eight.index_of("a-"), 1}}), Rational(1)},
        {key({{eight.index_of("a~+"), 1}, {eight.index_of("a~-"), 1}}), Rational(1)},
        {key({{eight.index_of("R"), 2}}), Rational(-1)},
        {key({{eight.index_of("R~"), 2}}), Rational(-1)},
    };
    CHECK(s00.rays[0] == expected);
    // no linear R term in the solved invariant
    CHECK(s00.rays[0].count(key({{eight.index_of("R"), 1}})) == 0);

    CasimirSolution s11 = solve_casimir(eight, Grading{1, 1});
    CHECK(s11.rays.empty());
}

TEST_CASE("solver rays commute with every generator") {
    for (const auto& [alg, sector] : std::vector<std::pair<GradedAlgebra, Grading>>{
             {preset_ten(), Grading{0, 0}},
             {preset_ten(), Grading{1, 1}},
             {preset_eight(), Grading{0, 0}}}) {
        CasimirSolution sol = solve_casimir(alg, sector);
        for (const auto& ray : sol.rays) {
            EnvPoly p = env_from_rational(ray);
            for (int x = 0; x < alg.size(); ++x) {
                INFO(alg.generator(x).name << " in sector " << sector.str());
                CHECK(graded_commutator(alg, p, x).empty());
            }
        }
    }
}
