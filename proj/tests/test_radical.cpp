#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "colorsuper/exact_linalg.hpp"
#include "colorsuper/linform.hpp"
#include "colorsuper/radical.hpp"

using namespace colorsuper;

namespace {

RadicalScalar rad(long long num, long long den, std::int64_t d) {
    return RadicalScalar::radical(Rational(num, den), d);
}

RadicalScalar random_radical(std::mt19937& rng) {
    static const std::int64_t rads[] = {1, 2, 3, 5, 6, 7, 10, 15};
    std::uniform_int_distribution<int> nterms(0, 3);
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<std::size_t> pick(0, std::size(rads) - 1);
    RadicalScalar r;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        r += rad(coeff(rng), den(rng), rads[pick(rng)]);
    }
    return r;
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
    CHECK((Rational(1) / Rational(-4)) == Rational(-1, 4));
    CHECK(Rational(7, 2).str() == "7/2");
    CHECK(Rational(-5).str() == "-5");
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational::parse("7/2") == Rational(7, 2));
    CHECK_THROWS_AS(Rational::parse("x"), SchemaError);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("radical addition") {
    CHECK((rad(1, 1, 2) + rad(-1, 1, 2)).is_zero());
    RadicalScalar a = RadicalScalar(Rational(1)) + rad(1, 1, 2);       // 1 + sqrt2
    RadicalScalar b = RadicalScalar(Rational(2)) + rad(-3, 1, 2);      // 2 - 3 sqrt2
    CHECK(a + b == RadicalScalar(Rational(3)) + rad(-2, 1, 2));        // 3 - 2 sqrt2
    CHECK(rad(1, 2, 6) + rad(1, 2, 6) == rad(1, 1, 6));                // sqrt6
}

TEST_CASE("radical multiplication") {
    CHECK(rad(1, 1, 2) * rad(1, 1, 2) == RadicalScalar(Rational(2)));
    CHECK(rad(1, 1, 6) * rad(1, 1, 10) == rad(2, 1, 15));  // 60 = 4 * 15
    RadicalScalar p = RadicalScalar(Rational(1)) + rad(1, 1, 2);
    RadicalScalar m = RadicalScalar(Rational(1)) + rad(-1, 1, 2);
    CHECK(p * m == RadicalScalar(Rational(-1)));
}

TEST_CASE("sqrt of rationals") {
    CHECK(RadicalScalar::sqrt_of(Rational(2)) == rad(1, 1, 2));
    CHECK(RadicalScalar::sqrt_of(Rational(9, 4)) == RadicalScalar(Rational(3, 2)));
    CHECK(RadicalScalar::sqrt_of(Rational(8)) == rad(2, 1, 2));
    CHECK(RadicalScalar::sqrt_of(Rational(0)).is_zero());
    CHECK(RadicalScalar::sqrt_of(Rational(1, 2)) == rad(1, 2, 2));  // sqrt(1/2) = sqrt2/2
    CHECK_THROWS_AS(RadicalScalar::sqrt_of(Rational(-1)), DomainError);
}

TEST_CASE("single-term inversion") {
    CHECK(rad(1, 1, 2).invert_single_term() == rad(1, 2, 2));
    CHECK(RadicalScalar(Rational(3)).invert_single_term() == RadicalScalar(Rational(1, 3)));
    RadicalScalar multi = RadicalScalar(Rational(1)) + rad(1, 1, 2);
    CHECK_THROWS_AS(multi.invert_single_term(), UnsupportedDivisionError);
    CHECK_THROWS_AS(RadicalScalar().invert_single_term(), UnsupportedDivisionError);
    // product with the input is 1
    RadicalScalar v = rad(-3, 4, 6);
    CHECK(v * v.invert_single_term() == RadicalScalar(Rational(1)));
}

TEST_CASE("squarefree validation and factor bound") {
    CHECK_THROWS_AS(RadicalScalar::radical(Rational(1), 8), SchemaError);
    CHECK_THROWS_AS(RadicalScalar::radical(Rational(1), 12), SchemaError);
    auto [c, d] = squarefree_decompose(BigInt(360));  // 360 = 6^2 * 10
    CHECK(c == 6);
    CHECK(d == 10);
    std::int64_t saved = factor_bound();
    factor_bound() = 100;
    // 10007 is prime and above the bound: cannot be certified squarefree
    CHECK_THROWS_AS(RadicalScalar::sqrt_of(Rational(10007)), FactorBoundError);
    factor_bound() = saved;
    CHECK(RadicalScalar::sqrt_of(Rational(10007)) == rad(1, 1, 10007));
}

TEST_CASE("ring axioms on randomized inputs") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 300; ++trial) {
        RadicalScalar a = random_radical(rng);
        RadicalScalar b = random_radical(rng);
        RadicalScalar c = random_radical(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        // canonical: no zero coefficients, all radicands squarefree
        RadicalScalar ab = a * b;
        for (const auto& [d, q] : ab.terms()) {
            CHECK(!q.is_zero());
            CHECK(is_squarefree(d));
        }
    }
}

TEST_CASE("sqrt squared returns the input") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> num(0, 400);
    std::uniform_int_distribution<long long> den(1, 40);
    for (int trial = 0; trial < 200; ++trial) {
        Rational q(num(rng), den(rng));
        RadicalScalar s = RadicalScalar::sqrt_of(q);
        CHECK(s * s == RadicalScalar(q));
    }
}

TEST_CASE("linear forms") {
    LinForm f = LinForm(Rational(2)) + LinForm::unknown(0) * Rational(3);
    LinForm g = LinForm::unknown(1) - LinForm(Rational(2));
    CHECK((f + g).constant_part() == Rational(0));
    CHECK((f * Rational(2)).coefficient(0) == Rational(6));
    CHECK_THROWS_AS(f * g, NonlinearError);
    CHECK(f * LinForm(Rational(2)) == f + f);
    std::map<int, Rational> vals{{0, Rational(1, 3)}};
    CHECK(f.evaluate(vals) == Rational(3));
}

TEST_CASE("fraction-free elimination and nullspace") {
    // rank-2 system with a one-dimensional kernel spanned by (1, -2, 1)
    QMatrix m = {
        {Rational(1), Rational(2), Rational(3)},
        {Rational(2), Rational(5, 2), Rational(3)},
    };
    auto basis = nullspace_basis(m, 3);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == QVector{Rational(1), Rational(-2), Rational(1)});

    // all-zero matrix: full kernel
    QMatrix z(2, QVector(3));
    CHECK(nullspace_basis(z, 3).size() == 3);

    auto ef = echelon_fraction_free(m);
    CHECK(ef.rank() == 2);
    CHECK(ef.pivot_cols == std::vector<int>{0, 1});
}

TEST_CASE("affine solve") {
    QMatrix a = {
        {Rational(1), Rational(1)},
        {Rational(1), Rational(-1)},
    };
    QVector b = {Rational(3), Rational(1)};
    auto sol = solve_affine(a, b);
    REQUIRE(sol.consistent);
    CHECK(sol.freedom() == 0);
    CHECK(sol.particular == QVector{Rational(2), Rational(1)});

    // inconsistent
    QMatrix a2 = {{Rational(1), Rational(1)}, {Rational(2), Rational(2)}};
    QVector b2 = {Rational(1), Rational(3)};
    CHECK_FALSE(solve_affine(a2, b2).consistent);

    // underdetermined
    QMatrix a3 = {{Rational(1), Rational(1)}};
    QVector b3 = {Rational(2)};
    auto sol3 = solve_affine(a3, b3);
    REQUIRE(sol3.consistent);
    CHECK(sol3.freedom() == 1);
    CHECK(sol3.particular[0] + sol3.particular[1] == Rational(2));
}

TEST_CASE("randomized nullspace sanity against row action") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> val(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        int rows = 4, cols = 6;
        QMatrix m(rows, QVector(cols));
        for (auto& r : m) {
            for (auto& x : r) x = Rational(val(rng));
        }
        for (const auto& v : nullspace_basis(m, cols)) {
            for (const auto& r : m) {
                Rational acc;
                for (int j = 0; j < cols; ++j) acc += r[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
                CHECK(acc.is_zero());
            }
        }
    }
}
