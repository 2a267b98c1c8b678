#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rzeta/zeta.hpp"

using namespace rzeta;

namespace {

std::vector<RNumber> rn(std::vector<long> v) {
    std::vector<RNumber> out;
    for (long x : v) out.emplace_back(mpz_class(x));
    return out;
}

ValidatedAut fibonacci(std::vector<long> d = {0, 0}) {
    AffineAut a;
    a.D = MatZ::from_rows({{1, 1}, {1, 0}});
    a.d = {d[0], d[1]};
    return validate({2, 2}, a);
}

PolyZ poly(std::vector<long> c) {
    std::vector<mpz_class> v(c.begin(), c.end());
    return PolyZ(std::move(v));
}

}  // namespace

TEST_CASE("zeta_series worked examples") {
    // R == 1 is the series of 1/(1-z)
    PowerSeriesQ e1 = zeta_series(rn({1, 1, 1, 1, 1, 1}));
    for (auto& c : e1) CHECK(c == 1);

    // Lucas numbers give the Fibonacci series of 1/(1-z-z^2)
    PowerSeriesQ e2 = zeta_series(rn({1, 3, 4, 7, 11, 18, 29}));
    CHECK(e2 == PowerSeriesQ{1, 1, 2, 3, 5, 8, 13, 21});

    // Fibonacci automorphism: R = Lucas + (a^1 + a^3)
    PowerSeriesQ e3 = zeta_series(rn({2, 4, 8, 8, 12, 22}));
    // oracle: multiply out 1/((1-z-z^2)(1-z)(1-z^3)) to the same order
    RationalFn f;
    f.numerator = poly({1});
    f.denominator = poly({1, -1, -1}) * poly({1, -1}) * poly({1, 0, 0, -1});
    PowerSeriesQ expected = expand(f, 7);
    CHECK(e3 == expected);
    CHECK(e3 == PowerSeriesQ{1, 2, 4, 8, 14, 24, 41});

    std::vector<RNumber> bad = rn({1, 2});
    bad.push_back(RNumber::infinite());
    CHECK_THROWS_AS(zeta_series(bad), zeta_undefined);
}

TEST_CASE("degree_bound") {
    CHECK(degree_bound({2, 2}) == 8);
    CHECK(degree_bound({4, 2}) == 32);
    CHECK(degree_bound({1, 1}) == 4);
}

TEST_CASE("reconstruct worked examples") {
    PowerSeriesQ ones{1, 1, 1};
    RationalFn f1 = reconstruct(ones, 1);
    CHECK(f1.numerator == poly({1}));
    CHECK(f1.denominator == poly({1, -1}));
    CHECK(f1.certified);

    PowerSeriesQ fib{1, 1, 2, 3, 5, 8};
    RationalFn f2 = reconstruct(fib, 2);
    CHECK(f2.numerator == poly({1}));
    CHECK(f2.denominator == poly({1, -1, -1}));

    // Fibonacci automorphism at the real bound B = 8
    std::vector<RNumber> rs = reidemeister_sequence(fibonacci(), 27);
    RationalFn f3 = reconstruct(zeta_series(rs), 8);
    CHECK(f3.certified);
    CHECK(f3.numerator == poly({1}));
    CHECK(f3.denominator == poly({1, -2, 0, 0, 2, 0, -1}));
    // which is exactly (1-z-z^2)(1-z)(1-z^3)
    CHECK(f3.denominator == poly({1, -1, -1}) * poly({1, -1}) * poly({1, 0, 0, -1}));
}

TEST_CASE("reconstruct needs enough terms and integer output") {
    PowerSeriesQ s{1, 1, 1};
    CHECK_THROWS_AS(reconstruct(s, 2), std::invalid_argument);
    // 1/(1 - z/2) reduces to non-integer coefficients
    PowerSeriesQ half{1, mpq_class(1, 2), mpq_class(1, 4)};
    CHECK_THROWS_AS(reconstruct(half, 1), reconstruction_error);
}

TEST_CASE("second_factor worked examples") {
    RationalFn a = second_factor(BasisCombo({{1, 1}, {3, 1}}, 2));
    CHECK(a.numerator == poly({1}));
    CHECK(a.denominator == poly({1, -1}) * poly({1, 0, 0, -1}));

    RationalFn b = second_factor(BasisCombo());
    CHECK(b.denominator == poly({1}));

    RationalFn c = second_factor(BasisCombo({{2, 2}}, 2));
    CHECK(c.denominator == poly({1, 0, -2, 0, 1}));
}

TEST_CASE("radius worked examples") {
    RationalFn f1;
    f1.numerator = poly({1});
    f1.denominator = poly({1, -1});
    f1.certified = true;
    Radius r1 = radius(f1);
    CHECK(r1.finite);
    CHECK(std::abs(r1.value - 1.0) <= 2e-9);

    RationalFn f2;
    f2.numerator = poly({1});
    f2.denominator = poly({1, -1, -1});
    f2.certified = true;
    Radius r2 = radius(f2);
    CHECK(std::abs(r2.value - 0.6180339887498949) <= 2e-9);

    RationalFn f3;
    f3.numerator = poly({5});
    f3.denominator = poly({1});
    CHECK(!radius(f3).finite);

    // double pole at the radius: 1/(1-z^2)^2 still isolates t = 1
    RationalFn f4;
    f4.numerator = poly({1});
    f4.denominator = poly({1, 0, -2, 0, 1});
    Radius r4 = radius(f4);
    CHECK(std::abs(r4.value - 1.0) <= 2e-9);
}

TEST_CASE("full_pipeline on the Fibonacci flagship") {
    PipelineResult res = full_pipeline(fibonacci());
    CHECK(res.fn.certified);
    CHECK(res.fn.numerator == poly({1}));
    CHECK(res.fn.denominator == poly({1, -2, 0, 0, 2, 0, -1}));
    CHECK(std::abs(res.r.value - 0.6180339887498949) <= 2e-9);
    CHECK(res.second_combo == BasisCombo({{1, 1}, {3, 1}}, 2));
    CHECK(res.second_factor_checked);
    CHECK(res.rnumbers[0] == 2);
    CHECK(res.rnumbers[4] == 12);

    // d = (1,0) has the same decomposition here, hence the same zeta
    PipelineResult res2 = full_pipeline(fibonacci({1, 0}));
    CHECK(res2.fn.numerator == res.fn.numerator);
    CHECK(res2.fn.denominator == res.fn.denominator);
}

TEST_CASE("full_pipeline on the pure torus example") {
    AffineAut a;
    a.D = MatZ::from_rows({{2, 1}, {1, 1}});
    a.d = {0, 0};
    PipelineResult res = full_pipeline(validate({2, 0}, a));
    CHECK(res.fn.numerator == poly({1, -2, 1}));
    CHECK(res.fn.denominator == poly({1, -3, 1}));
    CHECK(res.second_combo.coeffs().empty());
    // min pole modulus (3 - sqrt(5))/2
    CHECK(std::abs(res.r.value - 0.3819660112501051) <= 2e-9);
}

TEST_CASE("full_pipeline refuses undefined zetas") {
    AffineAut a;
    a.D = MatZ::identity(2);
    a.d = {0, 0};
    CHECK_THROWS_AS(full_pipeline(validate({2, 2}, a)), zeta_undefined);
}

TEST_CASE("expanded reconstruction matches the series everywhere") {
    PipelineResult res = full_pipeline(fibonacci());
    PowerSeriesQ ex = expand(res.fn, res.series.size());
    CHECK(ex == res.series);
    // degree bound respected
    CHECK(res.fn.numerator.degree() + res.fn.denominator.degree()
          <= static_cast<long>(res.fn.degree_bound_used));
}

TEST_CASE("radius agrees with the series-tail growth estimate") {
    // 1/limsup |e_m|^(1/m) from a long expansion, within 1e-3
    auto tail_estimate = [](const RationalFn& f, std::size_t m) {
        PowerSeriesQ e = expand(f, m + 1);
        mpq_class em = abs(e[m]);
        long exp2;
        double mant = mpz_get_d_2exp(&exp2, em.get_num().get_mpz_t());
        double log_em = std::log(mant) + static_cast<double>(exp2) * std::log(2.0) -
                        std::log(em.get_den().get_d());
        return std::exp(-log_em / static_cast<double>(m));
    };

    PipelineResult fib = full_pipeline(fibonacci());
    CHECK(std::abs(fib.r.value - tail_estimate(fib.fn, 4000)) <= 1e-3);

    AffineAut t;
    t.D = MatZ::from_rows({{2, 1}, {1, 1}});
    t.d = {0, 0};
    PipelineResult tor = full_pipeline(validate({2, 0}, t));
    CHECK(std::abs(tor.r.value - tail_estimate(tor.fn, 4000)) <= 1e-3);
}

TEST_CASE("product instance pipeline: multiplicative R and rational zeta") {
    AffineAut a;
    a.D = MatZ::block_diag(MatZ::from_rows({{1, 1}, {1, 0}}), MatZ::from_rows({{2, 1}, {1, 1}}));
    a.d = {0, 0, 0, 0};
    ValidatedAut aut = validate({4, 2}, a);
    PipelineResult res = full_pipeline(aut);
    CHECK(res.fn.certified);
    CHECK(res.rnumbers[1] == 20);
    PowerSeriesQ ex = expand(res.fn, res.series.size());
    CHECK(ex == res.series);
}
