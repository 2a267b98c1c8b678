#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rzeta/oracles.hpp"

using namespace rzeta;

namespace {

ValidatedAut fibonacci() {
    AffineAut a;
    a.D = MatZ::from_rows({{1, 1}, {1, 0}});
    a.d = {0, 0};
    return validate({2, 2}, a);
}

PolyZ poly(std::vector<long> c) {
    std::vector<mpz_class> v(c.begin(), c.end());
    return PolyZ(std::move(v));
}

}  // namespace

TEST_CASE("oracle_count_solutions worked examples") {
    CHECK(oracle_count_solutions(MatF2(2, 2), VecF2(2)) == 4);
    CHECK(oracle_count_solutions(MatF2::identity(2), VecF2::from_bits({1, 0})) == 1);

    std::mt19937_64 rng(71);
    for (int t = 0; t < 50; ++t) {
        MatF2 a(6, 6);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) a.set(i, j, rng() & 1);
        VecF2 b = random_vec_f2(rng, 6);
        CHECK(oracle_count_solutions(a, b) == count_solutions(a, b));
    }
    CHECK_THROWS_AS(oracle_count_solutions(MatF2(2, 23), VecF2(2)), std::invalid_argument);
}

TEST_CASE("oracle_torus_rnumber worked examples") {
    MatZ d2 = MatZ::from_rows({{2, 1}, {1, 1}});
    CHECK(oracle_torus_rnumber(d2, 1) == 1);
    CHECK(oracle_torus_rnumber(d2, 2) == 5);

    // I - d2 = diag(2, 3): cokernel of order 6
    MatZ shaped = MatZ::from_rows({{-1, 0}, {0, -2}});
    CHECK(oracle_torus_rnumber(shaped, 1) == 6);

    CHECK_THROWS_AS(oracle_torus_rnumber(MatZ::identity(2), 1), std::invalid_argument);
}

TEST_CASE("oracle_windowed_classes on curated instances") {
    ValidatedAut fib = fibonacci();

    WindowedClasses w1 = oracle_windowed_classes(fib, 6, 1);
    CHECK(w1.stable);
    CHECK(w1.classes == 2);

    WindowedClasses w3 = oracle_windowed_classes(fib, 6, 3);
    CHECK(w3.stable);
    CHECK(w3.classes == 8);

    AffineAut t;
    t.D = MatZ::from_rows({{2, 1}, {1, 1}});
    t.d = {0, 0};
    WindowedClasses wt = oracle_windowed_classes(validate({2, 0}, t), 6, 1);
    CHECK(wt.stable);
    CHECK(wt.classes == 1);

    // nonzero translation part: same D, same counts, different moves
    AffineAut shifted;
    shifted.D = MatZ::from_rows({{1, 1}, {1, 0}});
    shifted.d = {1, 1};
    ValidatedAut sh = validate({2, 2}, shifted);
    for (std::uint64_t m = 1; m <= 3; ++m) {
        WindowedClasses wm = oracle_windowed_classes(sh, 6, m);
        CHECK(wm.stable);
        CHECK(mpz_class(static_cast<unsigned long>(wm.classes))
              == reidemeister_number(sh, m).value());
    }

    CHECK_THROWS_AS(oracle_windowed_classes(fib, 9, 1), std::invalid_argument);
}

TEST_CASE("oracle_sequence equals the linear-algebra path") {
    MatF2 id2 = MatF2::identity(2);
    CHECK(oracle_sequence(id2, VecF2(2), 6) == std::vector<std::uint64_t>{4, 4, 4, 4, 4, 4});
    CHECK(oracle_sequence(id2, VecF2::from_bits({1, 0}), 6)
          == std::vector<std::uint64_t>{0, 4, 0, 4, 0, 4});
    MatF2 fib = MatF2::from_rows({{1, 1}, {1, 0}});
    CHECK(oracle_sequence(fib, VecF2(2), 6) == std::vector<std::uint64_t>{1, 1, 4, 1, 1, 4});

    std::mt19937_64 rng(72);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + rng() % 7;
        MatF2 d = random_invertible_f2(rng, n);
        VecF2 dv = random_vec_f2(rng, n);
        auto got = oracle_sequence(d, dv, 20);
        auto tables = solution_sequence(d, dv, 20);
        CHECK(got == tables.v);
    }
}

TEST_CASE("oracle_series_match accepts truth and rejects perturbations") {
    RationalFn geo;
    geo.numerator = poly({1});
    geo.denominator = poly({1, -1});
    std::vector<mpz_class> ones(10, 1);
    CHECK(oracle_series_match(geo, ones));

    RationalFn lucas_fn;
    lucas_fn.numerator = poly({1});
    lucas_fn.denominator = poly({1, -1, -1});
    std::vector<mpz_class> lucas{1, 3, 4, 7, 11, 18, 29, 47};
    CHECK(oracle_series_match(lucas_fn, lucas));

    RationalFn wrong;
    wrong.numerator = poly({1});
    wrong.denominator = poly({1, -1, 1});  // sign flipped
    CHECK(!oracle_series_match(wrong, lucas));
}

TEST_CASE("random verification comes back clean") {
    auto reports = run_random_verification(7, 40, 6);
    for (const auto& rep : reports) {
        CAPTURE(rep.check);
        CHECK(rep.instances > 0);
        CHECK(rep.failures == 0);
    }
}

TEST_CASE("instance verification on the Fibonacci automorphism") {
    auto reports = run_instance_verification(fibonacci());
    CHECK(reports.size() >= 3);
    for (const auto& rep : reports) {
        CAPTURE(rep.check);
        CHECK(rep.failures == 0);
    }
}
