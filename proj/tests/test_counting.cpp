#include <doctest.h>

#include <set>

#include "woundcount/counting.hpp"

using namespace woundcount;

TEST_SUITE_BEGIN("counting");

TEST_CASE("frozen small counts at p=q=2") {
    FqPtr k = Fq::make(2, 1);
    CHECK(count_points(k, 0) == 1);
    CHECK(count_points(k, 1) == 2);
    CHECK(count_points(k, 2) == 2);
    CHECK(count_points(k, 3) == 4);
    CHECK(count_points(k, 4) == 8);

    auto m0 = enumerate_points(k, 0);
    REQUIRE(m0.size() == 1);
    CHECK(m0[0] == identity_point(k));

    // M=3: the four coprime pairs (1,t), (t+1,t), (1,t+1), (t,t+1)
    auto m3 = enumerate_points(k, 3);
    REQUIRE(m3.size() == 4);
    std::set<std::string> got;
    for (const GroupPoint& x : m3) got.insert(x.x[0].str() + "|" + x.x[1].str());
    CHECK(got == std::set<std::string>{"1|t", "t+1|t", "1|t+1", "t|t+1"});
}

TEST_CASE("enumerated points are canonical, deduplicated and of exact height") {
    for (uint32_t p : {2u, 3u}) {
        FqPtr k = Fq::make(p, 1);
        for (int M = 0; M <= (p == 2 ? 8 : 5); ++M) {
            auto pts = enumerate_points(k, M);
            CHECK(pts.size() == count_points(k, M));
            std::set<std::string> seen;
            for (const GroupPoint& x : pts) {
                CHECK(height_exponent(x) == M);
                // canonical: re-normalization is the identity
                std::vector<Poly> copy = x.x;
                CHECK(make_point(copy) == x);
                std::string key;
                for (const Poly& c : x.x) key += c.str() + "|";
                seen.insert(key);
            }
            CHECK(seen.size() == pts.size());
        }
    }
}

TEST_CASE("structured equals naive on the oracle range") {
    FqPtr k2 = Fq::make(2, 1);
    for (int M = 0; M <= 6; ++M) CHECK(count_points(k2, M) == count_points_naive(k2, M));
    FqPtr k3 = Fq::make(3, 1);
    for (int M = 0; M <= 4; ++M) CHECK(count_points(k3, M) == count_points_naive(k3, M));
}

TEST_CASE("worker count does not change results") {
    FqPtr k = Fq::make(2, 1);
    CountOptions one, four;
    four.workers = 4;
    for (int M : {5, 9, 11}) CHECK(count_points(k, M, one) == count_points(k, M, four));
    auto a = enumerate_points(k, 7, one);
    auto b = enumerate_points(k, 7, four);
    CHECK(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);  // deterministic order
}

TEST_CASE("budget is enforced with a report") {
    FqPtr k = Fq::make(2, 1);
    CountOptions opt;
    opt.budget = 10;
    CHECK_THROWS_AS(count_points(k, 12, opt), budget_exceeded);
    try {
        count_points(k, 12, opt);
    } catch (const budget_exceeded& ex) {
        CHECK(ex.estimate > 10);
    }
}

TEST_CASE("monotone growth at p=q=2") {
    FqPtr k = Fq::make(2, 1);
    CountTable t = build_count_table(k, 0, 12);
    for (int M = 1; M <= 12; ++M) CHECK(t.at(M) > 0);
}

TEST_CASE("averaged counts") {
    CountTable t;
    t.p = 2;
    t.q = 2;
    t.method = "structured";
    t.rows = {{4, 8}, {5, 0}};
    // d=1 is the plain count
    CHECK(averaged_count(t, Rat(1), 1, 4) == doctest::Approx(8.0));
    // d=2, a=1/2 with table (8, 0): (1/2)(8 + q^-1/2 * 0) = 4
    CHECK(averaged_count(t, Rat(1, 2), 2, 4) == doctest::Approx(4.0));
    CHECK_THROWS(averaged_count(t, Rat(1), 2, 5));  // missing table entry
}

TEST_CASE("rescaled table realizes the squared height") {
    FqPtr k = Fq::make(2, 1);
    CountTable t = build_count_table(k, 0, 4);
    CountTable t2 = rescale_table(t, 2);
    CHECK(t2.at(4) == t.at(2));  // height-q^2 points of the doubled class
    CHECK(t2.at(2) == t.at(1));
    for (int M = 1; M <= 7; M += 2) CHECK(t2.at(M) == 0);
}

TEST_CASE("partial zeta sums and imaginary periodicity") {
    CountTable t;
    t.p = 2;
    t.q = 2;
    t.method = "structured";
    t.rows = {{0, 1}, {1, 0}, {2, 0}, {3, 0}};
    CHECK(zeta_partial(t, {2.0, 0.3}, 3) == Cplx(1.0));  // only the identity contributes

    FqPtr k = Fq::make(2, 1);
    CountTable tc = build_count_table(k, 0, 10);
    Cplx s(1.5, 0.7);
    Cplx period(0.0, 2.0 * M_PI / std::log(2.0));
    CHECK(std::abs(zeta_partial(tc, s, 10) - zeta_partial(tc, s + period, 10)) < 1e-9);
}

TEST_CASE("empirical constant approaches the closed form") {
    FqPtr k = Fq::make(2, 1);
    CountTable t = build_count_table(k, 0, 14);
    double est = empirical_constant(t, 8, 14);
    CHECK(std::abs(est - 0.5) / 0.5 < 0.05);

    FqPtr k3 = Fq::make(3, 1);
    CountTable t3 = build_count_table(k3, 0, 9);
    double est3 = empirical_constant(t3, 6, 9);
    CHECK(std::abs(est3 - 8.0 / 9.0) / (8.0 / 9.0) < 0.10);

    CHECK_THROWS(empirical_constant(t, 9, 8));  // empty window
}

TEST_SUITE_END();
