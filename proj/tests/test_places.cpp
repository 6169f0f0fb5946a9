#include <doctest.h>

#include <complex>

#include "woundcount/zeta.hpp"

using namespace woundcount;

TEST_SUITE_BEGIN("places");

TEST_CASE("place enumeration over F_2") {
    FqPtr k = Fq::make(2, 1);
    auto places = places_up_to(k, 1);
    REQUIRE(places.size() == 3);  // infinity, t, t+1
    CHECK(places[0].infinite);
    CHECK(places[1].pi.str() == "t");
    CHECK(places[2].pi.str() == "t+1");

    auto d2 = places_up_to(k, 2);
    REQUIRE(d2.size() == 4);  // adds exactly t^2+t+1
    CHECK(d2[3].pi.str() == "t^2+t+1");
    CHECK(d2[3].qv == 4);

    auto d3 = places_up_to(k, 3);
    CHECK(d3.size() == 6);  // two cubic places
}

TEST_CASE("place counts match the necklace formula and the distinct-degree test") {
    for (auto& [p, e] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 1}, {3, 1}, {2, 2}}) {
        FqPtr k = Fq::make(p, e);
        int D = k->q() > 3 ? 4 : 8;
        auto places = places_up_to(k, D);
        std::vector<long long> by_deg(D + 1, 0);
        for (const Place& v : places) {
            if (v.infinite) continue;
            CHECK(is_irreducible(v.pi));  // sieve vs distinct-degree criterion
            CHECK(v.pi.is_monic());
            ++by_deg[v.deg];
        }
        for (int d = 1; d <= D; ++d) CHECK(by_deg[d] == necklace_count(k->q(), d));
    }
}

TEST_CASE("valuations and absolute values") {
    FqPtr k = Fq::make(2, 1);
    Place vt = Place::finite(Poly::x(k));
    Place vinf = Place::infinity(k);

    Poly f(k, {0, 0, 1, 1});  // t^3+t^2 = t^2 (t+1)
    CHECK(valuation(vt, f) == 2);

    RationalFunction rf = make_rational(f, Poly::constant(k, 1));
    CHECK(valuation(vinf, rf) == -3);
    CHECK(abs_value_exact(vinf, rf) == Rat(8));  // |f|_inf = q^deg

    // product formula instance: f = t^2+t over {t, t+1, infinity}
    Poly g(k, {0, 1, 1});
    RationalFunction rg = make_rational(g, Poly::constant(k, 1));
    Place vt1 = Place::finite(Poly(k, {1, 1}));
    Rat prod = abs_value_exact(vt, rg) * abs_value_exact(vt1, rg) * abs_value_exact(vinf, rg);
    CHECK(prod == Rat(1));

    CHECK_THROWS(valuation(vt, Poly::zero(k)));
}

TEST_CASE("rational function normalization") {
    FqPtr k = Fq::make(3, 1);
    Poly n(k, {0, 2}), d(k, {2, 2});  // 2t / (2t+2)
    RationalFunction rf = make_rational(n, d);
    CHECK(rf.den.is_monic());
    CHECK(poly_gcd(rf.num, rf.den).degree() == 0);
    CHECK(rf.num * d == n * rf.den);  // same fraction
    CHECK_THROWS(make_rational(n, Poly::zero(k)));
}

TEST_CASE("zeta closed form and residue") {
    CHECK(std::abs(zeta_closed(2, {2.0, 0.0}) - Cplx(8.0 / 3.0)) < 1e-12);
    CHECK(zeta_residue(2) == doctest::Approx(2.0 / std::log(2.0)).epsilon(1e-12));
    CHECK(zeta_residue(3) == doctest::Approx(3.0 / (2.0 * std::log(3.0))).epsilon(1e-12));
    CHECK_THROWS(zeta_closed(2, {1.0, 0.0}));
    CHECK_THROWS(zeta_closed(2, {0.0, 0.0}));
    // pole on the imaginary lattice
    CHECK_THROWS(zeta_closed(2, Cplx(1.0, 2.0 * M_PI / std::log(2.0))));
}

TEST_CASE("truncated Euler products against the closed-form zeta") {
    FqPtr k = Fq::make(2, 1);
    auto places = places_up_to(k, 14);

    // factor (1 - qv^-2) over finite places: telescopes to 1 - q^(1-2) = 1/2
    auto fac2 = [](const Place& v) { return Cplx(1.0 - std::pow((double)v.qv, -2.0)); };
    EulerProductReport r = euler_product(places, fac2, 14, false, 1.0);
    CHECK(std::abs(r.value - Cplx(0.5)) < 1e-3);
    CHECK(std::abs(r.value - Cplx(0.5)) <= r.tail_bound);

    // zeta factors (1 - qv^-s)^-1 over finite places vs 1/(1 - q^(1-s))
    for (Cplx s : {Cplx(2, 0), Cplx(3, 0), Cplx(2, 1)}) {
        double sigma = s.real();
        auto fac = [&](const Place& v) {
            return 1.0 / (1.0 - std::exp(-s * std::log((double)v.qv)));
        };
        double constant = 1.0 / (1.0 - std::pow(2.0, -sigma));
        EulerProductReport rz = euler_product(places, fac, 14, false, sigma - 1.0, constant);
        Cplx closed = 1.0 / (1.0 - std::exp((1.0 - s) * std::log(2.0)));
        CHECK(std::abs(rz.value - closed) <= rz.tail_bound);
    }

    // constant factor 1: product 1
    EulerProductReport r1 = euler_product(places, [](const Place&) { return Cplx(1.0); }, 14,
                                          false, 1.0);
    CHECK(r1.value == Cplx(1.0));

    CHECK_THROWS(euler_product(places, fac2, 14, false, 0.0));  // delta must be positive
}

TEST_CASE("euler product tail bound covers the telescoping limit at higher q") {
    FqPtr k = Fq::make(3, 1);
    auto places = places_up_to(k, 10);
    auto fac = [](const Place& v) { return Cplx(1.0 - std::pow((double)v.qv, -3.0)); };
    EulerProductReport r = euler_product(places, fac, 10, false, 2.0);
    double closed = 1.0 - std::pow(3.0, -2.0);  // 1 - q^(1-3)
    CHECK(std::abs(r.value - Cplx(closed)) <= r.tail_bound);
    CHECK(std::abs(r.value.real() - closed) < 1e-9);
}

TEST_SUITE_END();
