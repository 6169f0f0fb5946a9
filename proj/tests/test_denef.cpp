#include <doctest.h>

#include <random>

#include "woundcount/denef.hpp"

using namespace woundcount;

TEST_SUITE_BEGIN("denef");

TEST_CASE("valuation histograms on frozen instances") {
    FqPtr k2 = Fq::make(2, 1);
    Place vt = Place::finite(Poly::x(k2));
    ValuationHistogram h = valuation_histogram(vt);
    CHECK(h.counts == std::map<int, long long>{{0, 2}, {1, 1}});
    CHECK(h.total == 3);

    Place v2 = Place::finite(Poly(k2, {1, 1, 1}));
    ValuationHistogram h2 = valuation_histogram(v2);
    CHECK(h2.counts == std::map<int, long long>{{0, 4}, {1, 1}});
    CHECK(h2.total == 5);

    FqPtr k3 = Fq::make(3, 1);
    Place v3 = Place::finite(Poly::x(k3));
    ValuationHistogram h3 = valuation_histogram(v3);
    CHECK(h3.counts == std::map<int, long long>{{0, 9}, {1, 3}, {2, 1}});
    CHECK(h3.total == 13);
}

TEST_CASE("histogram budget") {
    FqPtr k = Fq::make(2, 1);
    DenefOptions opt;
    opt.budget = 2;
    CHECK_THROWS_AS(valuation_histogram(Place::finite(Poly::x(k)), opt), budget_exceeded);
}

TEST_CASE("residue-norm bijection") {
    FqPtr k2 = Fq::make(2, 1);
    Place vt = Place::finite(Poly::x(k2));
    CHECK(norm_images(vt).size() == 4);
    CHECK(residue_norm_bijection(vt));
    CHECK(residue_norm_bijection(Place::finite(Poly(k2, {1, 1, 1}))));

    FqPtr k3 = Fq::make(3, 1);
    CHECK(norm_images(Place::finite(Poly::x(k3))).size() == 27);
    CHECK(residue_norm_bijection(Place::finite(Poly::x(k3))));

    // negative control: a planted collision breaks distinctness
    auto images = norm_images(vt);
    images[2] = images[1];
    CHECK_FALSE(images_form_bijection(images, vt.qv, 2));
}

TEST_CASE("local density: closed form values") {
    FqPtr k = Fq::make(3, 1);
    Place vt = Place::finite(Poly::x(k));
    // s = 0: every term is 1, so the value is p
    CHECK(local_density(vt, {0.0, 0.0}, DensityMethod::closed).real() == doctest::Approx(3.0));
    // s = 1: 1 + 1/qv + 1/qv^2
    CHECK(local_density(vt, {1.0, 0.0}, DensityMethod::closed).real() ==
          doctest::Approx(1.0 + 1.0 / 3 + 1.0 / 9));
}

TEST_CASE("local density: brute force vs closed form") {
    FqPtr k = Fq::make(2, 1);
    Place vt = Place::finite(Poly::x(k));
    Cplx s(2.0, 3.0);
    Cplx a = local_density(vt, s, DensityMethod::bruteforce);
    Cplx b = local_density(vt, s, DensityMethod::closed);
    CHECK(std::abs(a - b) < 1e-9);

    std::mt19937 rng(99);
    std::uniform_real_distribution<double> re(0.2, 3.0), im(-2.0, 2.0);
    for (const Place& v : {vt, Place::finite(Poly(k, {1, 1, 1}))}) {
        for (int i = 0; i < 20; ++i) {
            Cplx sv(re(rng), im(rng));
            Cplx x = local_density(v, sv, DensityMethod::bruteforce);
            Cplx y = local_density(v, sv, DensityMethod::closed);
            CHECK(std::abs(x - y) <= 1e-9 * std::abs(y));
        }
    }
}

TEST_CASE("stratified transform: empty stratum only") {
    StratumData d;
    d.qv = 4;
    d.dim_x = 2;
    d.strata.push_back({{}, 7, {}});
    CHECK(denef_general_exact(d, {}) == Rat(7, 16));
}

TEST_CASE("stratified transform reproduces the norm-form closed form") {
    for (auto& [p, qv] : std::vector<std::pair<int, long long>>{{2, 2}, {3, 3}, {2, 4}}) {
        StratumData d = norm_form_stratum_data(qv, p);
        for (long long s : {1LL, 2LL, 5LL}) {
            Rat closed(0);
            for (int m = 0; m < p; ++m) closed += rat_pow(qv, -m * s);
            CHECK(denef_general_exact(d, {s}) == closed);
        }
    }
}

TEST_CASE("stratified transform control case: projective line") {
    StratumData line;
    line.qv = 3;
    line.dim_x = 1;
    line.indices.push_back({"hyperplane", 2, false, 1});
    line.strata.push_back({{}, 3, {}});
    line.strata.push_back({{0}, 1, {}});
    CHECK(denef_general_exact(line, {2}) == Rat(4, 3));  // (qv+1)/qv at s = rho
    // at the factor pole s = rho - 1 the evaluation must refuse
    CHECK_THROWS(denef_general_exact(line, {1}));
}

TEST_CASE("stratified transform on a product of two lines") {
    // two reduced hyperplane indices of multiplicity 2; the transform must
    // factor as the product of the single-line transforms
    for (long long qv : {2LL, 3LL, 5LL}) {
        StratumData d;
        d.qv = qv;
        d.dim_x = 2;
        d.indices.push_back({"H1", 2, false, 1});
        d.indices.push_back({"H2", 2, false, 1});
        d.strata.push_back({{}, qv * qv, {}});
        d.strata.push_back({{0}, qv, {}});
        d.strata.push_back({{1}, qv, {}});
        d.strata.push_back({{0, 1}, 1, {}});
        for (long long s1 : {2LL, 3LL}) {
            for (long long s2 : {2LL, 4LL}) {
                auto geom = [&](long long s) {
                    return Rat(qv - 1) / (rat_pow(qv, s - 1) - Rat(1));
                };
                Rat line1 = (Rat(qv) + geom(s1)) / Rat(qv);
                Rat line2 = (Rat(qv) + geom(s2)) / Rat(qv);
                CHECK(denef_general_exact(d, {s1, s2}) == line1 * line2);
            }
        }
    }
}

TEST_CASE("stratified transform with mixed reduced and non-reduced indices") {
    // product of the norm-form line (non-reduced index, multiplicity 1, p=2)
    // with the additive-group line (reduced index, multiplicity 2); strata of
    // the product carry the crossed counts, and the transform must factor
    for (long long qv : {2LL, 4LL}) {
        StratumData d;
        d.qv = qv;
        d.dim_x = 2;
        d.indices.push_back({"norm-form boundary", 1, true, 1});
        d.indices.push_back({"hyperplane", 2, false, 1});
        d.strata.push_back({{}, qv * qv, {}});
        d.strata.push_back({{0}, 0, {{{1}, qv}}});
        d.strata.push_back({{1}, qv, {}});
        d.strata.push_back({{0, 1}, 0, {{{1}, 1}}});
        for (long long s0 : {1LL, 2LL, 3LL}) {
            for (long long s1 : {2LL, 3LL}) {
                Rat wound_line = Rat(1) + rat_pow(qv, -s0);
                Rat additive_line =
                    (Rat(qv) + Rat(qv - 1) / (rat_pow(qv, s1 - 1) - Rat(1))) / Rat(qv);
                CHECK(denef_general_exact(d, {s0, s1}) == wound_line * additive_line);
            }
        }
    }
}

TEST_CASE("stratified transform input validation") {
    StratumData d = norm_form_stratum_data(2, 2);
    CHECK_THROWS(denef_general(d, {}));  // exponent count mismatch
    d.strata[1].exponent_histogram.clear();
    CHECK_THROWS(denef_general(d, {Cplx(2.0)}));  // missing histogram
}

TEST_CASE("volume at infinity") {
    CHECK(infinite_local_volume(2, 2) == Rat(1));
    CHECK(infinite_local_volume(3, 3) == Rat(1, 3));
    CHECK(infinite_local_volume(5, 5) == Rat(5) * rat_pow(5, -4));
    // q^(p-1) * volume = p
    CHECK(rat_pow(4, 1) * infinite_local_volume(2, 4) == Rat(2));
}

TEST_CASE("leading constant assembly") {
    ConstantReport r = leading_constant(Fq::make(2, 1), 12);
    CHECK(r.closed_form == doctest::Approx(0.5 / std::log(2.0)).epsilon(1e-12));
    CHECK(r.c_infinity == Rat(1, 2));
    CHECK(r.tamagawa_compact == Rat(2));
    CHECK(r.gap <= r.tail_bound);

    ConstantReport r3 = leading_constant(Fq::make(3, 1), 10);
    CHECK(r3.closed_form == doctest::Approx((8.0 / 9.0) / std::log(3.0)).epsilon(1e-12));
    CHECK(r3.gap <= 1e-8);
    CHECK(r3.gap <= r3.tail_bound);
}

TEST_SUITE_END();
