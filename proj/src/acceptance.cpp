#include "woundcount/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "woundcount/charsum.hpp"
#include "woundcount/counting.hpp"
#include "woundcount/denef.hpp"
#include "woundcount/poles.hpp"
#include "woundcount/wound.hpp"
#include "woundcount/zeta.hpp"

namespace woundcount {

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what;
        }
    }
};

std::vector<Place> finite_places(const FqPtr& k, int max_degree) {
    std::vector<Place> out;
    for (Place& v : places_up_to(k, max_degree))
        if (!v.infinite) out.push_back(std::move(v));
    return out;
}

// the place sets of the histogram criteria: p=q=2 deg<=3, p=q=3 deg<=2,
// p=q=5 deg 1
std::vector<std::pair<FqPtr, int>> histogram_scope() {
    return {{Fq::make(2, 1), 3}, {Fq::make(3, 1), 2}, {Fq::make(5, 1), 1}};
}

void criterion_histograms(Check& c) {
    for (auto& [k, D] : histogram_scope()) {
        for (const Place& v : finite_places(k, D)) {
            ValuationHistogram h = valuation_histogram(v);
            auto cf = ValuationHistogram::closed_form(v.qv, k->p());
            c.expect(h.counts == cf, "histogram mismatch at q=" + std::to_string(k->q()) +
                                         " place " + v.pi.str());
            long long want_total = 0;
            for (auto& [m, n] : cf) want_total += n;
            c.expect(h.total == want_total, "class count mismatch at " + v.pi.str());
        }
    }
}

void criterion_bijection(Check& c) {
    for (auto& [k, D] : histogram_scope())
        for (const Place& v : finite_places(k, D))
            c.expect(residue_norm_bijection(v), "norm map not bijective at q=" +
                                                    std::to_string(k->q()) + " place " + v.pi.str());
}

void criterion_density(Check& c) {
    for (auto& [k, D] : histogram_scope()) {
        std::mt19937 rng(20260809);
        const double im_cap = 2.0 * M_PI / std::log(static_cast<double>(k->q()));
        std::uniform_real_distribution<double> re(0.25, 3.0), im(-im_cap, im_cap);
        for (const Place& v : finite_places(k, D)) {
            for (int i = 0; i < 20; ++i) {
                Cplx s(re(rng), im(rng));
                Cplx a = local_density(v, s, DensityMethod::bruteforce);
                Cplx b = local_density(v, s, DensityMethod::closed);
                double rel = std::abs(a - b) / std::abs(b);
                c.expect(rel <= 1e-9, "density routes disagree at " + v.pi.str());
            }
        }
    }
}

void criterion_denef(Check& c) {
    // the norm-form stratum data reproduces the closed form
    for (auto& [p, qv] : std::vector<std::pair<int, long long>>{{2, 2}, {2, 4}, {2, 8},
                                                                {3, 3}, {3, 9}, {5, 5}}) {
        StratumData data = norm_form_stratum_data(qv, p);
        std::mt19937 rng(412);
        std::uniform_real_distribution<double> re(0.25, 3.0), im(-3.0, 3.0);
        const double lqv = std::log(static_cast<double>(qv));
        for (int i = 0; i < 12; ++i) {
            Cplx s(re(rng), im(rng));
            Cplx general = denef_general(data, {s});
            Cplx closed = 0;
            for (int m = 0; m < p; ++m) closed += std::exp(-s * (lqv * m));
            c.expect(std::abs(general - closed) <= 1e-9 * std::abs(closed),
                     "stratified transform deviates from the closed form");
        }
        // exact agreement at integer exponents
        for (long long s : {1LL, 2LL, 3LL}) {
            Rat general = denef_general_exact(data, {s});
            Rat closed(0);
            for (int m = 0; m < p; ++m) closed += rat_pow(qv, -m * s);
            c.expect(general == closed, "exact stratified transform mismatch");
        }
    }
    // control case: the projective line as the additive-group
    // compactification, one reduced boundary point of multiplicity 2
    for (long long qv : {2LL, 3LL, 4LL, 5LL, 9LL}) {
        StratumData line;
        line.qv = qv;
        line.dim_x = 1;
        line.indices.push_back({"hyperplane", 2, false, 1});
        line.strata.push_back({{}, qv, {}});
        line.strata.push_back({{0}, 1, {}});
        Rat got = denef_general_exact(line, {2});
        Rat want = Rat(qv + 1, qv);
        c.expect(got == want, "control case value wrong at qv=" + std::to_string(qv));
    }
}

void criterion_asymptotic(Check& c, unsigned workers) {
    CountOptions opt;
    opt.workers = workers;
    {
        FqPtr k = Fq::make(2, 1);
        double cw = 1.0 - std::pow(2.0, 1 - 2);  // 1 - q^(1-p) = 1/2
        CountTable t = build_count_table(k, 0, 14, false, opt);
        c.expect(t.at(0) == 1, "N(0) != 1 at p=q=2");
        for (int M = 6; M <= 14; ++M) {
            double ratio = static_cast<double>(t.at(M)) / (cw * std::pow(2.0, M));
            c.expect(0.95 <= ratio && ratio <= 1.05,
                     "ratio out of [0.95,1.05] at p=q=2, M=" + std::to_string(M));
        }
    }
    {
        FqPtr k = Fq::make(3, 1);
        double cw = 1.0 - std::pow(3.0, 1 - 3);  // 8/9
        CountTable t = build_count_table(k, 0, 9, false, opt);
        for (int M = 5; M <= 9; ++M) {
            double ratio = static_cast<double>(t.at(M)) / (cw * std::pow(3.0, M));
            c.expect(0.90 <= ratio && ratio <= 1.10,
                     "ratio out of [0.90,1.10] at p=q=3, M=" + std::to_string(M));
        }
    }
}

void criterion_naive(Check& c, unsigned workers) {
    CountOptions opt;
    opt.workers = workers;
    {
        FqPtr k = Fq::make(2, 1);
        for (int M = 0; M <= 6; ++M)
            c.expect(count_points(k, M, opt) == count_points_naive(k, M, opt),
                     "structured != naive at p=q=2, M=" + std::to_string(M));
    }
    {
        FqPtr k = Fq::make(3, 1);
        for (int M = 0; M <= 4; ++M)
            c.expect(count_points(k, M, opt) == count_points_naive(k, M, opt),
                     "structured != naive at p=q=3, M=" + std::to_string(M));
    }
}

void criterion_constant(Check& c) {
    for (uint32_t p : {2u, 3u}) {
        ConstantReport r = leading_constant(Fq::make(p, 1), 12);
        std::ostringstream tag;
        tag << std::setprecision(3) << "p=q=" << p << " gap=" << r.gap
            << " tail_bound=" << r.tail_bound;
        c.expect(r.gap <= 1e-6, "assembled constant off by more than 1e-6 at " + tag.str());
        c.expect(r.gap <= r.tail_bound, "gap exceeds the reported tail bound at " + tag.str());
    }
}

void criterion_measures(Check& c) {
    for (auto& [p, q] : std::vector<std::pair<int, long long>>{{2, 2}, {2, 4}, {3, 3}, {5, 5}}) {
        Rat vol = infinite_local_volume(p, q);
        c.expect(vol == Rat(p) * rat_pow(q, -(p - 1)),
                 "infinite volume wrong at p=" + std::to_string(p));
        c.expect(rat_pow(q, p - 1) * vol == Rat(p),
                 "compact Tamagawa volume wrong at p=" + std::to_string(p));
    }
}

void criterion_charsums(Check& c, unsigned workers) {
    CharSumOptions opt;
    opt.workers = workers;
    for (auto& [p, e] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        FqPtr k = Fq::make(p, e);
        long long qv = k->q();
        for (int n = 1; n <= 3; ++n) {
            for (int d = 0; d <= 4; ++d) {
                if (d > 0 && d % p == 0) continue;
                LaurentTruncation u = LaurentTruncation::one(k, n * d + 1);
                CharSumResult r = unit_character_sum(u, n, d, n * d + 1, opt);
                Cplx want = 0;
                if (d == 0)
                    want = 1.0 - 1.0 / static_cast<double>(qv);
                else if (n == 1 && d == 1)
                    want = -1.0 / static_cast<double>(qv);
                c.expect(std::abs(r.value - want) <= 1e-10,
                         "character sum off the table at qv=" + std::to_string(qv) +
                             " n=" + std::to_string(n) + " d=" + std::to_string(d));
            }
        }
    }
}

void criterion_poles(Check& c) {
    // anticanonical class: single index, lambda = rho = 1
    {
        BundleClass cls{{{"boundary", Rat(1), 1}}};
        PoleStructure ps = pole_structure(cls, 2);
        c.expect(ps.a == Rat(1) && ps.b == 1 && ps.d == Rat(1) && ps.g == Rat(1),
                 "anticanonical invariants wrong");
        c.expect(ps.poles.size() == 1 && ps.poles[0].j == 0, "anticanonical pole list wrong");
    }
    // twice the anticanonical class
    {
        BundleClass cls{{{"boundary", Rat(2), 1}}};
        PoleStructure ps = pole_structure(cls, 2);
        c.expect(ps.a == Rat(1, 2) && ps.d == Rat(2), "doubled-class invariants wrong");
        c.expect(ps.poles.size() == 2, "doubled class should have two largest-order poles");
        if (ps.poles.size() == 2) {
            double want = M_PI / std::log(2.0);
            c.expect(std::abs(ps.poles[1].im - want) <= 1e-12, "second pole off the lattice");
        }
        // the rescaled count table vanishes at odd exponents
        FqPtr k = Fq::make(2, 1);
        CountTable t = rescale_table(build_count_table(k, 0, 6), 2);
        for (int M = 1; M <= 12; M += 2)
            c.expect(t.at(M) == 0, "doubled-height count nonzero at odd M=" + std::to_string(M));
    }
    // fractional coordinate 1/p
    {
        BundleClass cls{{{"boundary", Rat(1, 2), 1}}};
        PoleStructure ps = pole_structure(cls, 2);
        c.expect(ps.g == Rat(1, 2), "fractional class period divisor wrong");
        double want = 2.0 * M_PI * 2.0 / std::log(2.0);
        c.expect(std::abs(ps.period_im - want) <= 1e-12, "fractional class period wrong");
    }
}

void criterion_global_properties(Check& c, unsigned workers) {
    // product formula: every nonzero polynomial of degree <= 6 over F_2 and
    // degree <= 4 over F_3 (well over 200), as exact rationals
    long long checked = 0;
    for (uint32_t p : {2u, 3u}) {
        FqPtr k = Fq::make(p, 1);
        const int maxdeg = 6;
        auto places = places_up_to(k, maxdeg);
        const uint32_t q = k->q();
        unsigned long long total = 1;
        for (int i = 0; i <= maxdeg; ++i) total *= q;
        for (unsigned long long code = 1; code < total; ++code) {
            std::vector<uint32_t> cs(maxdeg + 1, 0);
            unsigned long long cc = code;
            for (int i = 0; i <= maxdeg; ++i) {
                cs[i] = static_cast<uint32_t>(cc % q);
                cc /= q;
            }
            RationalFunction f = make_rational(Poly(k, cs), Poly::constant(k, 1));
            Rat prod(1);
            for (const Place& v : places) prod *= abs_value_exact(v, f);
            c.expect(prod == Rat(1), "product formula fails for " + f.num.str());
            ++checked;
        }
    }
    c.expect(checked >= 200, "fewer than 200 polynomials checked");

    // group axioms, p-torsion and the height cross-check on enumerated points
    CountOptions opt;
    opt.workers = workers;
    for (auto& [p, maxM] : std::vector<std::pair<uint32_t, int>>{{2, 5}, {3, 5}}) {
        FqPtr k = Fq::make(p, 1);
        std::vector<GroupPoint> pts;
        GroupPoint e = identity_point(k);
        for (int M = 0; M <= maxM; ++M)
            for (GroupPoint& x : enumerate_points(k, M, opt)) pts.push_back(std::move(x));
        std::mt19937 rng(7);
        std::uniform_int_distribution<size_t> pick(0, pts.size() - 1);
        for (const GroupPoint& x : pts) {
            c.expect(group_mul(e, x) == x, "identity law fails");
            c.expect(height_exponent(x) == height_exponent_by_places(x),
                     "height routes disagree on " + x.f.str());
            // p-torsion: the p-fold product collapses to the identity
            GroupPoint acc = x;
            for (uint32_t i = 1; i < p; ++i) acc = group_mul(acc, x);
            c.expect(acc == e, "point is not p-torsion: " + x.f.str());
            c.expect(group_mul(x, group_inv(x)) == e, "inverse law fails");
        }
        for (int i = 0; i < 1000; ++i) {
            const GroupPoint &a = pts[pick(rng)], &b = pts[pick(rng)], &d = pts[pick(rng)];
            c.expect(group_mul(a, b) == group_mul(b, a), "commutativity fails");
            c.expect(group_mul(group_mul(a, b), d) == group_mul(a, group_mul(b, d)),
                     "associativity fails");
        }
    }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& log, const AcceptanceOptions& opt) {
    using clock = std::chrono::steady_clock;
    std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"valuation-histogram identity", [&](Check& c) { criterion_histograms(c); }},
        {"residue-norm bijection", [&](Check& c) { criterion_bijection(c); }},
        {"local-density equivalence", [&](Check& c) { criterion_density(c); }},
        {"stratified-transform specialization", [&](Check& c) { criterion_denef(c); }},
        {"point-count asymptotic", [&](Check& c) { criterion_asymptotic(c, opt.workers); }},
        {"structured-vs-naive enumeration", [&](Check& c) { criterion_naive(c, opt.workers); }},
        {"leading-constant assembly", [&](Check& c) { criterion_constant(c); }},
        {"measure identities", [&](Check& c) { criterion_measures(c); }},
        {"character-sum table", [&](Check& c) { criterion_charsums(c, opt.workers); }},
        {"pole structure", [&](Check& c) { criterion_poles(c); }},
        {"global property suites", [&](Check& c) { criterion_global_properties(c, opt.workers); }},
    };

    std::vector<CriterionResult> out;
    for (size_t i = 0; i < criteria.size(); ++i) {
        CriterionResult r;
        r.id = static_cast<int>(i) + 1;
        r.name = criteria[i].first;
        auto t0 = clock::now();
        Check c;
        try {
            criteria[i].second(c);
        } catch (const std::exception& ex) {
            c.ok = false;
            c.detail << "exception: " << ex.what();
        }
        r.passed = c.ok;
        r.detail = c.detail.str();
        r.seconds = std::chrono::duration<double>(clock::now() - t0).count();
        log << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.name << ")"
            << std::fixed << std::setprecision(2) << " [" << r.seconds << "s]";
        if (!r.passed) log << ": " << r.detail;
        log << "\n" << std::defaultfloat;
        out.push_back(std::move(r));
    }
    return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const CriterionResult& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace woundcount
