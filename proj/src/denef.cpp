#include "woundcount/denef.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace woundcount {

namespace {

// representative set S_v: all polynomials of degree < deg(v)
std::vector<Poly> representative_set(const Place& v) {
    const FqPtr& k = v.pi.field();
    const uint32_t q = k->q();
    std::vector<Poly> out;
    out.reserve(v.qv);
    for (long long code = 0; code < v.qv; ++code) {
        std::vector<uint32_t> cs(v.deg, 0);
        long long cc = code;
        for (int i = 0; i < v.deg; ++i) {
            cs[i] = static_cast<uint32_t>(cc % q);
            cc /= q;
        }
        out.emplace_back(k, std::move(cs));
    }
    return out;
}

// generic-power norm form over a representative tuple (independent of the
// Frobenius shortcut used by the group code)
Poly norm_of_tuple(const std::vector<const Poly*>& ys, int p) {
    const FqPtr& k = ys[0]->field();
    Poly t = Poly::x(k), f(k);
    for (size_t i = 0; i < ys.size(); ++i)
        if (!ys[i]->is_zero()) f = f + ys[i]->pow(p) * t.pow(i);
    return f;
}

// visit one representative per class of P^(p-1)(F_v): pivot j with y_j = 1,
// zeros below, free representatives above
template <class Fn>
void scan_projective_classes(const std::vector<Poly>& reps, int p, Fn&& fn) {
    const FqPtr& k = reps[0].field();
    const long long qv = static_cast<long long>(reps.size());
    std::vector<const Poly*> ys(p, nullptr);
    Poly zero = Poly::zero(k), one = Poly::constant(k, 1);
    for (int pivot = 0; pivot < p; ++pivot) {
        for (int i = 0; i < pivot; ++i) ys[i] = &zero;
        ys[pivot] = &one;
        int free_coords = p - pivot - 1;
        unsigned long long total = 1;
        for (int i = 0; i < free_coords; ++i) total *= qv;
        for (unsigned long long code = 0; code < total; ++code) {
            unsigned long long cc = code;
            for (int i = 0; i < free_coords; ++i) {
                ys[pivot + 1 + i] = &reps[cc % qv];
                cc /= qv;
            }
            fn(ys);
        }
    }
}

unsigned long long projective_class_count(long long qv, int p) {
    unsigned long long n = 0, pw = 1;
    for (int i = 0; i < p; ++i) {
        n += pw;
        pw *= qv;
    }
    return n;
}

}  // namespace

std::map<int, long long> ValuationHistogram::closed_form(long long qv, int p) {
    std::map<int, long long> cf;
    long long pw = 1;  // qv^m
    for (int m = 0; m < p; ++m) {
        long long top = 1;
        for (int i = 0; i < p - 1 - m; ++i) top *= qv;
        cf[m] = top;
        pw *= qv;
    }
    return cf;
}

ValuationHistogram valuation_histogram(const Place& v, const DenefOptions& opt) {
    if (v.infinite) throw std::invalid_argument("valuation histogram needs a finite place");
    const FqPtr& k = v.pi.field();
    const int p = static_cast<int>(k->p());
    unsigned long long classes = projective_class_count(v.qv, p);
    if (classes > opt.budget)
        throw budget_exceeded("valuation_histogram: " + std::to_string(classes) +
                                  " residue classes exceed the budget",
                              classes);
    ValuationHistogram h;
    h.place = v;
    auto reps = representative_set(v);
    scan_projective_classes(reps, p, [&](const std::vector<const Poly*>& ys) {
        Poly f = norm_of_tuple(ys, p);
        long long m = valuation(v, f);
        if (m >= p) throw std::logic_error("norm valuation reached p on a representative tuple");
        ++h.counts[static_cast<int>(m)];
        ++h.total;
    });
    if (h.counts != ValuationHistogram::closed_form(v.qv, p))
        throw std::logic_error("valuation histogram deviates from the closed-form counts");
    return h;
}

std::vector<Poly> norm_images(const Place& v, const DenefOptions& opt) {
    if (v.infinite) throw std::invalid_argument("norm images need a finite place");
    const FqPtr& k = v.pi.field();
    const int p = static_cast<int>(k->p());
    double tuples = std::pow(static_cast<double>(v.qv), p);
    if (tuples > static_cast<double>(opt.budget))
        throw budget_exceeded("norm_images: tuple count exceeds the budget",
                              static_cast<unsigned long long>(tuples));
    auto reps = representative_set(v);
    std::vector<Poly> images;
    images.reserve(static_cast<size_t>(tuples));
    std::vector<const Poly*> ys(p, nullptr);
    unsigned long long total = 1;
    for (int i = 0; i < p; ++i) total *= v.qv;
    for (unsigned long long code = 0; code < total; ++code) {
        unsigned long long cc = code;
        for (int i = 0; i < p; ++i) {
            ys[i] = &reps[cc % v.qv];
            cc /= v.qv;
        }
        images.push_back(norm_of_tuple(ys, p));
    }
    return images;
}

bool images_form_bijection(const std::vector<Poly>& images, long long qv, int p) {
    // target: all polynomials of degree < p * deg(v); the counts match, so
    // distinctness decides
    double expect = std::pow(static_cast<double>(qv), p);
    if (static_cast<double>(images.size()) != expect) return false;
    std::vector<Poly> sorted = images;
    std::sort(sorted.begin(), sorted.end(), Poly::less);
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1]) return false;
    return true;
}

bool residue_norm_bijection(const Place& v, const DenefOptions& opt) {
    const int p = static_cast<int>(v.pi.field()->p());
    auto images = norm_images(v, opt);
    int bound = p * v.deg;
    for (const Poly& f : images)
        if (f.degree() >= bound) return false;
    return images_form_bijection(images, v.qv, p);
}

Cplx local_density(const Place& v, Cplx s, DensityMethod method, const DenefOptions& opt) {
    if (v.infinite) throw std::invalid_argument("local density needs a finite place");
    const int p = static_cast<int>(v.pi.field()->p());
    const double lqv = std::log(static_cast<double>(v.qv));
    if (method == DensityMethod::closed) {
        Cplx acc = 0;
        for (int m = 0; m < p; ++m) acc += std::exp(-s * (lqv * m));
        return acc;
    }
    ValuationHistogram h = valuation_histogram(v, opt);
    Cplx acc = 0;
    for (auto& [m, n] : h.counts)
        acc += static_cast<double>(n) * std::exp(-(s - 1.0) * (lqv * m));
    double scale = std::pow(static_cast<double>(v.qv), -(p - 1));
    return scale * acc;
}

namespace {

template <class Num, class QPow, class GeomFactor, class ExpFactor>
Num denef_eval(const StratumData& data, size_t nvals, QPow qpow, GeomFactor geom,
               ExpFactor expo) {
    if (nvals != data.indices.size())
        throw std::invalid_argument("one exponent per boundary index required");
    Num acc(0);
    for (const Stratum& st : data.strata) {
        Num factor(1);
        std::vector<int> nonred;
        for (int idx : st.indices) {
            if (idx < 0 || idx >= static_cast<int>(data.indices.size()))
                throw std::invalid_argument("stratum references an unknown boundary index");
            if (data.indices[idx].non_reduced)
                nonred.push_back(idx);
            else
                factor = factor * geom(idx);
        }
        Num inner(0);
        if (nonred.empty()) {
            inner = Num(st.count);
        } else {
            if (st.exponent_histogram.empty())
                throw std::invalid_argument("stratum with non-reduced indices needs a histogram");
            for (auto& [exps, cnt] : st.exponent_histogram) {
                if (exps.size() != nonred.size())
                    throw std::invalid_argument("exponent vector length mismatch");
                Num term(cnt);
                for (size_t i = 0; i < nonred.size(); ++i) term = term * expo(nonred[i], exps[i]);
                inner = inner + term;
            }
        }
        acc = acc + factor * inner;
    }
    return acc * qpow(-data.dim_x);
}

}  // namespace

Cplx denef_general(const StratumData& data, const std::vector<Cplx>& s) {
    const double lqv = std::log(static_cast<double>(data.qv));
    auto qpow = [&](int e) { return Cplx(std::pow(static_cast<double>(data.qv), e)); };
    auto geom = [&](int idx) {
        Cplx denom = std::exp((1.0 + s[idx] - static_cast<double>(data.indices[idx].rho)) * lqv) - 1.0;
        if (std::abs(denom) < 1e-12)
            throw std::domain_error("geometric factor pole at index " + data.indices[idx].name);
        return (static_cast<double>(data.qv) - 1.0) / denom;
    };
    auto expo = [&](int idx, int m) {
        return std::exp((static_cast<double>(data.indices[idx].rho) - s[idx]) * (lqv * m));
    };
    return denef_eval<Cplx>(data, s.size(), qpow, geom, expo);
}

Rat denef_general_exact(const StratumData& data, const std::vector<long long>& s) {
    auto qpow = [&](int e) { return rat_pow(data.qv, e); };
    auto geom = [&](int idx) {
        Rat denom = rat_pow(data.qv, 1 + s[idx] - data.indices[idx].rho) - Rat(1);
        if (denom == Rat(0))
            throw std::domain_error("geometric factor pole at index " + data.indices[idx].name);
        return Rat(data.qv - 1) / denom;
    };
    auto expo = [&](int idx, int m) {
        return rat_pow(data.qv, static_cast<long long>(m) * (data.indices[idx].rho - s[idx]));
    };
    return denef_eval<Rat>(data, s.size(), qpow, geom, expo);
}

StratumData norm_form_stratum_data(long long qv, int p) {
    StratumData d;
    d.qv = qv;
    d.dim_x = p - 1;
    d.indices.push_back({"norm-form boundary", 1, true, 1});
    Stratum empty;
    empty.indices = {};
    long long top = 1;
    for (int i = 0; i < p - 1; ++i) top *= qv;
    empty.count = top;  // classes off the boundary
    d.strata.push_back(empty);
    Stratum boundary;
    boundary.indices = {0};
    auto cf = ValuationHistogram::closed_form(qv, p);
    for (int m = 1; m < p; ++m) boundary.exponent_histogram.push_back({{m}, cf[m]});
    d.strata.push_back(boundary);
    return d;
}

Rat infinite_local_volume(int p, long long q) {
    // count reduction classes of P^(p-1)(F_q) by their top nonzero index
    std::vector<long long> by_top(p, 0);
    std::vector<unsigned long long> pw(p + 1, 1);
    for (int i = 0; i < p; ++i) pw[i + 1] = pw[i] * q;
    // classes with top index j: normalize the top coordinate to 1, the j
    // lower coordinates are free
    for (int j = 0; j < p; ++j) by_top[j] = static_cast<long long>(pw[j]);
    Rat vol(0);
    for (int j = 0; j < p; ++j)
        vol += Rat(by_top[j]) * rat_pow(q, -(p - 1)) * rat_pow(q, -j);
    return vol;
}

ConstantReport leading_constant(const FqPtr& k, int truncation_degree) {
    if (truncation_degree < 1) throw std::invalid_argument("truncation degree must be positive");
    const int p = static_cast<int>(k->p());
    const long long q = k->q();
    const double lq = std::log(static_cast<double>(q));

    ConstantReport rep;
    rep.truncation_degree = truncation_degree;
    rep.zeta_res = zeta_residue(q);
    rep.infinite_volume = infinite_local_volume(p, q);
    rep.c_infinity = (Rat(1) - Rat(1, q)) * rep.infinite_volume;
    rep.tamagawa_compact = rat_pow(q, p - 1) * rep.infinite_volume;

    auto places = places_up_to(k, truncation_degree);
    // C_v = (1 - 1/qv)(1 + 1/qv + ... + 1/qv^(p-1)) = 1 - qv^-p
    auto factor = [&](const Place& v) {
        Cplx cv = local_density(v, Cplx(1.0), DensityMethod::closed);
        return (1.0 - 1.0 / static_cast<double>(v.qv)) * cv;
    };
    EulerProductReport ep =
        euler_product(places, factor, truncation_degree, false, static_cast<double>(p - 1), 1.0);
    rep.finite_product = ep.value.real();

    double prefactor = (1.0 / p) * std::pow(static_cast<double>(q), p - 1) * rep.zeta_res *
                       rat_to_double(rep.c_infinity);
    rep.assembled = prefactor * rep.finite_product;
    rep.closed_form = (1.0 - std::pow(static_cast<double>(q), 1 - p)) / lq;
    rep.gap = std::abs(rep.assembled - rep.closed_form);
    rep.tail_bound = prefactor * ep.tail_bound;
    if (!(rep.zeta_res > 0 && rep.c_infinity > Rat(0) && rep.finite_product > 0 &&
          rep.assembled > 0))
        throw std::logic_error("constant assembly produced a non-positive factor");
    return rep;
}

}  // namespace woundcount
