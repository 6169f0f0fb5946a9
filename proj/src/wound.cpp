#include "woundcount/wound.hpp"

#include <stdexcept>

namespace woundcount {

Poly norm_form(const std::vector<Poly>& coords) {
    const FqPtr& k = coords.front().field();
    Poly f(k);
    for (size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero()) f = f + coords[i].pth_power().shifted(static_cast<int>(i));
    return f;
}

GroupPoint make_point(std::vector<Poly> coords, int k) {
    if (k != 1) throw std::invalid_argument("only exponent k = 1 is implemented");
    if (coords.empty()) throw std::invalid_argument("empty coordinate tuple");
    FqPtr kf = coords.front().field();  // by value: coords is reassigned below
    if (coords.size() != kf->p())
        throw std::invalid_argument("coordinate tuple must have length p");
    bool all_zero = true;
    for (const Poly& c : coords) all_zero = all_zero && c.is_zero();
    if (all_zero) throw std::invalid_argument("all-zero coordinate tuple");

    coords = primitive_part(coords);
    for (Poly& c : coords) {
        if (c.is_zero()) continue;
        uint32_t s = kf->inv(c.lc());
        if (s != 1)
            for (Poly& d : coords) d = d.scaled(s);
        break;
    }
    GroupPoint pt;
    pt.f = norm_form(coords);
    pt.x = std::move(coords);
    pt.k = k;
    if (pt.f.is_zero()) throw std::domain_error("norm form vanishes: boundary point");
    return pt;
}

GroupPoint identity_point(const FqPtr& kfield) {
    std::vector<Poly> c(kfield->p(), Poly::zero(kfield));
    c[0] = Poly::constant(kfield, 1);
    return make_point(std::move(c));
}

GroupPoint group_mul(const GroupPoint& a, const GroupPoint& b) {
    const FqPtr& kf = a.field();
    const uint32_t p = kf->p();
    if (b.field() != kf) throw std::invalid_argument("points over different fields");
    Poly t = Poly::x(kf);
    std::vector<Poly> z(p, Poly::zero(kf));
    for (uint32_t i = 0; i < p; ++i) {
        if (a.x[i].is_zero()) continue;
        for (uint32_t j = 0; j < p; ++j) {
            if (b.x[j].is_zero()) continue;
            Poly prod = a.x[i] * b.x[j];
            uint32_t s = i + j;
            if (s >= p)
                z[s - p] = z[s - p] + prod * t;  // u^p = t
            else
                z[s] = z[s] + prod;
        }
    }
    return make_point(std::move(z));
}

GroupPoint group_inv(const GroupPoint& a) {
    GroupPoint r = identity_point(a.field());
    for (uint32_t i = 0; i + 1 < a.field()->p(); ++i) r = group_mul(r, a);
    return r;
}

MetricValue local_metric(const Place& v, const GroupPoint& x) {
    MetricValue mv{v, 0};
    if (v.infinite) return mv;
    mv.exponent = valuation(v, x.f);
    const long long p = x.field()->p();
    if (mv.exponent < 0 || mv.exponent > p - 1)
        throw std::logic_error("metric exponent out of range [0, p-1] on a primitive point");
    return mv;
}

long long height_exponent(const GroupPoint& x) { return x.f.degree(); }

long long height_exponent_by_places(const GroupPoint& x) {
    const int d = x.f.degree();
    long long acc = 0;
    if (d == 0) return 0;
    for (const Place& v : places_up_to(x.field(), d)) {
        if (v.infinite) continue;
        acc += v.deg * valuation(v, x.f);
    }
    return acc;
}

}  // namespace woundcount
