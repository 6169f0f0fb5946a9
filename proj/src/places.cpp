#include "woundcount/places.hpp"

#include <stdexcept>

namespace woundcount {

Place Place::infinity(const FqPtr& k) {
    Place v;
    v.infinite = true;
    v.pi = Poly::zero(k);
    v.deg = 1;
    v.qv = k->q();
    return v;
}

Place Place::finite(Poly pi) {
    if (pi.degree() < 1 || !pi.is_monic())
        throw std::invalid_argument("finite place needs a monic polynomial of positive degree");
    Place v;
    v.deg = pi.degree();
    long long qv = 1;
    for (int i = 0; i < v.deg; ++i) qv *= pi.field()->q();
    v.qv = qv;
    v.pi = std::move(pi);
    return v;
}

namespace {

// remainder test on raw digit buffers; g monic
bool divides_monic(const Fq& k, const std::vector<uint32_t>& g, const std::vector<uint32_t>& f,
                   std::vector<uint32_t>& rem) {
    const int df = static_cast<int>(f.size()) - 1, dg = static_cast<int>(g.size()) - 1;
    rem = f;
    for (int i = df; i >= dg; --i) {
        uint32_t c = rem[i];
        if (!c) continue;
        rem[i] = 0;
        for (int j = 0; j < dg; ++j)
            rem[i - dg + j] = k.sub(rem[i - dg + j], k.mul(c, g[j]));
    }
    for (int j = 0; j < dg; ++j)
        if (rem[j]) return false;
    return true;
}

}  // namespace

std::vector<Place> places_up_to(const FqPtr& k, int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("degree cutoff must be positive");
    std::vector<Place> out;
    out.push_back(Place::infinity(k));
    const uint32_t q = k->q();
    std::vector<Poly> irred;  // found so far, ascending
    std::vector<uint32_t> cs, rem;
    for (int d = 1; d <= max_degree; ++d) {
        unsigned long long total = 1;
        for (int i = 0; i < d; ++i) total *= q;
        for (unsigned long long code = 0; code < total; ++code) {
            cs.assign(d + 1, 0);
            cs[d] = 1;
            unsigned long long cc = code;
            for (int i = 0; i < d; ++i) {
                cs[i] = static_cast<uint32_t>(cc % q);
                cc /= q;
            }
            bool reducible = false;
            if (d > 1) {
                for (uint32_t a = 0; a < q && !reducible; ++a) {
                    uint32_t val = 0;
                    for (int i = d; i >= 0; --i) val = k->add(k->mul(val, a), cs[i]);
                    if (val == 0) reducible = true;
                }
                for (const Poly& g : irred) {
                    if (reducible || g.degree() > d / 2) break;
                    if (g.degree() == 1) continue;  // covered by the root scan
                    if (divides_monic(*k, g.coeffs(), cs, rem)) reducible = true;
                }
            }
            if (!reducible) irred.emplace_back(k, cs);
        }
    }
    for (Poly& f : irred) out.push_back(Place::finite(std::move(f)));
    return out;
}

RationalFunction make_rational(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    if (num.is_zero()) return {num, Poly::constant(den.field(), 1)};
    Poly g = poly_gcd(num, den);
    Poly n = num / g, d = den / g;
    uint32_t s = d.field()->inv(d.lc());
    return {n.scaled(s), d.scaled(s)};
}

long long valuation(const Place& v, const Poly& f) {
    if (f.is_zero()) throw std::domain_error("valuation of zero");
    if (v.infinite) return -f.degree();
    long long m = 0;
    Poly r = f;
    while (true) {
        auto [q, rem] = r.divmod(v.pi);
        if (!rem.is_zero()) break;
        ++m;
        r = q;
    }
    return m;
}

long long valuation(const Place& v, const RationalFunction& f) {
    if (f.num.is_zero()) throw std::domain_error("valuation of zero");
    if (v.infinite) return f.den.degree() - f.num.degree();
    return valuation(v, f.num) - valuation(v, f.den);
}

Rat abs_value_exact(const Place& v, const RationalFunction& f) {
    return rat_pow(v.qv, -valuation(v, f));
}

double abs_value(const Place& v, const RationalFunction& f) {
    return rat_to_double(abs_value_exact(v, f));
}

}  // namespace woundcount
