#include "woundcount/zeta.hpp"

#include <cmath>
#include <stdexcept>

namespace woundcount {

Cplx zeta_closed(long long q, Cplx s) {
    double lq = std::log(static_cast<double>(q));
    Cplx a = 1.0 - std::exp(-s * lq);
    Cplx b = 1.0 - std::exp((1.0 - s) * lq);
    if (std::abs(a) < 1e-12 || std::abs(b) < 1e-12)
        throw std::domain_error("zeta evaluated at a pole");
    return 1.0 / (a * b);
}

double zeta_residue(long long q) {
    return static_cast<double>(q) / ((q - 1) * std::log(static_cast<double>(q)));
}

double euler_tail_log_bound(long long q, int cutoff_degree, double delta, double constant) {
    if (delta <= 0) throw std::invalid_argument("tail decay delta must be positive");
    // |log factor| <= 1.5 * constant * qv^-(1+delta) as long as the factor is
    // within 1/3 of 1; the place count of degree d is at most q^d / d, so
    //   S <= 1.5 C sum_{d > D} q^(-d*delta) / d
    //     <= 1.5 C q^(-delta(D+1)) / ((D+1)(1 - q^-delta)).
    double x = std::pow(static_cast<double>(q), -delta);
    double head = std::pow(x, cutoff_degree + 1);
    if (constant * head * x >= 1.0 / 3.0)
        throw std::invalid_argument("tail bound needs constant * qv^-(1+delta) <= 1/3 beyond the cutoff");
    return 1.5 * constant * head / ((cutoff_degree + 1) * (1.0 - x));
}

EulerProductReport euler_product(const std::vector<Place>& places,
                                 const std::function<Cplx(const Place&)>& factor,
                                 int cutoff_degree, bool include_infinity, double delta,
                                 double constant) {
    // extended precision: the truncated products run over tens of thousands
    // of factors and the rounding accumulation would otherwise swamp the
    // truncation tail at larger q
    std::complex<long double> prod = 1.0L;
    long long q = 0;
    unsigned long long nfactors = 0;
    for (const Place& v : places) {
        if (v.infinite) {
            q = v.qv;
            if (!include_infinity) continue;
        } else if (v.deg > cutoff_degree) {
            continue;
        }
        Cplx f = factor(v);
        prod *= std::complex<long double>(f.real(), f.imag());
        ++nfactors;
    }
    if (q == 0 && !places.empty()) q = places.front().pi.field()->q();
    EulerProductReport rep;
    rep.value = Cplx(static_cast<double>(prod.real()), static_cast<double>(prod.imag()));
    rep.cutoff_degree = cutoff_degree;
    double s = euler_tail_log_bound(q, cutoff_degree, delta, constant);
    // truncation tail plus the rounding accumulation of the factor
    // evaluations (double) and the extended-precision multiplications
    double rounding = static_cast<double>(nfactors) *
                      (4.0 * std::numeric_limits<double>::epsilon() +
                       4.0 * std::numeric_limits<long double>::epsilon());
    rep.tail_bound = std::abs(rep.value) * (std::expm1(s) + rounding);
    return rep;
}

EulerProductReport euler_product(const FqPtr& k, const std::function<Cplx(const Place&)>& factor,
                                 int cutoff_degree, bool include_infinity, double delta,
                                 double constant) {
    return euler_product(places_up_to(k, cutoff_degree), factor, cutoff_degree, include_infinity,
                         delta, constant);
}

}  // namespace woundcount
