#ifndef WOUNDCOUNT_ZETA_HPP
#define WOUNDCOUNT_ZETA_HPP

#include <functional>

#include "woundcount/places.hpp"
#include "woundcount/util.hpp"

namespace woundcount {

// Closed form of the zeta function of F_q(t):
//   zeta(s) = 1 / ((1 - q^-s)(1 - q^(1-s))).
// Throws when s is a pole (s in {0, 1} modulo the imaginary period
// 2*pi*i/log q).
Cplx zeta_closed(long long q, Cplx s);

// Residue of zeta at s = 1: q / ((q-1) log q).
double zeta_residue(long long q);

struct EulerProductReport {
    Cplx value;
    int cutoff_degree = 0;
    // Bound on |full product - reported value|: the truncation tail derived
    // from the place-count bound (#degree-d places <= q^d/d) and the declared
    // decay |factor(v) - 1| <= constant * qv^-(1+delta), plus the rounding
    // accumulation of the factor evaluations.
    double tail_bound = 0;
};

// Truncated Euler product of factor(v) over the places of degree <=
// cutoff_degree (optionally including infinity, which does not enter the
// tail bound).  delta must be positive.
EulerProductReport euler_product(const FqPtr& k, const std::function<Cplx(const Place&)>& factor,
                                 int cutoff_degree, bool include_infinity, double delta,
                                 double constant = 1.0);

// Same, over a precomputed place list (places as produced by places_up_to).
EulerProductReport euler_product(const std::vector<Place>& places,
                                 const std::function<Cplx(const Place&)>& factor,
                                 int cutoff_degree, bool include_infinity, double delta,
                                 double constant = 1.0);

// Tail estimate used by the reports: an upper bound for
// sum_{d > D} (q^d / d) * log-factor bound at q_v = q^d.
double euler_tail_log_bound(long long q, int cutoff_degree, double delta, double constant);

}  // namespace woundcount

#endif
