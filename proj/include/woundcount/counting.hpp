#ifndef WOUNDCOUNT_COUNTING_HPP
#define WOUNDCOUNT_COUNTING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "woundcount/util.hpp"
#include "woundcount/wound.hpp"

namespace woundcount {

struct CountOptions {
    unsigned long long budget = 10'000'000;  // cap on enumerated tuples
    unsigned workers = 1;
};

// Exact-height counts N(M) = #{x in G(F) : H(x) = q^M} over a contiguous
// range of height exponents.
struct CountTable {
    uint32_t p = 0;
    uint32_t q = 0;
    std::string method;  // "structured" | "naive" | derived tags
    std::vector<std::pair<int, unsigned long long>> rows;

    bool has(int M) const;
    unsigned long long at(int M) const;  // throws on a missing entry
};

// All canonical points with deg f(x) = M, each exactly once, ordered by the
// coordinate codes of the enumeration.  The degree pattern is: with
// j = M mod p, coordinate j runs over degree exactly (M-j)/p and coordinate
// i != j over degree <= floor((M-i)/p); the maximum in deg f is attained
// uniquely at j, so deg f = M holds on the whole region and membership is
// decided by primitivity and the monic-scaling normalization alone.
std::vector<GroupPoint> enumerate_points(const FqPtr& k, int M, const CountOptions& opt = {});

unsigned long long count_points(const FqPtr& k, int M, const CountOptions& opt = {});

// Independence oracle: scans the box deg x_i <= floor((M-i)/p) + 1, computes
// the norm form by generic powering and keeps tuples with deg f = M.
unsigned long long count_points_naive(const FqPtr& k, int M, const CountOptions& opt = {});

CountTable build_count_table(const FqPtr& k, int M_lo, int M_hi, bool naive = false,
                             const CountOptions& opt = {});

// Table for the height attached to the multiple kmult of the anticanonical
// class: H' = H^kmult, so N'(M) = N(M / kmult) when kmult | M and 0 else.
CountTable rescale_table(const CountTable& table, int kmult);

// (1/d) sum_{j<d} q^(-a j) N(M+j); needs rows M .. M+d-1.
double averaged_count(const CountTable& table, const Rat& a, int d, int M);

// Partial height zeta sum_{M <= M_max} N(M) q^(-s M); needs rows 0 .. M_max.
Cplx zeta_partial(const CountTable& table, Cplx s, int M_max);

// Mean of N(M)/q^M over M in [M_lo, M_hi]: estimator of c_rho * log q.
double empirical_constant(const CountTable& table, int M_lo, int M_hi);

}  // namespace woundcount

#endif
