#ifndef WOUNDCOUNT_UTIL_HPP
#define WOUNDCOUNT_UTIL_HPP

#include <boost/rational.hpp>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace woundcount {

using Rat = boost::rational<long long>;
using Cplx = std::complex<double>;

// Thrown when an enumeration would exceed the configured work cap.  The
// estimate is the number of tuples/classes the request would visit.
class budget_exceeded : public std::runtime_error {
   public:
    budget_exceeded(const std::string& what, unsigned long long estimate)
        : std::runtime_error(what), estimate(estimate) {}
    unsigned long long estimate;
};

inline double rat_to_double(const Rat& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// q^k for rational results with k possibly negative.
inline Rat rat_pow(long long q, long long k) {
    Rat r(1);
    long long e = k < 0 ? -k : k;
    for (long long i = 0; i < e; ++i) r *= Rat(q);
    if (k < 0) r = Rat(1) / r;
    return r;
}

inline long long ipow(long long b, unsigned e) {
    long long r = 1;
    while (e--) r *= b;
    return r;
}

inline long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_ll(a, b) * b;
}

}  // namespace woundcount

#endif
