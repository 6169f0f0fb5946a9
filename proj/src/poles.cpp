#include "woundcount/poles.hpp"

#include <cmath>
#include <stdexcept>

namespace woundcount {

namespace {

uint32_t char_of(long long q) {
    for (long long p = 2; p * p <= q; ++p)
        if (q % p == 0) return static_cast<uint32_t>(p);
    return static_cast<uint32_t>(q);
}

bool is_power_of(long long n, long long p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

}  // namespace

PoleStructure pole_structure(const BundleClass& cls, long long q) {
    if (cls.indices.empty()) throw std::invalid_argument("empty bundle class");
    const long long p = char_of(q);
    for (const BundleIndex& ix : cls.indices) {
        if (ix.lambda <= Rat(0)) throw std::invalid_argument("class not in the effective interior");
        if (ix.rho < 1) throw std::invalid_argument("anticanonical multiplicity must be >= 1");
        if (ix.lambda.denominator() != 1 && !is_power_of(ix.lambda.denominator(), p))
            throw std::invalid_argument("denominator of a coordinate is not a power of the characteristic");
    }
    PoleStructure ps;
    ps.a = Rat(cls.indices[0].rho) / cls.indices[0].lambda;
    for (const BundleIndex& ix : cls.indices) ps.a = std::max(ps.a, Rat(ix.rho) / ix.lambda);
    long long gcd_all = 0, gcd_argmax = 0, lcm_all = 1;
    for (size_t i = 0; i < cls.indices.size(); ++i) {
        const BundleIndex& ix = cls.indices[i];
        gcd_all = gcd_ll(gcd_all, ix.lambda.numerator());
        lcm_all = lcm_ll(lcm_all, ix.lambda.denominator());
        if (Rat(ix.rho) / ix.lambda == ps.a) {
            ps.argmax.push_back(static_cast<int>(i));
            gcd_argmax = gcd_ll(gcd_argmax, ix.lambda.numerator());
        }
    }
    ps.b = static_cast<int>(ps.argmax.size());
    ps.d = Rat(gcd_argmax, lcm_all);
    ps.g = Rat(gcd_all, lcm_all);

    const double lq = std::log(static_cast<double>(q));
    double dd = rat_to_double(ps.d);
    // ceil of the exact rational, not of the float
    int Jmax = static_cast<int>((ps.d.numerator() + ps.d.denominator() - 1) / ps.d.denominator());
    for (int j = 0; j < Jmax; ++j) {
        PoleDescriptor pd;
        pd.real = ps.a;
        pd.j = j;
        pd.im = j * 2.0 * M_PI / (dd * lq);
        ps.poles.push_back(pd);
    }
    ps.period_over_two_pi_i = Rat(1) / ps.g;
    ps.period_im = 2.0 * M_PI / (rat_to_double(ps.g) * lq);
    return ps;
}

double tauberian_predict(const Rat& a, int b, const Rat& d, const std::vector<Cplx>& residues,
                         long long q, int M) {
    if (b < 1) throw std::invalid_argument("pole order must be >= 1");
    int Jmax = static_cast<int>((d.numerator() + d.denominator() - 1) / d.denominator());
    if (static_cast<int>(residues.size()) != Jmax)
        throw std::invalid_argument("one residue per largest-order pole required");
    const double lq = std::log(static_cast<double>(q));
    double fact = 1;
    for (int i = 2; i < b; ++i) fact *= i;
    double qaM = std::pow(static_cast<double>(q), rat_to_double(a) * M);
    Cplx sum = 0;
    for (int j = 0; j < Jmax; ++j) {
        double theta = 2.0 * M_PI * j * M / rat_to_double(d);
        sum += residues[j] * std::polar(1.0, theta);
    }
    double main = std::pow(lq, b) / fact * std::pow(static_cast<double>(M), b - 1) * qaM;
    return main * sum.real();
}

double averaged_asymptotic(double c, const Rat& a, int b, const Rat& d, long long q, int M) {
    if (c <= 0) throw std::invalid_argument("leading constant must be positive");
    if (d <= Rat(0)) throw std::invalid_argument("pole spacing divisor must be positive");
    if (b < 1) throw std::invalid_argument("pole order must be >= 1");
    const double lq = std::log(static_cast<double>(q));
    double fact = 1;
    for (int i = 2; i < b; ++i) fact *= i;
    return c * std::pow(lq, b) / fact * std::pow(static_cast<double>(q), rat_to_double(a) * M) *
           std::pow(static_cast<double>(M), b - 1);
}

}  // namespace woundcount
