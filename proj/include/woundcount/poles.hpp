#ifndef WOUNDCOUNT_POLES_HPP
#define WOUNDCOUNT_POLES_HPP

#include <string>
#include <vector>

#include "woundcount/util.hpp"

namespace woundcount {

// A big line-bundle class in the interior of the effective cone, written per
// boundary index as lambda_a = lambda'_a / p'_a with p'_a a power of the
// characteristic and gcd(lambda'_a, p'_a) = 1; rho_a >= 1 is the
// anticanonical multiplicity of the index.
struct BundleIndex {
    std::string name;
    Rat lambda;
    int rho = 1;
};

struct BundleClass {
    std::vector<BundleIndex> indices;
};

struct PoleDescriptor {
    Rat real;        // = a_lambda
    int j = 0;       // imaginary part is j * 2*pi / (d_lambda * log q)
    double im = 0;   // float rendering at the given q
};

struct PoleStructure {
    Rat a;                        // abscissa max rho/lambda
    std::vector<int> argmax;      // A_lambda as indices into the class
    int b = 0;                    // largest pole order |A_lambda|
    Rat d;                        // gcd(lambda') over A_lambda / lcm(p') over all
    Rat g;                        // gcd(lambda') over all / lcm(p') over all
    std::vector<PoleDescriptor> poles;  // j in {0, ..., ceil(d)-1}
    Rat period_over_two_pi_i;     // imaginary period = 2*pi*i * this / log q = 2*pi*i/(g log q)
    double period_im = 0;         // float rendering 2*pi/(g log q)
};

// Pole data of the height zeta function of the class: abscissa, maximal
// order, the spacing divisor d_lambda, the period divisor g_lambda, the list
// of largest-order poles and the imaginary period.  q fixes the float
// renderings; the characteristic is recovered from q for validating the
// denominators p'_a.
PoleStructure pole_structure(const BundleClass& cls, long long q);

// Main term of the exact-height count extracted from the pole data:
//   (log q)^b / (b-1)! * M^(b-1) * sum_j q^(s_j M) r_j
// with s_j = a + j*2*pi*i/(d log q) and caller-supplied residues r_j.
double tauberian_predict(const Rat& a, int b, const Rat& d, const std::vector<Cplx>& residues,
                         long long q, int M);

// Main term of the averaged count: c (log q)^b/(b-1)! q^(aM) M^(b-1).
double averaged_asymptotic(double c, const Rat& a, int b, const Rat& d, long long q, int M);

}  // namespace woundcount

#endif
