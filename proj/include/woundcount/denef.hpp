#ifndef WOUNDCOUNT_DENEF_HPP
#define WOUNDCOUNT_DENEF_HPP

#include <map>
#include <string>
#include <vector>

#include "woundcount/places.hpp"
#include "woundcount/util.hpp"
#include "woundcount/zeta.hpp"

namespace woundcount {

// Counts of residue classes of P^(p-1)(F_v) by the valuation exponent
// m = v(f(x)) of the norm form on a primitive representative.
struct ValuationHistogram {
    Place place;
    std::map<int, long long> counts;
    long long total = 0;

    // q_v^(p-1) at m = 0 and q_v^(p-1-m) for 1 <= m <= p-1.
    static std::map<int, long long> closed_form(long long qv, int p);
};

struct DenefOptions {
    unsigned long long budget = 10'000'000;  // cap on enumerated residue classes
};

// Enumerates P^(p-1)(F_v) through the additive representative set S_v
// (polynomials of degree < deg v), computes m by exact polynomial valuation
// and checks the result against the closed form, throwing on mismatch.
ValuationHistogram valuation_histogram(const Place& v, const DenefOptions& opt = {});

// Images of S_v^p under (y_0,...,y_{p-1}) -> sum t^i y_i^p, in enumeration
// order; a bijection onto the polynomials of degree < p*deg(v).
std::vector<Poly> norm_images(const Place& v, const DenefOptions& opt = {});
bool images_form_bijection(const std::vector<Poly>& images, long long qv, int p);
bool residue_norm_bijection(const Place& v, const DenefOptions& opt = {});

enum class DensityMethod { closed, bruteforce };

// Local transform at the trivial character:
//   closed:      1 + sum_{m=1}^{p-1} qv^(-m s)
//   bruteforce:  qv^-(p-1) * sum over residue classes of qv^(-m(x)(s-1)),
// the latter evaluated from the enumerated histogram.
Cplx local_density(const Place& v, Cplx s, DensityMethod method, const DenefOptions& opt = {});

// Declarative boundary data for the general stratified local transform.
struct BoundaryIndex {
    std::string name;
    int rho = 1;               // multiplicity of the index in the anticanonical class
    bool non_reduced = false;  // whether the component carries exponent data
    int extension_degree = 1;  // residue extension degree of the index (bookkeeping)
};

struct Stratum {
    std::vector<int> indices;  // subset A of boundary indices
    long long count = 0;       // #D^o_A(F_v) when A has no non-reduced index
    // Otherwise a histogram over exponent vectors: one exponent per
    // non-reduced index of A (in the order they appear in `indices`).
    std::vector<std::pair<std::vector<int>, long long>> exponent_histogram;
};

struct StratumData {
    long long qv = 0;
    int dim_x = 0;
    std::vector<BoundaryIndex> indices;
    std::vector<Stratum> strata;
};

// Stratified local transform at the trivial character:
//   qv^(-dim X) * sum_A  prod_{alpha in A reduced} (qv-1)/(qv^(1+s_a-rho_a)-1)
//                        * sum_{x in D^o_A} prod_{beta in A non-reduced}
//                              qv^(beta(x)(rho_b - s_b)).
// The geometric factor is attached to the reduced indices only; the
// non-reduced indices contribute through their exponent histograms.  Throws
// at a pole of a geometric factor.
Cplx denef_general(const StratumData& data, const std::vector<Cplx>& s);

// Exact evaluation at integer exponents.
Rat denef_general_exact(const StratumData& data, const std::vector<long long>& s);

// The boundary data of the norm-form compactification at a finite place:
// one non-reduced index of multiplicity 1 with the closed-form histogram.
StratumData norm_form_stratum_data(long long qv, int p);

// Haar volume of the compact group of integral points at infinity:
// sum_j (#reduction classes with top nonzero index j) q^-(p-1) q^-j, the
// class count found by enumerating P^(p-1)(F_q); equals p q^-(p-1).
Rat infinite_local_volume(int p, long long q);

struct ConstantReport {
    int truncation_degree = 0;
    double zeta_res = 0;       // residue of zeta_F at s = 1
    Rat c_infinity;            // (1 - 1/q) p q^-(p-1)
    Rat infinite_volume;       // p q^-(p-1)
    Rat tamagawa_compact;      // q^(p-1) * infinite_volume
    double finite_product = 0; // prod_{v finite, deg <= D} C_v
    double assembled = 0;      // (1/p) q^(p-1) res * C_inf * finite_product
    double closed_form = 0;    // (1 - q^(1-p)) / log q
    double gap = 0;
    double tail_bound = 0;     // truncation error bound for `assembled`
};

// Assembles the leading constant of the point-count asymptotic from its
// local factors, together with the telescoped closed form and the truncation
// tail bound.
ConstantReport leading_constant(const FqPtr& k, int truncation_degree);

}  // namespace woundcount

#endif
