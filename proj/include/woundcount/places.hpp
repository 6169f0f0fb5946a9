#ifndef WOUNDCOUNT_PLACES_HPP
#define WOUNDCOUNT_PLACES_HPP

#include <string>
#include <vector>

#include "woundcount/poly.hpp"
#include "woundcount/util.hpp"

namespace woundcount {

// A place of F_q(t): either a monic irreducible polynomial pi or the place
// at infinity (the degree valuation, uniformizer 1/t, residue degree 1).
struct Place {
    bool infinite = false;
    Poly pi;            // monic irreducible; unset for the infinite place
    int deg = 1;        // residue degree d_v
    long long qv = 0;   // residue cardinality q^deg

    static Place infinity(const FqPtr& k);
    static Place finite(Poly pi);
    std::string label() const { return infinite ? "infinity" : pi.str(); }
};

// Infinity first, then all finite places of degree <= max_degree ordered by
// degree and coefficient tuple.  Candidates are sieved by trial division
// against the smaller places already found (a polynomial of degree d with no
// irreducible factor of degree <= d/2 is irreducible); is_irreducible() is
// the independent check used by the tests.
std::vector<Place> places_up_to(const FqPtr& k, int max_degree);

// Reduced fraction of polynomials: denominator monic, gcd(num, den) = 1.
struct RationalFunction {
    Poly num, den;
};

RationalFunction make_rational(const Poly& num, const Poly& den);

// Order of vanishing at a place.  Throws on the zero polynomial/function.
long long valuation(const Place& v, const Poly& f);
long long valuation(const Place& v, const RationalFunction& f);

// |f|_v = qv^(-valuation), exact and as a double.
Rat abs_value_exact(const Place& v, const RationalFunction& f);
double abs_value(const Place& v, const RationalFunction& f);

}  // namespace woundcount

#endif
