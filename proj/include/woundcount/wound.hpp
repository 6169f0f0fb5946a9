#ifndef WOUNDCOUNT_WOUND_HPP
#define WOUNDCOUNT_WOUND_HPP

#include <vector>

#include "woundcount/places.hpp"
#include "woundcount/poly.hpp"

namespace woundcount {

// A rational point of the wound group inside P^(p-1): a canonical primitive
// p-tuple of polynomials (x_0, ..., x_{p-1}) with the norm form
//   f(x) = sum_i t^i x_i^p
// cached.  Canonical means: polynomial content divided out and the nonzero
// coordinate of least index monic, which pins a unique representative of the
// class modulo scalars.  The tuple length is p^k; the exponent k is reserved
// in the API but only k = 1 is implemented.
struct GroupPoint {
    std::vector<Poly> x;
    Poly f;
    int k = 1;

    const FqPtr& field() const { return x.front().field(); }
    bool operator==(const GroupPoint& o) const { return x == o.x; }
};

// Canonicalizes and validates.  Throws on an all-zero tuple, a tuple of the
// wrong length, or (unreachable for valid input) a vanishing norm form.
GroupPoint make_point(std::vector<Poly> coords, int k = 1);

GroupPoint identity_point(const FqPtr& kfield);

// sum_i t^i x_i^p without canonicalization.
Poly norm_form(const std::vector<Poly>& coords);

// Group law: multiplication of alpha = sum x_i u^i in F_q[t][u]/(u^p - t),
// followed by canonicalization.  The inverse is the class of alpha^(p-1),
// since alpha^p = f(alpha) is a scalar of the base field.
GroupPoint group_mul(const GroupPoint& a, const GroupPoint& b);
GroupPoint group_inv(const GroupPoint& a);

struct MetricValue {
    Place place;
    long long exponent;  // m with ||f(x)||_v = qv^-m
};

// Local metric exponent of the canonical section at a place: m = v(f(x)) on
// the primitive representative at finite places (0 <= m <= p-1), and m = 0
// at infinity.
MetricValue local_metric(const Place& v, const GroupPoint& x);

// Height exponent M with H(x) = q^M.
// Route B (production): M = deg f(x).
long long height_exponent(const GroupPoint& x);
// Route A (cross-checking oracle): sum of deg(v) * v(f(x)) over the finite
// places dividing f(x), found by scanning places of degree <= deg f.
long long height_exponent_by_places(const GroupPoint& x);

}  // namespace woundcount

#endif
