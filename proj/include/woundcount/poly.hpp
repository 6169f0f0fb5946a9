#ifndef WOUNDCOUNT_POLY_HPP
#define WOUNDCOUNT_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "woundcount/gf.hpp"

namespace woundcount {

// Dense univariate polynomial over F_q, coefficients lowest degree first.
// The zero polynomial has an empty coefficient list and degree() == -1
// (stand-in for degree minus infinity).  Values are immutable in spirit:
// arithmetic returns fresh objects and never mutates operands.
class Poly {
   public:
    Poly() = default;
    explicit Poly(FqPtr k) : k_(std::move(k)) {}
    Poly(FqPtr k, std::vector<uint32_t> coeffs);

    static Poly zero(FqPtr k) { return Poly(std::move(k)); }
    static Poly constant(FqPtr k, uint32_t c);
    static Poly x(FqPtr k);  // the variable t

    const FqPtr& field() const { return k_; }
    const std::vector<uint32_t>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    uint32_t lc() const;  // leading coefficient; throws on zero
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(uint32_t s) const;            // multiply by a field constant
    Poly shifted(int k) const;                // multiply by t^k, k >= 0
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    uint32_t eval(uint32_t x) const;
    Poly monic() const;  // throws on zero
    Poly pow(unsigned long long n) const;

    // p-th power via the additive Frobenius: (sum a_i t^i)^p = sum a_i^p t^(pi).
    Poly pth_power() const;
    // Inverse of the above; throws if the polynomial is not a p-th power.
    Poly pth_root() const;
    bool is_pth_power() const;

    // Total order: by degree, then coefficient tuple from the leading
    // coefficient down.  Used for deterministic output.
    static bool less(const Poly& a, const Poly& b);

    std::string str() const;  // e.g. "t^3+t+1"; extension coefficients as [c0,c1]

   private:
    void normalize();
    FqPtr k_;
    std::vector<uint32_t> c_;
};

// Monic gcd; gcd(f, 0) is the monic normalization of f and gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

// Monic gcd of a tuple (the polynomial content up to normalization).
Poly poly_content(const std::vector<Poly>& fs);

// The tuple with its content divided out.
std::vector<Poly> primitive_part(const std::vector<Poly>& fs);

Poly powmod(const Poly& base, unsigned long long n, const Poly& mod);

// Distinct-degree irreducibility test: f of degree d >= 1 is irreducible iff
// x^(q^d) = x mod f and gcd(x^(q^(d/r)) - x, f) = 1 for every prime r | d.
// Throws on constant input.
bool is_irreducible(const Poly& f);

// Number of monic irreducibles of degree d over F_q:
// (1/d) sum_{e | d} mu(d/e) q^e.
long long necklace_count(long long q, int d);

}  // namespace woundcount

#endif
