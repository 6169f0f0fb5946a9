#ifndef WOUNDCOUNT_GF_HPP
#define WOUNDCOUNT_GF_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace woundcount {

// Arithmetic context for F_{p^e}.  Elements are stored as uint32_t codes in
// [0, q): the base-p digits of the code are the coordinates with respect to
// the power basis of the modulus root, lowest power first.  The code 0 is the
// additive identity and the code 1 encodes (1,0,...,0), the multiplicative
// identity.
//
// Construction is deterministic: for e > 1 the modulus is the least monic
// irreducible of degree e over F_p, ordering candidates by coefficient tuple
// from the leading coefficient down.  Fields are immutable after
// construction; all operations are pure and safe to share across threads.
class Fq {
   public:
    using elem = uint32_t;

    static std::shared_ptr<const Fq> make(uint32_t p, uint32_t e);

    uint32_t p() const { return p_; }
    uint32_t e() const { return e_; }
    uint32_t q() const { return q_; }

    // Modulus coefficients over F_p, constant term first, length e+1, monic.
    // Empty for prime fields (e == 1).
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    elem add(elem a, elem b) const;
    elem sub(elem a, elem b) const;
    elem neg(elem a) const;
    elem mul(elem a, elem b) const;
    elem inv(elem a) const;  // throws on zero
    elem div(elem a, elem b) const;
    elem pow(elem a, unsigned long long n) const;
    elem frobenius(elem a) const { return pow(a, p_); }

    // Absolute trace to the prime field, returned as an integer in [0, p).
    uint32_t trace_to_prime(elem a) const {
        return trace_table_.empty() ? trace_direct(a) : trace_table_[a];
    }

    // Coordinate vector of length e over Z/p, lowest power first.
    std::vector<uint32_t> coords(elem a) const;
    elem from_coords(const std::vector<uint32_t>& c) const;

    std::string to_string(elem a) const;

   private:
    Fq(uint32_t p, uint32_t e, std::vector<uint32_t> modulus);

    elem mul_generic(elem a, elem b) const;
    uint32_t trace_direct(elem a) const;

    uint32_t p_, e_, q_;
    std::vector<uint32_t> modulus_;
    // Full multiplication table for small fields; these are the only ones the
    // enumeration workloads touch.
    std::vector<elem> mul_table_;
    std::vector<uint32_t> trace_table_;
};

using FqPtr = std::shared_ptr<const Fq>;

bool is_prime_u32(uint32_t n);

}  // namespace woundcount

#endif
