#ifndef WOUNDCOUNT_CHARSUM_HPP
#define WOUNDCOUNT_CHARSUM_HPP

#include <vector>

#include "woundcount/gf.hpp"
#include "woundcount/util.hpp"

namespace woundcount {

// Truncated Laurent expansion over the residue field F_{q_v}: coefficients
// for the uniformizer powers lo, lo+1, ..., lo+len-1.  Coefficients below lo
// are exactly zero; coefficients at or above the window end are unknown, and
// arithmetic that would need them sets the truncated flag.
struct LaurentTruncation {
    FqPtr k;
    int lo = 0;
    std::vector<uint32_t> c;
    bool truncated = false;

    int hi() const { return lo + static_cast<int>(c.size()); }
    uint32_t coeff_at(int idx) const;  // throws above the window, zero below
    bool is_unit() const { return lo == 0 && !c.empty() && c[0] != 0; }

    static LaurentTruncation from_digits(FqPtr k, std::vector<uint32_t> digits, int lo = 0);
    static LaurentTruncation one(FqPtr k, int len);

    LaurentTruncation shifted(int n) const;  // multiply by pi^n
    // product truncated to the intersection-determined window
    LaurentTruncation mul(const LaurentTruncation& o) const;
    LaurentTruncation pow(unsigned n) const;
};

// Additive character: exp(2*pi*i * Tr(x_{-1}) / p), where Tr is the absolute
// trace of the residue field and x_{-1} the coefficient at index -1.  The
// character of the prime field sends 1 to exp(2*pi*i/p).  Throws when the
// window does not include index -1.
Cplx phi_character(const LaurentTruncation& x);

struct CharSumOptions {
    unsigned long long budget = 500'000'000;  // cap on enumerated unit residues
    unsigned workers = 1;
};

struct CharSumResult {
    Cplx value;
    int e = 0;
    bool stabilized = false;  // e reached the stabilization threshold n*d + 1
    bool validated = true;    // false when p | d > 0 (outside the verified table)
    // exact count of unit residues per trace class in the prime field
    std::vector<unsigned long long> class_counts;
};

// qv^-e * sum over unit residues w mod pi^e of phi(u * pi^(-n d) * w^d).
// The integrand factors through w mod pi^(n d), so residues beyond that
// precision are enumerated collapsed with exact multiplicity.  Requires a
// unit u and e >= n*d + 1.
CharSumResult unit_character_sum(const LaurentTruncation& u, int n, int d, int e,
                                 const CharSumOptions& opt = {});

}  // namespace woundcount

#endif
