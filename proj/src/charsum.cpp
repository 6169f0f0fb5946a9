#include "woundcount/charsum.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace woundcount {

uint32_t LaurentTruncation::coeff_at(int idx) const {
    if (idx < lo) return 0;
    if (idx >= hi()) throw std::out_of_range("coefficient beyond the truncation window");
    return c[idx - lo];
}

LaurentTruncation LaurentTruncation::from_digits(FqPtr k, std::vector<uint32_t> digits, int lo) {
    for (uint32_t d : digits)
        if (d >= k->q()) throw std::invalid_argument("digit out of range");
    LaurentTruncation x;
    x.k = std::move(k);
    x.lo = lo;
    x.c = std::move(digits);
    return x;
}

LaurentTruncation LaurentTruncation::one(FqPtr k, int len) {
    std::vector<uint32_t> d(len, 0);
    d[0] = 1;
    return from_digits(std::move(k), std::move(d), 0);
}

LaurentTruncation LaurentTruncation::shifted(int n) const {
    LaurentTruncation x = *this;
    x.lo += n;
    return x;
}

LaurentTruncation LaurentTruncation::mul(const LaurentTruncation& o) const {
    if (k != o.k) throw std::invalid_argument("mixed residue fields");
    LaurentTruncation r;
    r.k = k;
    r.lo = lo + o.lo;
    // digits of the product are exact up to min window reach
    int reach = std::min(hi() + o.lo, o.hi() + lo);
    r.c.assign(reach - r.lo, 0);
    const Fq& f = *k;
    for (size_t i = 0; i < c.size(); ++i) {
        if (!c[i]) continue;
        for (size_t j = 0; j < o.c.size() && i + j < r.c.size(); ++j)
            r.c[i + j] = f.add(r.c[i + j], f.mul(c[i], o.c[j]));
    }
    r.truncated = truncated || o.truncated || hi() + o.hi() - r.lo > reach;
    return r;
}

LaurentTruncation LaurentTruncation::pow(unsigned n) const {
    LaurentTruncation r = one(k, static_cast<int>(c.size()));
    r.lo = 0;
    LaurentTruncation base = *this;
    if (n == 0) return r;
    while (true) {
        if (n & 1) r = r.mul(base);
        n >>= 1;
        if (!n) break;
        base = base.mul(base);
    }
    return r;
}

Cplx phi_character(const LaurentTruncation& x) {
    if (-1 >= x.hi())
        throw std::invalid_argument("truncation window does not include index -1");
    uint32_t tr = x.k->trace_to_prime(x.coeff_at(-1));
    return std::polar(1.0, 2.0 * M_PI * tr / x.k->p());
}

namespace {

// w^d truncated to len digits; prime fields accumulate the convolutions in
// integers and reduce once per coefficient
void pow_trunc(const Fq& f, const std::vector<uint32_t>& w, int d, int len,
               std::vector<uint32_t>& out, std::vector<uint32_t>& base,
               std::vector<uint64_t>& acc) {
    const bool prime = f.e() == 1;
    const uint64_t q = f.q();
    std::fill(out.begin(), out.end(), 0);
    out[0] = 1;
    base = w;
    auto mul_into = [&](const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& r) {
        if (prime) {
            std::fill(acc.begin(), acc.end(), 0);
            for (int i = 0; i < len; ++i) {
                if (!a[i]) continue;
                const uint64_t ai = a[i];
                for (int j = 0; i + j < len; ++j) acc[i + j] += ai * b[j];
            }
            for (int k = 0; k < len; ++k) r[k] = static_cast<uint32_t>(acc[k] % q);
        } else {
            std::vector<uint32_t> tmp(len, 0);
            for (int i = 0; i < len; ++i) {
                if (!a[i]) continue;
                for (int j = 0; i + j < len; ++j)
                    tmp[i + j] = f.add(tmp[i + j], f.mul(a[i], b[j]));
            }
            r = tmp;
        }
    };
    int e = d;
    while (e) {
        if (e & 1) mul_into(out, base, out);
        e >>= 1;
        if (!e) break;
        mul_into(base, base, base);
    }
}

// Tallies Tr(coeff_{nd-1}(u * w^d)) over the unit residues w mod pi^len with
// digit prefix code (digits 0..len-2) in [prefix_lo, prefix_hi).  The top
// digit is swept incrementally: w + a*pi^(len-1) changes w^d by
// d*a*w_0^(d-1)*pi^(len-1) modulo pi^len, so each prefix costs one truncated
// power and the top sweep is a table walk.
void tally_chunk(const Fq& f, const std::vector<uint32_t>& u, int n, int d, int len,
                 unsigned long long prefix_lo, unsigned long long prefix_hi,
                 std::vector<unsigned long long>& counts) {
    const uint32_t q = f.q();
    const int target = n * d - 1;
    const uint32_t u0 = u.empty() ? 0 : u[0];
    const uint32_t d_scalar = static_cast<uint32_t>(d % f.p());
    std::vector<uint32_t> w(len, 0), wd(len), base(len);
    std::vector<uint64_t> acc(len);

    if (len == 1) {
        for (uint32_t w0 = 1; w0 < q; ++w0)
            ++counts[f.trace_to_prime(f.mul(u0, w0))];
        return;
    }

    for (unsigned long long code = prefix_lo; code < prefix_hi; ++code) {
        if (code % q == 0) continue;  // constant digit zero: not a unit
        unsigned long long cc = code;
        for (int i = 0; i + 1 < len; ++i) {
            w[i] = static_cast<uint32_t>(cc % q);
            cc /= q;
        }
        w[len - 1] = 0;
        pow_trunc(f, w, d, len, wd, base, acc);
        uint32_t c0 = 0;
        for (int i = 0; i <= target && i < static_cast<int>(u.size()); ++i)
            c0 = f.add(c0, f.mul(u[i], wd[target - i]));
        const uint32_t kappa = f.mul(f.mul(u0, d_scalar), f.pow(w[0], d - 1));
        for (uint32_t a = 0; a < q; ++a)
            ++counts[f.trace_to_prime(f.add(c0, f.mul(kappa, a)))];
    }
}

}  // namespace

CharSumResult unit_character_sum(const LaurentTruncation& u, int n, int d, int e,
                                 const CharSumOptions& opt) {
    if (n < 1 || d < 0) throw std::invalid_argument("need n >= 1 and d >= 0");
    if (!u.is_unit()) throw std::invalid_argument("u must be a unit of the valuation ring");
    const Fq& f = *u.k;
    const uint32_t p = f.p();
    const long long qv = f.q();
    if (e < n * d + 1)
        throw std::invalid_argument("insufficient precision: need e >= n*d + 1");
    if (d > 0 && u.hi() < n * d)
        throw std::invalid_argument("the unit must be known to precision n*d");

    CharSumResult res;
    res.e = e;
    res.stabilized = true;
    res.validated = !(d > 0 && d % p == 0);
    res.class_counts.assign(p, 0);

    if (d == 0) {
        // integrand is identically 1 on the units
        res.value = 1.0 - 1.0 / static_cast<double>(qv);
        return res;
    }

    const int len = n * d;  // the integrand factors through w mod pi^len
    double leaves = (static_cast<double>(qv) - 1) * std::pow(static_cast<double>(qv), len - 1);
    if (leaves > static_cast<double>(opt.budget))
        throw budget_exceeded("unit_character_sum: unit residue count exceeds the budget",
                              static_cast<unsigned long long>(leaves));

    unsigned long long prefixes = 1;
    for (int i = 0; i + 1 < len; ++i) prefixes *= qv;
    unsigned workers = std::max(1u, opt.workers);
    workers = static_cast<unsigned>(
        std::min<unsigned long long>(workers, std::max<unsigned long long>(prefixes / 1024, 1)));

    std::vector<std::vector<unsigned long long>> parts(workers,
                                                       std::vector<unsigned long long>(p, 0));
    std::vector<uint32_t> udig = u.c;
    if (workers == 1 || len == 1) {
        tally_chunk(f, udig, n, d, len, 0, prefixes, parts[0]);
    } else {
        std::vector<std::thread> ts;
        unsigned long long step = prefixes / workers + 1;
        for (unsigned wkr = 0; wkr < workers; ++wkr) {
            unsigned long long lo = wkr * step, hi = std::min(prefixes, lo + step);
            ts.emplace_back(tally_chunk, std::cref(f), std::cref(udig), n, d, len, lo, hi,
                            std::ref(parts[wkr]));
        }
        for (auto& t : ts) t.join();
    }
    for (auto& part : parts)
        for (uint32_t cl = 0; cl < p; ++cl) res.class_counts[cl] += part[cl];

    Cplx acc = 0;
    for (uint32_t cl = 0; cl < p; ++cl)
        acc += static_cast<double>(res.class_counts[cl]) * std::polar(1.0, 2.0 * M_PI * cl / p);
    res.value = acc * std::pow(static_cast<double>(qv), -len);
    return res;
}

}  // namespace woundcount
