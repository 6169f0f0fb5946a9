#include "woundcount/gf.hpp"

#include <sstream>
#include <stdexcept>

namespace woundcount {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Digit-vector helpers over F_p used for modulus selection and generic
// extension-field multiplication.  Vectors are coefficient lists, lowest
// power first, not necessarily normalized.

int vdeg(const std::vector<uint32_t>& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i]) return i;
    return -1;
}

// r <- r mod m over F_p; m monic of degree dm.
void vmod(std::vector<uint32_t>& r, const std::vector<uint32_t>& m, int dm, uint32_t p) {
    for (int i = vdeg(r); i >= dm; --i) {
        uint32_t c = r[i];
        if (!c) continue;
        r[i] = 0;
        for (int j = 0; j < dm; ++j) r[i - dm + j] = (r[i - dm + j] + c * (p - m[j])) % p;
    }
}

std::vector<uint32_t> vmulmod(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                              const std::vector<uint32_t>& m, int dm, uint32_t p) {
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    vmod(r, m, dm, p);
    r.resize(dm);
    return r;
}

// Irreducibility over F_p by the distinct-degree criterion: f of degree d is
// irreducible iff x^(p^d) = x mod f and gcd(x^(p^(d/r)) - x, f) = 1 for every
// prime r | d.  d <= 8 here, so the prime divisors are at most {2,3,5,7}.
bool prime_poly_irreducible(const std::vector<uint32_t>& f, uint32_t p) {
    int d = vdeg(f);
    if (d < 1) return false;
    std::vector<uint32_t> x(2, 0);
    x[1] = 1;
    std::vector<std::vector<uint32_t>> frob(d + 1);  // frob[k] = x^(p^k) mod f
    frob[0] = x;
    vmod(frob[0], f, d, p);
    frob[0].resize(d);
    for (int k = 1; k <= d; ++k) {
        // raise to the p-th power by square and multiply
        std::vector<uint32_t> base = frob[k - 1];
        std::vector<uint32_t> acc(d, 0);
        acc[0] = 1;
        uint32_t n = p;
        while (n) {
            if (n & 1) acc = vmulmod(acc, base, f, d, p);
            base = vmulmod(base, base, f, d, p);
            n >>= 1;
        }
        frob[k] = acc;
    }
    // x^(p^d) == x mod f
    std::vector<uint32_t> diff = frob[d];
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    if (vdeg(diff) != -1) return false;
    for (int r : {2, 3, 5, 7}) {
        if (d % r) continue;
        std::vector<uint32_t> g = frob[d / r];
        g.resize(std::max<size_t>(g.size(), 2), 0);
        g[1] = (g[1] + p - 1) % p;
        // gcd(g, f) over F_p
        std::vector<uint32_t> a = f, b = g;
        while (vdeg(b) != -1) {
            int db = vdeg(b);
            uint32_t lc = b[db];
            // normalize b monic
            uint32_t lcinv = 1;
            for (uint32_t t = 1; t < p; ++t)
                if (t * lc % p == 1) {
                    lcinv = t;
                    break;
                }
            for (auto& c : b) c = c * lcinv % p;
            vmod(a, b, db, p);
            a.resize(db);
            std::swap(a, b);
        }
        if (vdeg(a) != 0) return false;
    }
    return true;
}

}  // namespace

std::shared_ptr<const Fq> Fq::make(uint32_t p, uint32_t e) {
    if (!is_prime_u32(p)) throw std::invalid_argument("field characteristic must be prime");
    if (e < 1 || e > 8) throw std::invalid_argument("extension degree out of range [1,8]");
    double qd = 1;
    for (uint32_t i = 0; i < e; ++i) qd *= p;
    if (qd > 1e7) throw std::invalid_argument("field cardinality exceeds the desk-scale cap");

    std::vector<uint32_t> modulus;
    if (e > 1) {
        // Scan monic degree-e candidates in order of the coefficient tuple
        // read from the leading coefficient down; the leading coefficient is
        // fixed at 1, so this is counting the lower coefficients with the
        // highest one most significant.
        uint64_t total = 1;
        for (uint32_t i = 0; i < e; ++i) total *= p;
        for (uint64_t code = 0; code < total; ++code) {
            // ascending code with the top coefficient as the most significant
            // digit realizes the leading-coefficient-down tuple order
            std::vector<uint32_t> f(e + 1, 0);
            f[e] = 1;
            uint64_t cc = code;
            for (int i = 0; i < static_cast<int>(e); ++i) {
                f[i] = static_cast<uint32_t>(cc % p);
                cc /= p;
            }
            if (prime_poly_irreducible(f, p)) {
                modulus = f;
                break;
            }
        }
        if (modulus.empty()) throw std::logic_error("no irreducible modulus found");
    }
    return std::shared_ptr<const Fq>(new Fq(p, e, std::move(modulus)));
}

Fq::Fq(uint32_t p, uint32_t e, std::vector<uint32_t> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
    q_ = 1;
    for (uint32_t i = 0; i < e; ++i) q_ *= p;
    if (q_ <= 256) {
        mul_table_.resize(static_cast<size_t>(q_) * q_);
        for (elem a = 0; a < q_; ++a)
            for (elem b = 0; b <= a; ++b) {
                elem m = mul_generic(a, b);
                mul_table_[static_cast<size_t>(a) * q_ + b] = m;
                mul_table_[static_cast<size_t>(b) * q_ + a] = m;
            }
    }
    if (q_ <= 4096) {
        trace_table_.resize(q_);
        for (elem a = 0; a < q_; ++a) trace_table_[a] = trace_direct(a);
    }
}

uint32_t Fq::trace_direct(elem a) const {
    elem s = 0, x = a;
    for (uint32_t k = 0; k < e_; ++k) {
        s = add(s, x);
        x = pow(x, p_);
    }
    // the trace lands in the prime subfield: code = constant coordinate
    return s % p_;
}

Fq::elem Fq::add(elem a, elem b) const {
    elem r = 0, m = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        r += (a % p_ + b % p_) % p_ * m;
        a /= p_;
        b /= p_;
        m *= p_;
    }
    return r;
}

Fq::elem Fq::neg(elem a) const {
    elem r = 0, m = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        uint32_t d = a % p_;
        r += (d ? p_ - d : 0) * m;
        a /= p_;
        m *= p_;
    }
    return r;
}

Fq::elem Fq::sub(elem a, elem b) const { return add(a, neg(b)); }

Fq::elem Fq::mul_generic(elem a, elem b) const {
    if (e_ == 1) return a * b % p_;
    std::vector<uint32_t> va(e_), vb(e_);
    for (uint32_t i = 0; i < e_; ++i) {
        va[i] = a % p_;
        a /= p_;
        vb[i] = b % p_;
        b /= p_;
    }
    auto r = vmulmod(va, vb, modulus_, static_cast<int>(e_), p_);
    elem out = 0, m = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        out += r[i] * m;
        m *= p_;
    }
    return out;
}

Fq::elem Fq::mul(elem a, elem b) const {
    if (!mul_table_.empty()) return mul_table_[static_cast<size_t>(a) * q_ + b];
    return mul_generic(a, b);
}

Fq::elem Fq::pow(elem a, unsigned long long n) const {
    elem r = 1, base = a;
    while (n) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

Fq::elem Fq::inv(elem a) const {
    if (a == 0) throw std::domain_error("inversion of zero field element");
    return pow(a, q_ - 2);
}

Fq::elem Fq::div(elem a, elem b) const { return mul(a, inv(b)); }

std::vector<uint32_t> Fq::coords(elem a) const {
    std::vector<uint32_t> c(e_);
    for (uint32_t i = 0; i < e_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

Fq::elem Fq::from_coords(const std::vector<uint32_t>& c) const {
    if (c.size() != e_) throw std::invalid_argument("coordinate vector has wrong length");
    elem a = 0, m = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        if (c[i] >= p_) throw std::invalid_argument("coordinate out of range");
        a += c[i] * m;
        m *= p_;
    }
    return a;
}

std::string Fq::to_string(elem a) const {
    if (e_ == 1) return std::to_string(a);
    std::ostringstream os;
    os << "[";
    auto c = coords(a);
    for (uint32_t i = 0; i < e_; ++i) os << (i ? "," : "") << c[i];
    os << "]";
    return os.str();
}

}  // namespace woundcount
