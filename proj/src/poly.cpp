#include "woundcount/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace woundcount {

Poly::Poly(FqPtr k, std::vector<uint32_t> coeffs) : k_(std::move(k)), c_(std::move(coeffs)) {
    for (uint32_t c : c_)
        if (c >= k_->q()) throw std::invalid_argument("coefficient code out of range");
    normalize();
}

Poly Poly::constant(FqPtr k, uint32_t c) {
    Poly f(std::move(k));
    if (c) f.c_ = {c};
    return f;
}

Poly Poly::x(FqPtr k) { return Poly(std::move(k), {0, 1}); }

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

uint32_t Poly::lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(k_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = k_->add(coeff(i), o.coeff(i));
    r.normalize();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r(k_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = k_->sub(coeff(i), o.coeff(i));
    r.normalize();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(k_);
    Poly r(k_);
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    const Fq& k = *k_;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = k.add(r.c_[i + j], k.mul(c_[i], o.c_[j]));
    }
    r.normalize();
    return r;
}

Poly Poly::scaled(uint32_t s) const {
    Poly r(k_);
    if (!s) return r;
    r.c_ = c_;
    for (auto& c : r.c_) c = k_->mul(c, s);
    r.normalize();
    return r;
}

Poly Poly::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("negative shift");
    if (is_zero()) return *this;
    Poly r(k_);
    r.c_.assign(c_.size() + k, 0);
    std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    Poly q(k_), r = *this;
    int dd = d.degree();
    if (degree() < dd) return {q, r};
    const Fq& k = *k_;
    uint32_t lcinv = k.inv(d.lc());
    q.c_.assign(degree() - dd + 1, 0);
    for (int i = degree(); i >= dd; --i) {
        uint32_t ri = r.coeff(i);
        if (!ri) continue;
        uint32_t f = k.mul(ri, lcinv);
        q.c_[i - dd] = f;
        for (int j = 0; j <= dd; ++j)
            r.c_[i - dd + j] = k.sub(r.c_[i - dd + j], k.mul(f, d.c_[j]));
    }
    q.normalize();
    r.normalize();
    return {q, r};
}

uint32_t Poly::eval(uint32_t x) const {
    const Fq& k = *k_;
    uint32_t r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = k.add(k.mul(r, x), c_[i]);
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) throw std::domain_error("monic normalization of zero");
    return scaled(k_->inv(lc()));
}

Poly Poly::pow(unsigned long long n) const {
    Poly r = Poly::constant(k_, 1), base = *this;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

Poly Poly::pth_power() const {
    const uint32_t p = k_->p();
    Poly r(k_);
    if (is_zero()) return r;
    r.c_.assign(static_cast<size_t>(degree()) * p + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i]) r.c_[i * p] = k_->pow(c_[i], p);
    return r;
}

bool Poly::is_pth_power() const {
    const uint32_t p = k_->p();
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] && i % p != 0) return false;
    return true;
}

Poly Poly::pth_root() const {
    if (!is_pth_power()) throw std::domain_error("polynomial is not a p-th power");
    const uint32_t p = k_->p();
    Poly r(k_);
    if (is_zero()) return r;
    r.c_.assign(degree() / p + 1, 0);
    // Frobenius is bijective on F_q, so each coefficient has a unique p-th
    // root, obtained by iterating x -> x^p a further e*ord-1 times; x^(q/p)
    // when q = p^e gives x^(p^(e-1)), the inverse of x -> x^p.
    unsigned long long root_exp = 1;
    for (uint32_t i = 1; i < k_->e(); ++i) root_exp *= k_->p();
    for (size_t i = 0; i < c_.size(); i += p) r.c_[i / p] = k_->pow(c_[i], root_exp);
    return r;
}

bool Poly::less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    const Fq& k = *k_;
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        uint32_t c = coeff(i);
        if (!c) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || c != 1) os << k.to_string(c);
        if (i > 0 && c != 1) os << "*";
        if (i == 1)
            os << "t";
        else if (i > 1)
            os << "t^" << i;
    }
    return os.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly f = a, g = b;
    while (!g.is_zero()) {
        Poly r = f % g;
        f = g;
        g = r;
    }
    if (f.is_zero()) return f;
    return f.monic();
}

Poly poly_content(const std::vector<Poly>& fs) {
    if (fs.empty()) throw std::invalid_argument("content of an empty tuple");
    Poly g = Poly::zero(fs[0].field());
    for (const Poly& f : fs) {
        g = poly_gcd(g, f);
        if (g.degree() == 0) break;  // content already trivial
    }
    return g;
}

std::vector<Poly> primitive_part(const std::vector<Poly>& fs) {
    Poly g = poly_content(fs);
    std::vector<Poly> out = fs;
    if (g.degree() > 0)
        for (Poly& f : out)
            if (!f.is_zero()) f = f / g;
    return out;
}

Poly powmod(const Poly& base, unsigned long long n, const Poly& mod) {
    Poly r = Poly::constant(base.field(), 1) % mod;
    Poly b = base % mod;
    while (n) {
        if (n & 1) r = (r * b) % mod;
        b = (b * b) % mod;
        n >>= 1;
    }
    return r;
}

bool is_irreducible(const Poly& f) {
    int d = f.degree();
    if (d < 1) throw std::invalid_argument("irreducibility of a constant polynomial");
    if (d == 1) return true;
    const FqPtr& k = f.field();
    const long long q = k->q();
    // cheap root filter; a root is a degree-1 factor
    for (uint32_t a = 0; a < k->q(); ++a)
        if (f.eval(a) == 0) return false;
    if (d <= 3) return true;  // no factor of degree <= d/2 possible beyond roots

    Poly x = Poly::x(k);
    std::vector<Poly> frob(d + 1, Poly(k));  // frob[j] = t^(q^j) mod f
    frob[0] = x % f;
    for (int j = 1; j <= d; ++j) frob[j] = powmod(frob[j - 1], q, f);
    if (frob[d] != frob[0]) return false;
    for (int r : {2, 3, 5, 7, 11, 13}) {
        if (d % r) continue;
        Poly g = poly_gcd(frob[d / r] - x, f);
        if (g.degree() != 0) return false;
    }
    return true;
}

long long necklace_count(long long q, int d) {
    auto mobius = [](int n) {
        int m = 1;
        for (int p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0;
                m = -m;
            }
        }
        if (n > 1) m = -m;
        return m;
    };
    long long s = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e) continue;
        long long qe = 1;
        for (int i = 0; i < e; ++i) qe *= q;
        s += mobius(d / e) * qe;
    }
    return s / d;
}

}  // namespace woundcount
