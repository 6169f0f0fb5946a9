#include "woundcount/counting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace woundcount {

namespace {

int floordiv(int a, int b) {
    int q = a / b, r = a % b;
    return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

// all polynomials of degree <= bound (bound < 0: just the zero polynomial)
std::vector<Poly> polys_up_to(const FqPtr& k, int bound) {
    std::vector<Poly> out;
    if (bound < 0) {
        out.push_back(Poly::zero(k));
        return out;
    }
    const uint32_t q = k->q();
    unsigned long long total = 1;
    for (int i = 0; i <= bound; ++i) total *= q;
    out.reserve(total);
    for (unsigned long long code = 0; code < total; ++code) {
        std::vector<uint32_t> cs(bound + 1, 0);
        unsigned long long cc = code;
        for (int i = 0; i <= bound; ++i) {
            cs[i] = static_cast<uint32_t>(cc % q);
            cc /= q;
        }
        out.emplace_back(k, std::move(cs));
    }
    return out;
}

std::vector<Poly> polys_exactly(const FqPtr& k, int deg) {
    std::vector<Poly> out;
    for (Poly& f : polys_up_to(k, deg))
        if (f.degree() == deg) out.push_back(std::move(f));
    return out;
}

// Keep a tuple iff the least-index nonzero coordinate is monic (the scaling
// normalization) and the tuple is primitive.  The gcd accumulates over the
// coordinates with an early exit once it is a constant.
bool tuple_is_canonical(const std::vector<const Poly*>& xs) {
    int first = -1;
    for (size_t i = 0; i < xs.size(); ++i)
        if (!xs[i]->is_zero()) {
            first = static_cast<int>(i);
            break;
        }
    if (first < 0) return false;
    if (!xs[first]->is_monic()) return false;
    Poly g = *xs[first];
    for (size_t i = first + 1; i < xs.size() && g.degree() != 0; ++i)
        if (!xs[i]->is_zero()) g = poly_gcd(g, *xs[i]);
    return g.degree() == 0;
}

struct Pattern {
    std::vector<std::vector<Poly>> candidates;  // one list per coordinate
    unsigned long long tuples = 1;
};

void check_estimate(double tuples, const CountOptions& opt, const char* what) {
    if (tuples > static_cast<double>(opt.budget))
        throw budget_exceeded(std::string(what) + ": enumeration of about " +
                                  std::to_string(tuples) + " tuples exceeds the budget of " +
                                  std::to_string(opt.budget),
                              static_cast<unsigned long long>(std::min(tuples, 1e18)));
}

// tuple-count estimate before any list is materialized
double structured_estimate(const FqPtr& k, int M, int extra_margin = 0) {
    const int p = static_cast<int>(k->p());
    const double q = k->q();
    const int j = M % p;
    double total = 1;
    for (int i = 0; i < p; ++i) {
        int b = floordiv(M - i, p) + extra_margin;
        if (i == j && !extra_margin)
            total *= (q - 1) * std::pow(q, (M - j) / p);
        else
            total *= b < 0 ? 1 : std::pow(q, b + 1);
    }
    return total;
}

Pattern structured_pattern(const FqPtr& k, int M, const CountOptions& opt) {
    check_estimate(structured_estimate(k, M), opt, "structured enumeration");
    const int p = static_cast<int>(k->p());
    const int j = M % p;
    Pattern pat;
    for (int i = 0; i < p; ++i) {
        if (i == j)
            pat.candidates.push_back(polys_exactly(k, (M - j) / p));
        else
            pat.candidates.push_back(polys_up_to(k, floordiv(M - i, p)));
        pat.tuples *= pat.candidates.back().size();
    }
    return pat;
}

// Visits every tuple of the pattern whose first coordinate index lies in
// [lo, hi) and calls fn on the canonical ones.
template <class Fn>
void scan_pattern(const Pattern& pat, size_t lo, size_t hi, Fn&& fn) {
    const size_t n = pat.candidates.size();
    std::vector<const Poly*> xs(n, nullptr);
    std::vector<size_t> idx(n, 0);
    for (size_t i0 = lo; i0 < hi; ++i0) {
        xs[0] = &pat.candidates[0][i0];
        size_t level = 1;
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            if (level == n) {
                if (tuple_is_canonical(xs)) fn(xs);
                // backtrack to the deepest level with candidates left
                do {
                    --level;
                } while (level >= 1 && idx[level] + 1 >= pat.candidates[level].size());
                if (level < 1) break;
                ++idx[level];
                xs[level] = &pat.candidates[level][idx[level]];
                for (size_t l = level + 1; l < n; ++l) idx[l] = 0;
                ++level;
            } else {
                xs[level] = &pat.candidates[level][idx[level]];
                ++level;
            }
        }
    }
}

std::vector<std::pair<size_t, size_t>> chunk_ranges(size_t n, unsigned workers) {
    unsigned w = std::max(1u, workers);
    w = static_cast<unsigned>(std::min<size_t>(w, std::max<size_t>(n, 1)));
    std::vector<std::pair<size_t, size_t>> out;
    size_t base = n / w, extra = n % w, at = 0;
    for (unsigned i = 0; i < w; ++i) {
        size_t len = base + (i < extra ? 1 : 0);
        out.emplace_back(at, at + len);
        at += len;
    }
    return out;
}

}  // namespace

std::vector<GroupPoint> enumerate_points(const FqPtr& k, int M, const CountOptions& opt) {
    if (M < 0) throw std::invalid_argument("height exponent must be non-negative");
    Pattern pat = structured_pattern(k, M, opt);
    auto ranges = chunk_ranges(pat.candidates[0].size(), opt.workers);
    std::vector<std::vector<GroupPoint>> parts(ranges.size());
    auto work = [&](size_t c) {
        scan_pattern(pat, ranges[c].first, ranges[c].second,
                     [&](const std::vector<const Poly*>& xs) {
                         std::vector<Poly> coords;
                         coords.reserve(xs.size());
                         for (const Poly* f : xs) coords.push_back(*f);
                         parts[c].push_back(make_point(std::move(coords)));
                     });
    };
    if (ranges.size() == 1) {
        work(0);
    } else {
        std::vector<std::thread> ts;
        for (size_t c = 0; c < ranges.size(); ++c) ts.emplace_back(work, c);
        for (auto& t : ts) t.join();
    }
    std::vector<GroupPoint> out;
    for (auto& part : parts)
        for (auto& pt : part) out.push_back(std::move(pt));
    return out;
}

unsigned long long count_points(const FqPtr& k, int M, const CountOptions& opt) {
    if (M < 0) throw std::invalid_argument("height exponent must be non-negative");
    Pattern pat = structured_pattern(k, M, opt);
    auto ranges = chunk_ranges(pat.candidates[0].size(), opt.workers);
    std::vector<unsigned long long> parts(ranges.size(), 0);
    auto work = [&](size_t c) {
        unsigned long long n = 0;
        scan_pattern(pat, ranges[c].first, ranges[c].second,
                     [&](const std::vector<const Poly*>&) { ++n; });
        parts[c] = n;
    };
    if (ranges.size() == 1) {
        work(0);
    } else {
        std::vector<std::thread> ts;
        for (size_t c = 0; c < ranges.size(); ++c) ts.emplace_back(work, c);
        for (auto& t : ts) t.join();
    }
    unsigned long long total = 0;
    for (auto n : parts) total += n;
    return total;
}

unsigned long long count_points_naive(const FqPtr& k, int M, const CountOptions& opt) {
    if (M < 0) throw std::invalid_argument("height exponent must be non-negative");
    check_estimate(structured_estimate(k, M, 1), opt, "naive enumeration");
    const int p = static_cast<int>(k->p());
    Pattern pat;
    for (int i = 0; i < p; ++i) {
        pat.candidates.push_back(polys_up_to(k, floordiv(M - i, p) + 1));
        pat.tuples *= pat.candidates.back().size();
    }
    Poly t = Poly::x(k);
    unsigned long long n = 0;
    scan_pattern(pat, 0, pat.candidates[0].size(), [&](const std::vector<const Poly*>& xs) {
        Poly f(k);
        for (size_t i = 0; i < xs.size(); ++i)
            f = f + xs[i]->pow(p) * t.pow(i);
        if (f.degree() == M) ++n;
    });
    return n;
}

bool CountTable::has(int M) const {
    for (auto& [m, n] : rows)
        if (m == M) return true;
    return false;
}

unsigned long long CountTable::at(int M) const {
    for (auto& [m, n] : rows)
        if (m == M) return n;
    throw std::out_of_range("count table has no entry for M=" + std::to_string(M));
}

CountTable build_count_table(const FqPtr& k, int M_lo, int M_hi, bool naive,
                             const CountOptions& opt) {
    if (M_lo < 0 || M_hi < M_lo) throw std::invalid_argument("bad height exponent range");
    CountTable t;
    t.p = k->p();
    t.q = k->q();
    t.method = naive ? "naive" : "structured";
    for (int M = M_lo; M <= M_hi; ++M)
        t.rows.emplace_back(M, naive ? count_points_naive(k, M, opt) : count_points(k, M, opt));
    return t;
}

CountTable rescale_table(const CountTable& table, int kmult) {
    if (kmult < 1) throw std::invalid_argument("class multiple must be positive");
    CountTable t;
    t.p = table.p;
    t.q = table.q;
    t.method = table.method + "*" + std::to_string(kmult);
    int maxM = 0;
    for (auto& [m, n] : table.rows) maxM = std::max(maxM, m * kmult);
    for (int M = 0; M <= maxM; ++M)
        t.rows.emplace_back(M, M % kmult == 0 && table.has(M / kmult) ? table.at(M / kmult) : 0);
    return t;
}

double averaged_count(const CountTable& table, const Rat& a, int d, int M) {
    if (d < 1) throw std::invalid_argument("averaging length must be positive");
    double qa = std::pow(static_cast<double>(table.q), rat_to_double(a));
    double s = 0;
    for (int j = 0; j < d; ++j)
        s += std::pow(qa, -j) * static_cast<double>(table.at(M + j));
    return s / d;
}

Cplx zeta_partial(const CountTable& table, Cplx s, int M_max) {
    const double lq = std::log(static_cast<double>(table.q));
    Cplx acc = 0;
    for (int M = 0; M <= M_max; ++M)
        acc += static_cast<double>(table.at(M)) * std::exp(-s * (lq * M));
    return acc;
}

double empirical_constant(const CountTable& table, int M_lo, int M_hi) {
    if (M_hi < M_lo) throw std::invalid_argument("empty averaging window");
    double s = 0;
    for (int M = M_lo; M <= M_hi; ++M)
        s += static_cast<double>(table.at(M)) / std::pow(static_cast<double>(table.q), M);
    return s / (M_hi - M_lo + 1);
}

}  // namespace woundcount
