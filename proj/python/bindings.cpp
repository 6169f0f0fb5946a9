// python bindings for the main operations
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "woundcount/acceptance.hpp"
#include "woundcount/charsum.hpp"
#include "woundcount/counting.hpp"
#include "woundcount/denef.hpp"
#include "woundcount/poles.hpp"
#include "woundcount/report.hpp"

namespace py = pybind11;
using namespace woundcount;

namespace {

// pybind-side wrapper: the core hands out shared_ptr<const Fq>, which is not
// a usable pybind11 holder type
struct PyField {
    FqPtr k;
};

FqPtr field(uint32_t p, uint32_t q) {
    uint32_t e = 0, t = 1;
    while (t < q) {
        t *= p;
        ++e;
    }
    if (t != q) throw std::invalid_argument("q must be a power of p");
    return Fq::make(p, std::max(e, 1u));
}

Place place_from(const FqPtr& k, const std::vector<uint32_t>& coeffs) {
    return Place::finite(Poly(k, coeffs));
}

py::dict rat_dict(const Rat& r) {
    py::dict d;
    d["num"] = r.numerator();
    d["den"] = r.denominator();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "point counts and local densities on the norm-form compactification";

    py::register_exception<budget_exceeded>(m, "BudgetExceeded");

    py::class_<PyField>(m, "Field")
        .def(py::init([](uint32_t p, uint32_t e) { return PyField{Fq::make(p, e)}; }),
             py::arg("p"), py::arg("e") = 1)
        .def_property_readonly("p", [](const PyField& f) { return f.k->p(); })
        .def_property_readonly("e", [](const PyField& f) { return f.k->e(); })
        .def_property_readonly("q", [](const PyField& f) { return f.k->q(); })
        .def_property_readonly("modulus", [](const PyField& f) { return f.k->modulus(); })
        .def("add", [](const PyField& f, uint32_t a, uint32_t b) { return f.k->add(a, b); })
        .def("sub", [](const PyField& f, uint32_t a, uint32_t b) { return f.k->sub(a, b); })
        .def("mul", [](const PyField& f, uint32_t a, uint32_t b) { return f.k->mul(a, b); })
        .def("div", [](const PyField& f, uint32_t a, uint32_t b) { return f.k->div(a, b); })
        .def("inv", [](const PyField& f, uint32_t a) { return f.k->inv(a); })
        .def("pow",
             [](const PyField& f, uint32_t a, unsigned long long n) { return f.k->pow(a, n); })
        .def("frobenius", [](const PyField& f, uint32_t a) { return f.k->frobenius(a); })
        .def("trace_to_prime", [](const PyField& f, uint32_t a) { return f.k->trace_to_prime(a); })
        .def("coords", [](const PyField& f, uint32_t a) { return f.k->coords(a); })
        .def("from_coords",
             [](const PyField& f, const std::vector<uint32_t>& c) { return f.k->from_coords(c); })
        .def("__repr__", [](const PyField& f) {
            return "<Field p=" + std::to_string(f.k->p()) + " e=" + std::to_string(f.k->e()) + ">";
        });

    m.def("list_places", [](uint32_t p, uint32_t q, int max_degree) {
        FqPtr k = field(p, q);
        py::list out;
        for (const Place& v : places_up_to(k, max_degree)) {
            py::dict d;
            d["kind"] = v.infinite ? "infinity" : "finite";
            if (!v.infinite) d["pi"] = v.pi.coeffs();
            d["degree"] = v.deg;
            d["qv"] = v.qv;
            out.append(d);
        }
        return out;
    }, py::arg("p"), py::arg("q"), py::arg("max_degree"));

    m.def("count_points", [](uint32_t p, uint32_t q, int M, unsigned long long budget,
                             unsigned workers) {
        CountOptions opt{budget, workers};
        return count_points(field(p, q), M, opt);
    }, py::arg("p"), py::arg("q"), py::arg("M"), py::arg("budget") = 10'000'000ULL,
       py::arg("workers") = 1u);

    m.def("count_points_naive", [](uint32_t p, uint32_t q, int M) {
        return count_points_naive(field(p, q), M);
    }, py::arg("p"), py::arg("q"), py::arg("M"));

    m.def("count_table", [](uint32_t p, uint32_t q, int M_lo, int M_hi, unsigned workers) {
        CountOptions opt;
        opt.workers = workers;
        CountTable t = build_count_table(field(p, q), M_lo, M_hi, false, opt);
        return t.rows;
    }, py::arg("p"), py::arg("q"), py::arg("M_lo"), py::arg("M_hi"), py::arg("workers") = 1u);

    m.def("zeta_partial", [](uint32_t p, uint32_t q, Cplx s, int M_max, unsigned workers) {
        CountOptions opt;
        opt.workers = workers;
        CountTable t = build_count_table(field(p, q), 0, M_max, false, opt);
        return zeta_partial(t, s, M_max);
    }, py::arg("p"), py::arg("q"), py::arg("s"), py::arg("M_max"), py::arg("workers") = 1u);

    m.def("empirical_constant", [](uint32_t p, uint32_t q, int M_lo, int M_hi, unsigned workers) {
        CountOptions opt;
        opt.workers = workers;
        CountTable t = build_count_table(field(p, q), 0, M_hi, false, opt);
        return empirical_constant(t, M_lo, M_hi);
    }, py::arg("p"), py::arg("q"), py::arg("M_lo"), py::arg("M_hi"), py::arg("workers") = 1u);

    m.def("averaged_count", [](uint32_t p, uint32_t q, int M_hi,
                               std::pair<long long, long long> a, int d, int M) {
        CountTable t = build_count_table(field(p, q), 0, M_hi);
        return averaged_count(t, Rat(a.first, a.second), d, M);
    }, py::arg("p"), py::arg("q"), py::arg("M_hi"), py::arg("a"), py::arg("d"), py::arg("M"));

    m.def("enumerate_points", [](uint32_t p, uint32_t q, int M) {
        py::list out;
        for (const GroupPoint& x : enumerate_points(field(p, q), M)) {
            py::list coords;
            for (const Poly& c : x.x) coords.append(c.coeffs());
            out.append(coords);
        }
        return out;
    }, py::arg("p"), py::arg("q"), py::arg("M"));

    m.def("group_mul", [](uint32_t p, uint32_t q, const std::vector<std::vector<uint32_t>>& a,
                          const std::vector<std::vector<uint32_t>>& b) {
        FqPtr k = field(p, q);
        auto mk = [&](const std::vector<std::vector<uint32_t>>& cs) {
            std::vector<Poly> polys;
            for (auto& c : cs) polys.emplace_back(k, c);
            return make_point(std::move(polys));
        };
        GroupPoint r = group_mul(mk(a), mk(b));
        py::list coords;
        for (const Poly& c : r.x) coords.append(c.coeffs());
        return coords;
    }, py::arg("p"), py::arg("q"), py::arg("a"), py::arg("b"));

    m.def("height_exponent", [](uint32_t p, uint32_t q,
                                const std::vector<std::vector<uint32_t>>& coords) {
        FqPtr k = field(p, q);
        std::vector<Poly> polys;
        for (auto& c : coords) polys.emplace_back(k, c);
        return height_exponent(make_point(std::move(polys)));
    }, py::arg("p"), py::arg("q"), py::arg("coords"));

    m.def("valuation_histogram", [](uint32_t p, uint32_t q, const std::vector<uint32_t>& pi) {
        ValuationHistogram h = valuation_histogram(place_from(field(p, q), pi));
        py::dict d;
        for (auto& [m_, n] : h.counts) d[py::int_(m_)] = n;
        return d;
    }, py::arg("p"), py::arg("q"), py::arg("pi"));

    m.def("local_density", [](uint32_t p, uint32_t q, const std::vector<uint32_t>& pi, Cplx s,
                              const std::string& method) {
        return local_density(place_from(field(p, q), pi), s,
                             method == "closed" ? DensityMethod::closed : DensityMethod::bruteforce);
    }, py::arg("p"), py::arg("q"), py::arg("pi"), py::arg("s"), py::arg("method") = "closed");

    m.def("leading_constant", [](uint32_t p, uint32_t q, int truncation_degree) {
        ConstantReport r = leading_constant(field(p, q), truncation_degree);
        py::dict d;
        d["truncation_degree"] = r.truncation_degree;
        d["zeta_residue"] = r.zeta_res;
        d["c_infinity"] = rat_dict(r.c_infinity);
        d["tamagawa_compact"] = rat_dict(r.tamagawa_compact);
        d["finite_product"] = r.finite_product;
        d["assembled"] = r.assembled;
        d["closed_form"] = r.closed_form;
        d["gap"] = r.gap;
        d["tail_bound"] = r.tail_bound;
        return d;
    }, py::arg("p"), py::arg("q"), py::arg("truncation_degree") = 12);

    m.def("infinite_local_volume", [](int p, long long q) {
        return rat_dict(infinite_local_volume(p, q));
    }, py::arg("p"), py::arg("q"));

    m.def("pole_structure", [](const std::vector<std::pair<std::pair<long long, long long>, int>>&
                                   indices,
                               long long q) {
        BundleClass cls;
        for (auto& [lam, rho] : indices)
            cls.indices.push_back({"D" + std::to_string(cls.indices.size()),
                                   Rat(lam.first, lam.second), rho});
        PoleStructure ps = pole_structure(cls, q);
        py::dict d;
        d["a"] = rat_dict(ps.a);
        d["b"] = ps.b;
        d["d"] = rat_dict(ps.d);
        d["g"] = rat_dict(ps.g);
        py::list poles;
        for (auto& pd : ps.poles) {
            py::dict pj;
            pj["re"] = rat_dict(pd.real);
            pj["j"] = pd.j;
            pj["im"] = pd.im;
            poles.append(pj);
        }
        d["poles"] = poles;
        d["period_im"] = ps.period_im;
        return d;
    }, py::arg("indices"), py::arg("q"));

    m.def("tauberian_predict", [](std::pair<long long, long long> a, int b,
                                  std::pair<long long, long long> d, const std::vector<Cplx>& r,
                                  long long q, int M) {
        return tauberian_predict(Rat(a.first, a.second), b, Rat(d.first, d.second), r, q, M);
    }, py::arg("a"), py::arg("b"), py::arg("d"), py::arg("residues"), py::arg("q"), py::arg("M"));

    m.def("averaged_asymptotic", [](double c, std::pair<long long, long long> a, int b,
                                    std::pair<long long, long long> d, long long q, int M) {
        return averaged_asymptotic(c, Rat(a.first, a.second), b, Rat(d.first, d.second), q, M);
    }, py::arg("c"), py::arg("a"), py::arg("b"), py::arg("d"), py::arg("q"), py::arg("M"));

    m.def("unit_character_sum", [](uint32_t qv, int n, int d, int e, unsigned workers) {
        uint32_t p = 2;
        while (qv % p) ++p;
        uint32_t ee = 0, t = 1;
        while (t < qv) {
            t *= p;
            ++ee;
        }
        if (t != qv) throw std::invalid_argument("qv must be a prime power");
        FqPtr k = Fq::make(p, std::max(ee, 1u));
        CharSumOptions opt;
        opt.workers = workers;
        int eff = e > 0 ? e : n * d + 1;
        CharSumResult r = unit_character_sum(LaurentTruncation::one(k, std::max(eff, 1)), n, d,
                                             eff, opt);
        return r.value;
    }, py::arg("qv"), py::arg("n"), py::arg("d"), py::arg("e") = -1, py::arg("workers") = 1u);

    m.def("run_acceptance", [](unsigned workers) {
        AcceptanceOptions opt;
        opt.workers = workers;
        std::ostringstream log;
        auto results = run_acceptance(log, opt);
        py::list out;
        for (auto& r : results) {
            py::dict d;
            d["id"] = r.id;
            d["name"] = r.name;
            d["passed"] = r.passed;
            d["detail"] = r.detail;
            out.append(d);
        }
        return py::make_tuple(all_passed(results), out, log.str());
    }, py::arg("workers") = 1u);
}
