#include "woundcount/report.hpp"

#include <sstream>

namespace woundcount {

json rat_json(const Rat& r) {
    return json{{"num", r.numerator()}, {"den", r.denominator()}};
}

json field_json(const Fq& k) {
    json j;
    j["p"] = k.p();
    j["e"] = k.e();
    j["q"] = k.q();
    j["modulus"] = k.modulus();
    return j;
}

json poly_json(const Poly& f) {
    json coeffs = json::array();
    // prime-field coefficients are bare integers; extension coefficients are
    // coordinate tuples over the prime field
    for (uint32_t c : f.coeffs()) {
        if (f.field() && f.field()->e() > 1)
            coeffs.push_back(f.field()->coords(c));
        else
            coeffs.push_back(c);
    }
    return coeffs;
}

json place_json(const Place& v) {
    if (v.infinite) return json{{"kind", "infinity"}};
    json j;
    j["kind"] = "finite";
    j["pi"] = poly_json(v.pi);
    j["degree"] = v.deg;
    j["qv"] = v.qv;
    j["label"] = v.pi.str();
    return j;
}

json group_point_json(const GroupPoint& x) {
    json j;
    json coords = json::array();
    for (const Poly& c : x.x) coords.push_back(poly_json(c));
    j["coords"] = coords;
    j["norm"] = poly_json(x.f);
    j["height_exponent"] = height_exponent(x);
    return j;
}

json euler_json(const EulerProductReport& r) {
    json j;
    j["value_re"] = r.value.real();
    j["value_im"] = r.value.imag();
    j["cutoff_degree"] = r.cutoff_degree;
    j["tail_bound"] = r.tail_bound;
    return j;
}

json count_table_json(const CountTable& t) {
    json j;
    j["p"] = t.p;
    j["q"] = t.q;
    j["method"] = t.method;
    json rows = json::array();
    for (auto& [m, n] : t.rows) rows.push_back(json{{"M", m}, {"N", n}});
    j["rows"] = rows;
    return j;
}

std::string count_table_csv(const CountTable& t) {
    std::ostringstream os;
    os << "M,N,method\n";
    for (auto& [m, n] : t.rows) os << m << "," << n << "," << t.method << "\n";
    return os.str();
}

json histogram_json(const ValuationHistogram& h) {
    json j;
    j["place"] = place_json(h.place);
    json counts;
    for (auto& [m, n] : h.counts) counts[std::to_string(m)] = n;
    j["counts"] = counts;
    j["total"] = h.total;
    return j;
}

json constant_json(const ConstantReport& r) {
    json j;
    j["truncation_degree"] = r.truncation_degree;
    j["zeta_residue"] = r.zeta_res;
    j["c_infinity"] = rat_json(r.c_infinity);
    j["c_infinity_value"] = rat_to_double(r.c_infinity);
    j["infinite_volume"] = rat_json(r.infinite_volume);
    j["tamagawa_compact"] = rat_json(r.tamagawa_compact);
    j["finite_product"] = r.finite_product;
    j["assembled"] = r.assembled;
    j["closed_form"] = r.closed_form;
    j["gap"] = r.gap;
    j["tail_bound"] = r.tail_bound;
    return j;
}

json pole_structure_json(const PoleStructure& ps) {
    json j;
    j["a"] = rat_json(ps.a);
    j["b"] = ps.b;
    j["argmax"] = ps.argmax;
    j["d"] = rat_json(ps.d);
    j["g"] = rat_json(ps.g);
    json poles = json::array();
    for (const PoleDescriptor& pd : ps.poles) {
        json pj;
        pj["re"] = rat_json(pd.real);
        pj["j"] = pd.j;
        pj["im_multiple_of"] = "2*pi/(d*log q)";
        pj["re_value"] = rat_to_double(pd.real);
        pj["im_value"] = pd.im;
        poles.push_back(pj);
    }
    j["poles"] = poles;
    j["period"] = json{{"multiple_of", "2*pi/(g*log q)"},
                       {"g", rat_json(ps.g)},
                       {"im_value", ps.period_im}};
    return j;
}

json charsum_json(const CharSumResult& r) {
    json j;
    j["value_re"] = r.value.real();
    j["value_im"] = r.value.imag();
    j["e"] = r.e;
    j["stabilized"] = r.stabilized;
    j["validated"] = r.validated;
    return j;
}

json zeta_partial_json(Cplx s, int M_max, Cplx value) {
    json j;
    j["s_re"] = s.real();
    j["s_im"] = s.imag();
    j["M_max"] = M_max;
    j["value_re"] = value.real();
    j["value_im"] = value.imag();
    return j;
}

}  // namespace woundcount
