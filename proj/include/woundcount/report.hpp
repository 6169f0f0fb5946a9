#ifndef WOUNDCOUNT_REPORT_HPP
#define WOUNDCOUNT_REPORT_HPP

#include <json.hpp>
#include <string>

#include "woundcount/charsum.hpp"
#include "woundcount/counting.hpp"
#include "woundcount/denef.hpp"
#include "woundcount/poles.hpp"
#include "woundcount/wound.hpp"
#include "woundcount/zeta.hpp"

namespace woundcount {

using json = nlohmann::ordered_json;

json rat_json(const Rat& r);
json field_json(const Fq& k);
json poly_json(const Poly& f);          // coefficient codes, lowest first
json place_json(const Place& v);
json group_point_json(const GroupPoint& x);
json euler_json(const EulerProductReport& r);
json count_table_json(const CountTable& t);
std::string count_table_csv(const CountTable& t);  // header "M,N,method"
json histogram_json(const ValuationHistogram& h);
json constant_json(const ConstantReport& r);
json pole_structure_json(const PoleStructure& ps);
json charsum_json(const CharSumResult& r);
json zeta_partial_json(Cplx s, int M_max, Cplx value);

}  // namespace woundcount

#endif
