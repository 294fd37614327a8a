#ifndef GLINE_JSON_IO_HPP_
#define GLINE_JSON_IO_HPP_

#include <json.hpp>

#include "gline/amenability.hpp"
#include "gline/circle.hpp"
#include "gline/matred.hpp"
#include "gline/orders.hpp"

namespace gline {

// reports use key-order-preserving JSON so identical runs are byte-identical
using Json = nlohmann::ordered_json;

Json trace_to_json(const DerivationTrace& trace);
DerivationTrace trace_from_json(const Json& j);

// "[[13,31],[5,12]]" (row-major, [[a,c],[b,d]] layout)
IntMat2 parse_int_mat2(const std::string& text);
PInvMat2 parse_pinv_mat2(const std::string& text, int p);  // entries may be "n/p^k"
Json int_mat2_to_json(const IntMat2& m);
Json pinv_mat2_to_json(const PInvMat2& m);

// {"breakpoints": ["0","1/3"], "values": [...]} or {"rot": "p/q"}
PLCircleLift pl_from_json(const Json& j);
Json pl_to_json(const PLCircleLift& f);

Rational parse_rational(const std::string& text);  // "p/q" or "n"
std::string rational_str(const Rational& r);

Json euclid_to_json(const EuclidReduction& red);
Json bounded_to_json(const BoundedReduction& red);
Json cone_result_to_json(const GroupBackend& backend, const ConeSearchResult& res);

}  // namespace gline

#endif  // GLINE_JSON_IO_HPP_
