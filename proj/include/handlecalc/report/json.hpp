#pragma once

#include <json.hpp>

#include "handlecalc/catalog.hpp"
#include "handlecalc/hbd.hpp"
#include "handlecalc/homology.hpp"
#include "handlecalc/sw.hpp"

namespace handlecalc::report {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Object with the schema field already set.
Json document();

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json big(const BigInt& value);
BigInt parse_big(const Json& j);

Json to_json(const IntegerVector& v);
Json to_json(const IntegerMatrix& m);
Json to_json(const AbelianGroup& g);
Json to_json(const HomologyProfile& h);
Json to_json(const HandleDecomposition& d);
Json to_json(const legendrian::SteinReport& r);
Json to_json(const BasicClassSet& classes);
Json to_json(const ManifoldModel& m);
Json to_json(const LaurentPolynomial& p);
Json to_json(const catalog::ScenarioReport& r);

IntegerVector vector_from_json(const Json& j);
IntegerMatrix matrix_from_json(const Json& j);

/// Model file: {"pairing": [[..]], "euler"?, "signature"?, "b2plus"?,
/// "named": {label: [..]}, "basic_classes": [{"evaluation": [..], "weight"?}]}.
/// Missing euler/signature/b2plus default to the simply connected values.
sw::ModelWithClasses model_from_json(const Json& j);
Json model_to_json(const sw::ModelWithClasses& m);

}  // namespace handlecalc::report
