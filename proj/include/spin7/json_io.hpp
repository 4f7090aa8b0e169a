#pragma once

// JSON encodings of forms, algebras and reports.

#include <json.hpp>

#include "spin7/quasi_abelian.hpp"

namespace spin7 {

using Json = nlohmann::ordered_json;

// {"degree": k, "terms": [{"axes": [...], "c": ...}]}; c is a rational string for exact forms and a
// number for floating forms. Parsing accepts either representation.
Json to_json(const KForm<double>& b);
Json to_json(const KForm<Rational>& b);
KForm<double> form_from_json(const Json& j);
KForm<Rational> rational_form_from_json(const Json& j);

// {"brackets": [{"i": 0, "j": 1, "k": 2, "c": "1"}, ...]}
Json to_json(const LieAlgebra8<double>& g, double tol = 0.0);
LieAlgebra8<double> algebra_from_json(const Json& j);

// {"E": [[7 numbers] x 7]}; throws InputError on bad shape or non-finite entries.
Mat7 qa_matrix_from_json(const Json& j);

Json to_json(const Mat7& m);
Json to_json(const Mat8& m);
Json to_json(const Vec7& v);
Json to_json(const Vec8<double>& v);
Json to_json(const Spinor16<double>& s);
Json to_json(const EndoDecomp& d);
Json to_json(const FrameData& fd);
Json to_json(const TorsionFlags& f);
Json to_json(const TorsionResiduals& r);
Json to_json(const TorsionReport& r);
Json to_json(const QAReport& r);
Json to_json(const GammaRep& rep);

}  // namespace spin7
