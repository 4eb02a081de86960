#ifndef MELLIN_IO_HPP
#define MELLIN_IO_HPP

#include <string>

#include <json.hpp>

#include "mellin/expression.hpp"
#include "mellin/fredholm.hpp"
#include "mellin/identities.hpp"
#include "mellin/kernel.hpp"

namespace mellin {

using Json = nlohmann::json;

// complex numbers serialize as [re, im]
Json to_json(Complex z);
Complex complex_from_json(const Json& j);

Json kernel_to_json(const MeromorphicKernel& k);
// accepts {"terms":[...]} or {"builtin": "...", ...}
MeromorphicKernel kernel_from_json(const Json& j);

Json multiplier_to_json(const Multiplier& m);
Multiplier multiplier_from_json(const Json& j);

Json expression_to_json(const OperatorExpression& e);
OperatorExpression expression_from_json(const Json& j);

struct AnalysisSpec {
  SpaceParams space;
  bool bessel = false;  // setting: "lp" | "bessel"
  OperatorExpression expression;
  int n_per_leg = 64;
  FredholmOptions tolerances;
};

AnalysisSpec analysis_spec_from_json(const Json& j);
Json analysis_spec_to_json(const AnalysisSpec& spec);

Json report_to_json(const FredholmReport& rep);
Json identity_result_to_json(const IdentityCheckResult& res, const Json& parameters);

// CSV trace: arclen, leg, coord, re_det, im_det
std::string symbol_trace_csv(const SymbolField& field);

}  // namespace mellin

#endif
