#pragma once

#include <string>

#include <json.hpp>

#include "deo/decomposition.hpp"
#include "deo/energy_taylor.hpp"
#include "deo/numeric_oracle.hpp"
#include "deo/properties.hpp"
#include "deo/suite.hpp"

namespace deo {

using Json = nlohmann::ordered_json;

// {"n","v","terms":[{"binom","prefactor":"a/b","family","k","operand_deriv",
//   "cofactor_power","cofactor_deriv","subplan":<plan|null>}]}
Json to_json(const DecompositionPlan& plan);
// Throws InvalidInput on schema violations.
DecompositionPlan plan_from_json(const Json& j);

// {"k_window":[lo,hi],"psi_plus_nonzero":{"k":bool},"psi_minus_nonzero":{...},"verdict":bool}
Json to_json(const MembershipReport& r);
MembershipReport membership_from_json(const Json& j);

// {"exact": "...", "value": double}
Json to_json(const ClosedFormValue& v);

Json to_json(const TaylorReport& r);
Json to_json(const CosExampleReport& r);
Json to_json(const CrossCheckReport& r);
Json to_json(const SuiteReport& r);

// Header "k,partial_sum,error", one row per Taylor power.
std::string taylor_csv(const TaylorReport& r);

}  // namespace deo
