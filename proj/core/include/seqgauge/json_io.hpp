/** \file
 * JSON wire formats. Rationals travel as canonical "p/q" strings so
 * exactness survives serialization; no binary float ever appears.
 */
#pragma once

#include "seqgauge/bump.hpp"
#include "seqgauge/diagonal.hpp"
#include "seqgauge/dominance.hpp"

#include <json.hpp>

namespace seqgauge {

using nlohmann::json;

json to_json(const Rational& q);
json to_json(const OpenInterval& iv);
json to_json(const FunctionRule& fn);
json to_json(const SequenceRule& rule);
json to_json(const SequenceFamily& family);
json to_json(const GaugeTable& table);
json to_json(const ConditionVerdict& verdict);
json to_json(const FamilyBound& bound);
json to_json(const EvasionSet& eset);
json to_json(const FinitenessCertificate& cert);
json to_json(const EvasionResult& result);
json to_json(const VerifyReport& report);
json to_json(const PeakWitness& peaks);
json to_json(const PeakHitReport& report);
json to_json(const PiecewiseLinear& f);
json to_json(const DominanceVerdict& verdict);
json to_json(const EventuallyDifferent& ed);

Rational rational_from_json(const json& j);
OpenInterval interval_from_json(const json& j);
/// default_precision fills in omitted logshift precision fields.
FunctionRule function_rule_from_json(const json& j);
SequenceRule sequence_rule_from_json(const json& j, unsigned default_precision = 20);
SequenceFamily family_from_json(const json& j, unsigned default_precision = 20);
GaugeTable gauge_table_from_json(const json& j);
EvasionSet evasion_set_from_json(const json& j);
FinitenessCertificate certificate_from_json(const json& j);
EvasionResult evasion_result_from_json(const json& j, unsigned default_precision = 20);
PeakWitness peaks_from_json(const json& j, unsigned default_precision = 20);
PiecewiseLinear pwl_from_json(const json& j);

}  // namespace seqgauge
