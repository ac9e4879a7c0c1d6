#pragma once

#include <json.hpp>

#include "skcat/hochschild.hpp"

namespace skcat {

using Json = nlohmann::json;

// Category files: field, objects, homs, compositions, optional metadata.
Json category_to_json(const SchurianCategory& cat);
SchurianCategory category_from_json(const Json& j);

// Grading files: finite table or abelian rank+torsion, plus a degree for
// every off-diagonal hom.  Presented groups are emitted (for the universal
// grading) but never parsed.
Json grading_to_json(const SchurianCategory& cat, const Grading& x);
Grading grading_from_json(const Json& j, const SchurianCategory& cat);

// Conjugator files: object name -> group element (same element syntax as
// grading degrees).
std::vector<GroupElt> conjugator_from_json(const Json& j, const SchurianCategory& cat,
                                           const GradingGroup& group);

Json cw_to_json(const CwComplex& cw);
std::string cw_to_dot(const CwComplex& cw);

Json abelian_invariants_to_json(const AbelianInvariants& inv);
Json presentation_to_json(const GroupPresentation& pres, const CwComplex& cw);

Json walk_to_json(const Walk& w, const SchurianCategory& cat);

} // namespace skcat
