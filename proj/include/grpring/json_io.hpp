#pragma once

#include <string>

#include <json.hpp>

#include "grpring/harness.hpp"
#include "grpring/principal.hpp"
#include "grpring/radicals.hpp"

namespace grpring {

using Json = nlohmann::ordered_json;

/// {"modulus": n, "group": [m_1, ...], "coeffs": [c_0, ...]} in enumeration order.
GroupRingElement element_from_json(const Json& j);
Json to_json(const GroupRingElement& x);

/// {"modulus": p or 0, "terms": {"3": 2, "-1": 3}}.
LaurentElement laurent_from_json(const Json& j);
Json to_json(const LaurentElement& x);

Json to_json(const FiniteAbelianGroup& group, const Subgroup& n);
/// Row list of the echelon basis.
Json to_json(const IdealSubspace& ideal);

Json to_json(const ClassificationReport& r);
Json to_json(const LaurentReport& r);
Json to_json(const RadicalReport& r);
Json to_json(const LatticeCensus& c);
Json to_json(const SuiteResult& r);

/// Two-column rendering for --format table; nested values are printed compactly.
std::string render_table(const Json& j);

}  // namespace grpring
