#include "grpring/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace grpring {

namespace {

Json group_json(const std::vector<std::uint64_t>& orders) { return Json(orders); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(Errc::invalid_argument, std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

GroupRingElement element_from_json(const Json& j) {
  try {
    const auto ring = make_ring(field(j, "modulus").get<std::uint64_t>());
    const auto group = make_group(field(j, "group").get<std::vector<std::uint64_t>>());
    return GroupRingElement(ring, group, field(j, "coeffs").get<std::vector<std::int64_t>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::invalid_argument, e.what());
  }
}

Json to_json(const GroupRingElement& x) {
  Json j;
  j["modulus"] = x.ring().modulus;
  j["group"] = group_json(x.group().orders());
  j["coeffs"] = x.coeffs();
  return j;
}

LaurentElement laurent_from_json(const Json& j) {
  try {
    std::map<std::int64_t, std::int64_t> terms;
    for (const auto& [k, v] : field(j, "terms").items()) {
      std::size_t used = 0;
      const auto e = std::stoll(k, &used);
      if (used != k.size()) throw Error(Errc::invalid_argument, "bad exponent '" + k + "'");
      terms[e] += v.get<std::int64_t>();
    }
    return LaurentElement(field(j, "modulus").get<std::uint64_t>(), terms);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::invalid_argument, e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(Errc::invalid_argument, "bad exponent");
  }
}

Json to_json(const LaurentElement& x) {
  Json terms = Json::object();
  for (const auto& [e, c] : x.terms()) terms[std::to_string(e)] = c;
  return Json{{"modulus", x.modulus()}, {"terms", terms}};
}

Json to_json(const FiniteAbelianGroup& group, const Subgroup& n) {
  Json gens = Json::array();
  for (const auto& g : n.generators) gens.push_back(g.exponents);
  return Json{{"label", describe(group, n)}, {"order", n.order()}, {"generators", gens}};
}

Json to_json(const IdealSubspace& ideal) {
  Json rows = Json::array();
  for (const auto& r : ideal.basis().rows()) rows.push_back(r);
  return rows;
}

Json to_json(const ClassificationReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  if (r.reason) j["reason"] = to_string(*r.reason);
  j["d"] = r.d;
  j["rank_A"] = r.rank_a;
  if (r.rank_a_tilde) j["rank_A_tilde"] = *r.rank_a_tilde;
  if (!r.condition42.empty() || r.verdict == Verdict::in_image) j["condition42"] = r.condition42;
  if (r.verdict == Verdict::in_image) {
    j["subgroup"] = r.subgroup_label();
    j["quotient"] = r.quotient_label();
  }
  return j;
}

Json to_json(const LaurentReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  if (r.h_exponent) j["h"] = "g^" + std::to_string(*r.h_exponent);
  if (r.unit) j["unit"] = *r.unit;
  if (r.g1_exponent) j["g1"] = "g^" + std::to_string(*r.g1_exponent);
  if (r.g2_exponent) j["g2"] = "g^" + std::to_string(*r.g2_exponent);
  return j;
}

Json to_json(const RadicalReport& r) {
  Json j;
  j["kind"] = to_string(r.kind);
  j["closed_form"] = to_string(r.closed_form);
  if (r.subgroup && r.subspace) j["subgroup"] = to_json(r.subspace->group(), *r.subgroup);
  j["containment_facts"] = r.containment_facts;
  Json gens = Json::array();
  for (const auto& g : r.generators) gens.push_back(g.coeffs());
  j["generators"] = gens;
  if (r.subspace) {
    j["dimension"] = r.subspace->dimension();
    j["basis"] = to_json(*r.subspace);
  }
  return j;
}

Json to_json(const LatticeCensus& c) {
  const auto group = make_group(c.group);
  Json j;
  j["group"] = group_json(c.group);
  j["modulus"] = c.modulus;
  j["subgroup_count"] = c.subgroup_count;
  Json image = Json::array();
  for (const auto& [n, dim] : c.phi_image) image.push_back(Json{{"subgroup", describe(group, n)}, {"dimension", dim}});
  j["phi_image"] = image;
  j["ideal_count"] = c.ideal_count ? Json(*c.ideal_count) : Json(nullptr);
  if (c.fiber_sizes) {
    Json fibers = Json::object();
    for (const auto& [n, size] : *c.fiber_sizes) fibers[describe(group, n)] = size;
    j["fiber_sizes"] = fibers;
  } else {
    j["fiber_sizes"] = nullptr;
  }
  if (c.phi_image_is_everything) j["phi_image_is_everything"] = *c.phi_image_is_everything;
  if (c.phi_in_own_fiber) j["phi_in_own_fiber"] = *c.phi_in_own_fiber;
  return j;
}

Json to_json(const SuiteResult& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back(Json{{"key", f.key}, {"expected", f.expected}, {"actual", f.actual}});
  return Json{{"suite", r.name},
              {"cases", r.cases},
              {"failure_count", r.failures.size()},
              {"failures", failures},
              {"wall_ms", r.wall_ms}};
}

std::string render_table(const Json& j) {
  if (!j.is_object()) return j.dump() + "\n";
  std::size_t width = 0;
  for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : j.items()) {
    out << k << std::string(width - k.size() + 2, ' ');
    out << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  return out.str();
}

}  // namespace grpring
