#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "grpring/json_io.hpp"

using namespace grpring;

namespace {

struct Options {
  std::uint64_t modulus = 2;
  std::vector<std::uint64_t> group;
  std::vector<std::int64_t> coeffs;
  std::string subgroup_gens;
  std::string format = "json";
  std::string json_text;
  std::string input_path;
  std::optional<std::uint64_t> max_order;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  std::string suite;
};

Json read_json_input(const Options& o) {
  if (!o.json_text.empty()) return Json::parse(o.json_text);
  if (o.input_path == "-") return Json::parse(std::cin);
  std::ifstream in(o.input_path);
  if (!in) throw Error(Errc::invalid_argument, "cannot open " + o.input_path);
  return Json::parse(in);
}

bool has_json_input(const Options& o) { return !o.json_text.empty() || !o.input_path.empty(); }

GroupRingElement element_input(const Options& o) {
  if (has_json_input(o)) return element_from_json(read_json_input(o));
  const auto ring = make_ring(o.modulus);
  const auto group = make_group(o.group);
  auto coeffs = o.coeffs;
  if (coeffs.size() != group.size())
    throw Error(Errc::invalid_argument, "--coeffs needs " + std::to_string(group.size()) + " entries");
  return GroupRingElement(ring, group, coeffs);
}

// "1,0;0,2" -> {(1,0), (0,2)}
Subgroup subgroup_input(const FiniteAbelianGroup& group, const std::string& text) {
  std::vector<GroupElement> gens;
  std::stringstream outer(text);
  std::string item;
  while (std::getline(outer, item, ';')) {
    if (item.empty()) continue;
    GroupElement g;
    std::stringstream inner(item);
    std::string part;
    while (std::getline(inner, part, ',')) {
      std::int64_t v = std::stoll(part);
      g.exponents.push_back(static_cast<std::uint64_t>(v));
    }
    if (g.exponents.size() != group.rank())
      throw Error(Errc::invalid_argument, "generator '" + item + "' has the wrong length");
    for (std::size_t i = 0; i < g.exponents.size(); ++i) g.exponents[i] %= group.orders()[i];
    gens.push_back(std::move(g));
  }
  return subgroup_generated(group, std::span<const GroupElement>(gens));
}

void emit(const Options& o, const Json& j) {
  if (o.format == "table")
    std::cout << render_table(j);
  else
    std::cout << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Group ring ideal toolkit over Z/n and F_p"};
  app.require_subcommand(1);
  Options o;

  auto add_element_flags = [&](CLI::App* sub) {
    sub->add_option("--modulus", o.modulus, "Coefficient ring Z/n");
    sub->add_option("--group", o.group, "Cyclic factor orders, e.g. --group 2 4")->delimiter(',');
    sub->add_option("--coeffs", o.coeffs, "Coefficients in enumeration order")->delimiter(',');
    sub->add_option("--json", o.json_text, "Element as JSON text");
    sub->add_option("--input", o.input_path, "Read element JSON from a file, or - for stdin");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  };

  auto* classify = app.add_subcommand("classify", "Decide whether xRG = Phi(N) over F_p C_m");
  add_element_flags(classify);
  add_format(classify);

  auto* laurent = app.add_subcommand("classify-laurent", "Decide whether xRC_inf = Phi(N) for Laurent x");
  laurent->add_option("--json", o.json_text, "{\"modulus\":p,\"terms\":{\"e\":c}}");
  laurent->add_option("--input", o.input_path, "Read Laurent JSON from a file, or - for stdin");
  add_format(laurent);

  auto* phi_cmd = app.add_subcommand("phi", "Echelon basis of Phi(N)");
  auto* psi_cmd = app.add_subcommand("psi", "Psi of the ideal generated by an element");
  auto* quotient_cmd = app.add_subcommand("quotient-check", "Check RG/Phi(N) = R(G/N) by structure constants");
  for (auto* sub : {phi_cmd, quotient_cmd}) {
    sub->add_option("--modulus", o.modulus, "Prime p");
    sub->add_option("--group", o.group, "Cyclic factor orders")->delimiter(',');
    sub->add_option("--subgroup-gens", o.subgroup_gens, "Generators as exponent vectors, e.g. \"1,0;0,2\"");
    add_format(sub);
  }
  add_element_flags(psi_cmd);
  add_format(psi_cmd);

  auto* radical = app.add_subcommand("radical", "Nilradical and Jacobson radical of (Z/n)G");
  radical->add_option("--modulus", o.modulus, "Coefficient ring Z/n");
  radical->add_option("--group", o.group, "Cyclic factor orders")->delimiter(',');
  add_format(radical);

  auto* census = app.add_subcommand("census", "Ideal lattice census of F_pG");
  census->add_option("--modulus", o.modulus, "Prime p");
  census->add_option("--group", o.group, "Cyclic factor orders")->delimiter(',');
  add_format(census);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", o.suite, "section1..section4 or all")->required();
  verify->add_option("--max-order", o.max_order, "Cap every group order bound");
  verify->add_option("--seed", o.seed, "Seed for randomized batteries");
  verify->add_option("--workers", o.workers, "Worker threads (0: hardware)");
  add_format(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify) {
      emit(o, to_json(classify_principal(element_input(o))));
    } else if (*laurent) {
      const auto report = classify_laurent(laurent_from_json(read_json_input(o)));
      emit(o, to_json(report));
    } else if (*phi_cmd) {
      const auto ring = make_ring(o.modulus);
      const auto group = make_group(o.group);
      const auto n = subgroup_input(group, o.subgroup_gens);
      const auto ideal = phi(ring, group, n);
      emit(o, Json{{"subgroup", to_json(group, n)}, {"dimension", ideal.dimension()}, {"basis", to_json(ideal)}});
    } else if (*psi_cmd) {
      const auto x = element_input(o);
      const auto ideal = ideal_generated(x);
      const auto n = psi(ideal);
      const auto back = in_phi_image(ideal);
      emit(o, Json{{"psi", to_json(x.group(), n)},
                   {"ideal_dimension", ideal.dimension()},
                   {"in_phi_image", back ? Json(describe(x.group(), *back)) : Json(nullptr)}});
    } else if (*quotient_cmd) {
      const auto ring = make_ring(o.modulus);
      const auto group = make_group(o.group);
      const auto n = subgroup_input(group, o.subgroup_gens);
      const bool ok = verify_quotient_iso(ring, group, n);
      emit(o, Json{{"subgroup", to_json(group, n)},
                   {"quotient_order", group.size() / n.order()},
                   {"isomorphic", ok}});
      return ok ? 0 : 1;
    } else if (*radical) {
      const auto ring = make_ring(o.modulus);
      const auto group = make_group(o.group);
      emit(o, Json{{"nilradical", to_json(nilradical_closed_form(ring, group))},
                   {"jacobson", to_json(jacobson_closed_form(ring, group))}});
    } else if (*census) {
      emit(o, to_json(ideal_census(make_ring(o.modulus), make_group(o.group))));
    } else if (*verify) {
      SuiteBounds bounds;
      bounds.max_order = o.max_order;
      bounds.seed = o.seed;
      bounds.workers = o.workers;
      const auto result = run_suite(o.suite, bounds);
      emit(o, to_json(result));
      return result.ok() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: invalid-argument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
