#include "hv/affine_hecke.hpp"
#include "hv/case_table.hpp"
#include "hv/nilorbits.hpp"
#include "hv/partitions.hpp"
#include "hv/rootsys.hpp"
#include "hv/torus.hpp"
#include "hv/verify.hpp"
#include "hv/weylgrp.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using namespace hv;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kConfig = 2;

std::vector<int> coords(const Root& r) { return to_std(r); }

std::string rational_str(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

void print(const json& j, bool as_json, const std::function<void()>& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    text();
}

int cmd_roots(const std::string& type, bool as_json) {
  const RootSystem rs(RootSystemType::parse(type));
  json j;
  j["type"] = rs.type().name();
  j["positive_roots"] = json::array();
  for (const auto& r : rs.positive_roots()) j["positive_roots"].push_back(coords(r));
  j["highest_root"] = coords(rs.highest_root());
  j["degrees"] = rs.degrees();
  print(j, as_json, [&] {
    for (const auto& r : rs.positive_roots()) std::cout << format_root(r) << "\n";
    std::cout << "highest root: " << format_root(rs.highest_root()) << "\n";
    std::cout << "degrees:";
    for (int d : rs.degrees()) std::cout << " " << d;
    std::cout << "\n";
  });
  return kOk;
}

int cmd_weyl(const std::string& type, bool show_poincare, bool show_orders, bool show_irr, bool as_json) {
  const RootSystem rs(RootSystemType::parse(type));
  const bool all = !show_poincare && !show_orders && !show_irr;
  json j;
  j["type"] = rs.type().name();
  j["degrees"] = rs.degrees();
  j["order"] = weyl_order(rs);
  if (all || show_poincare) j["poincare"] = poincare(rs).coeffs;
  if (all || show_orders) j["valid_orders"] = valid_orders(rs);
  if (all || show_irr) {
    j["irr"] = irr_count(rs.type());
    if (const auto c = conjugacy_class_count(rs)) j["conjugacy_classes"] = *c;
  }
  print(j, as_json, [&] {
    for (const auto& [k, v] : j.items()) std::cout << k << ": " << v.dump() << "\n";
  });
  return kOk;
}

int cmd_partitions(int check, int p, int typeD, bool as_json) {
  json j = json::object();
  bool ok = true;
  if (p > 0) {
    std::ostringstream os;
    os << partition_count(p);
    j["p"] = os.str();
  }
  if (typeD > 0) {
    std::ostringstream a, b;
    a << typeD_count(typeD);
    b << typeD_bound(typeD);
    j["P"] = a.str();
    j["D"] = b.str();
  }
  if (check > 0) {
    j["checks"] = json::array();
    for (const auto& c : check_inequalities(check)) {
      json e;
      e["name"] = c.name;
      e["from"] = c.from;
      e["to"] = c.to;
      e["holds"] = c.holds;
      if (c.counterexample) e["counterexample"] = *c.counterexample;
      if (!c.detail.empty()) e["detail"] = c.detail;
      j["checks"].push_back(e);
      ok = ok && c.holds;
    }
  }
  print(j, as_json, [&] {
    for (const auto& [k, v] : j.items()) {
      if (k != "checks") {
        std::cout << k << "(" << (k == "p" ? p : typeD) << ") = " << v.get<std::string>() << "\n";
        continue;
      }
      for (const auto& c : v)
        std::cout << (c["holds"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << " for "
                  << c["from"] << " <= n <= " << c["to"] << "\n";
    }
  });
  return ok ? kOk : kFail;
}

int cmd_torus(const std::string& type, int order, const std::string& point, bool centralizer, bool as_json) {
  const RootSystem rs(RootSystemType::parse(type));
  const QOrder o = order > 0 ? QOrder::finite(order) : QOrder::infinite();
  const TorusPoint s = point == "mixed" ? mixed_point(rs, o) : standard_point(rs, o);
  std::map<std::string, std::vector<Root>> classes;
  for (const auto& r : rs.roots()) classes[rational_str(eval(rs, s, r))].push_back(r);
  json j;
  j["type"] = rs.type().name();
  j["order"] = o.str();
  j["point"] = point;
  j["exponents"] = json::object();
  for (const auto& [k, roots] : classes) {
    json list = json::array();
    for (const auto& r : roots) list.push_back(coords(r));
    j["exponents"][k] = list;
  }
  if (centralizer) j["centralizer"] = centralizer_signature(rs, s).str();
  print(j, as_json, [&] {
    for (const auto& [k, roots] : classes) {
      std::cout << "q^" << k << ":";
      for (const auto& r : roots) std::cout << " [" << format_root(r) << "]";
      std::cout << "\n";
    }
    if (centralizer) std::cout << "centralizer: " << j["centralizer"].get<std::string>() << "\n";
  });
  return kOk;
}

int cmd_orbits(const std::string& type, int order, const std::vector<int>& primes, const std::vector<int>& joint,
               int cap, bool as_json) {
  const RootSystem rs(RootSystemType::parse(type));
  const auto sc = structure_constants(rs);
  const NilModule nm = build_nqs(rs, QOrder::finite(order));
  const auto parts = decompose(rs, nm, sc);
  OrbitConfig config;
  if (cap > 0) config.dim_cap = cap;
  auto count = [&](const Submodule& m) {
    json e;
    e["support"] = json::array();
    for (const auto& r : m.support) e["support"].push_back(coords(r));
    if (primes.empty()) {
      const OrbitCount c = orbit_count(rs, sc, nm, m, config);
      if (c.refused) {
        e["refused"] = c.note;
      } else {
        e["count"] = c.count;
        e["primes"] = c.primes_used;
        e["per_prime"] = c.per_prime;
        e["stable"] = c.stable;
      }
      return e;
    }
    json per = json::array();
    try {
      for (int p : primes) per.push_back(orbit_count_ff(rs, sc, nm, m, p, config).count);
      e["primes"] = primes;
      e["per_prime"] = per;
    } catch (const OrbitRefusal& err) {
      e["refused"] = err.what();
    }
    return e;
  };
  json j;
  j["type"] = rs.type().name();
  j["order"] = order;
  j["components"] = json::array();
  if (!joint.empty()) {
    std::vector<Submodule> chosen;
    for (int i : joint) {
      if (i < 0 || i >= static_cast<int>(parts.size()))
        throw CLI::ValidationError("--joint", "component index " + std::to_string(i) + " out of range");
      chosen.push_back(parts[static_cast<size_t>(i)]);
    }
    j["joint"] = count(join(rs, chosen));
  } else {
    for (const auto& m : parts) j["components"].push_back(count(m));
  }
  print(j, as_json, [&] {
    auto line = [](const json& e) {
      std::cout << "{";
      bool first = true;
      for (const auto& r : e["support"]) {
        std::cout << (first ? "[" : " [");
        first = false;
        for (size_t k = 0; k < r.size(); ++k) std::cout << (k ? " " : "") << r[k].get<int>();
        std::cout << "]";
      }
      std::cout << "} -> ";
      if (e.contains("refused"))
        std::cout << "refused: " << e["refused"].get<std::string>();
      else if (e.contains("count"))
        std::cout << e["count"] << " (p = " << e["primes"].dump() << ")";
      else
        std::cout << e["per_prime"].dump() << " at p = " << e["primes"].dump();
      std::cout << "\n";
    };
    if (j.contains("joint"))
      line(j["joint"]);
    else
      for (const auto& e : j["components"]) line(e);
  });
  return kOk;
}

int cmd_hecke(const std::string& type, const std::string& check, int radius, bool as_json) {
  const RootSystem rs(RootSystemType::parse(type));
  std::vector<IdentityCheck> checks;
  if (check == "theta" || check == "center") {
    for (auto& c : verify_bernstein(rs, radius)) {
      const bool is_center = c.name.rfind("S_", 0) == 0;
      if (is_center == (check == "center")) checks.push_back(std::move(c));
    }
    if (check == "theta" && rs.type().family == Family::A)
      for (auto& c : verify_theta_alpha_formula(rs)) checks.push_back(std::move(c));
  } else if (check == "words") {
    for (auto& c : verify_translation_words())
      if (c.name.rfind(rs.type().name() + " ", 0) == 0) checks.push_back(std::move(c));
    if (rs.type().family == Family::A)
      for (auto& c : verify_type_a_lengths(std::max(rs.rank(), 1)))
        if (c.name.rfind(rs.type().name() + " ", 0) == 0) checks.push_back(std::move(c));
  } else {
    checks = build_d_dprime(rs).checks;
  }
  bool ok = true;
  json j = json::array();
  for (const auto& c : checks) {
    j.push_back({{"identity", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    ok = ok && c.pass;
  }
  print(j, as_json, [&] {
    for (const auto& c : checks)
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
    if (checks.empty()) std::cout << "no " << check << " identities tabulated for " << type << "\n";
  });
  return ok ? kOk : kFail;
}

int cmd_verify(const std::vector<std::string>& cases, const std::string& config_path, const std::string& format,
               int jobs) {
  RunConfig config = config_path.empty() ? RunConfig{} : load_config(config_path);
  if (!cases.empty()) config.cases = cases;
  if (!format.empty()) config.format = format == "text" ? ReportFormat::Text : ReportFormat::JsonLines;
  if (jobs > 0) config.jobs = jobs;
  config.validate();
  const auto records = verify_all(config);
  emit(std::cout, records, config.format);
  return summarize(records).fail == 0 ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of root-system, Weyl-group, orbit and affine Hecke algebra computations"};
  app.require_subcommand(1);

  std::string type, format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* roots = app.add_subcommand("roots", "Positive roots, highest root and degrees");
  roots->add_option("type", type, "Root system, e.g. E8")->required();
  add_format(roots);

  bool show_poincare = false, show_orders = false, show_irr = false;
  auto* weyl = app.add_subcommand("weyl", "Weyl group order, Poincare polynomial, valid orders, irreducibles");
  weyl->add_option("type", type)->required();
  weyl->add_flag("--poincare", show_poincare);
  weyl->add_flag("--orders", show_orders);
  weyl->add_flag("--irr", show_irr);
  add_format(weyl);

  int check_n = 0, p_n = 0, d_n = 0;
  auto* parts = app.add_subcommand("partitions", "Partition counts and inequalities");
  parts->add_option("--check", check_n, "Check every inequality up to N")->check(CLI::Range(12, 100000));
  parts->add_option("--p", p_n, "p(N)")->check(CLI::PositiveNumber);
  parts->add_option("--typeD", d_n, "P(N) and D(N)")->check(CLI::Range(4, 100000));
  add_format(parts);

  int order = 0;
  std::string point = "standard";
  bool show_centralizer = false;
  auto* torus = app.add_subcommand("torus", "Roots grouped by alpha(s) = q^k");
  torus->add_option("type", type)->required();
  torus->add_option("--order", order, "Order of q (omit for infinite)")->check(CLI::PositiveNumber);
  torus->add_option("--point", point)->check(CLI::IsMember({"standard", "mixed"}));
  torus->add_flag("--show-centralizer", show_centralizer);
  add_format(torus);

  std::vector<int> primes, joint;
  int cap = 0;
  auto* orbits = app.add_subcommand("orbits", "Finite-field orbit counts on the q-eigenspace");
  orbits->add_option("type", type)->required();
  orbits->add_option("--order", order)->required()->check(CLI::PositiveNumber);
  orbits->add_option("--primes", primes)->delimiter(',');
  orbits->add_option("--joint", joint, "Component indices counted together")->delimiter(',');
  orbits->add_option("--cap", cap, "Dimension cap")->check(CLI::PositiveNumber);
  add_format(orbits);

  std::string check = "theta";
  int radius = 2;
  auto* hecke = app.add_subcommand("hecke", "Affine Hecke algebra identities");
  hecke->add_option("--type", type)->required();
  hecke->add_option("--check", check)->check(CLI::IsMember({"theta", "center", "words", "ddprime"}));
  hecke->add_option("--radius", radius)->check(CLI::Range(0, 4));
  add_format(hecke);

  std::vector<std::string> cases;
  std::string config_path, verify_format;
  int jobs = 0;
  auto* verify = app.add_subcommand("verify", "Run every claim check and report");
  verify->add_option("--case", cases, "Claim-id prefix, e.g. E8.o16 (repeatable)");
  verify->add_option("--config", config_path, "JSON config file");
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  const bool as_json = format == "json";
  try {
    if (*roots) return cmd_roots(type, as_json);
    if (*weyl) return cmd_weyl(type, show_poincare, show_orders, show_irr, as_json);
    if (*parts) return cmd_partitions(check_n, p_n, d_n, as_json);
    if (*torus) return cmd_torus(type, order, point, show_centralizer, as_json);
    if (*orbits) return cmd_orbits(type, order, primes, joint, cap, as_json);
    if (*hecke) return cmd_hecke(type, check, radius, as_json);
    if (*verify) return cmd_verify(cases, config_path, verify_format, jobs);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kConfig;
  } catch (const HeckeRefusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kConfig;
  } catch (const HypothesisError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kConfig;
  } catch (const WeylBudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kConfig;
  }
  return kOk;
}
