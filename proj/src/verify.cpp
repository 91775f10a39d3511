#include "hv/verify.hpp"

#include "hv/affine_hecke.hpp"
#include "hv/case_table.hpp"
#include "hv/partitions.hpp"
#include "hv/rootsys.hpp"
#include "hv/torus.hpp"
#include "hv/weylgrp.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

namespace hv {

void RunConfig::validate() const {
  auto positive = [](long long v, const char* key) {
    if (v <= 0) throw ConfigError(std::string(key) + " must be positive");
  };
  positive(orbits.prime_bound, "prime_bound");
  positive(orbits.min_primes, "min_primes");
  positive(orbits.dim_cap, "dim_cap");
  positive(orbits.label_budget, "label_budget");
  positive(weyl_budget, "weyl_budget");
  positive(hecke_rank_cap, "hecke_rank_cap");
  positive(hecke_radius, "hecke_radius");
  positive(jobs, "jobs");
  if (d_max < 4) throw ConfigError("d_max must be at least 4");
  if (d_max > 12) throw ConfigError("d_max above 12 exceeds the rank capacity");
  if (partition_range < 12) throw ConfigError("partition_range must be at least 12");
  positive(tau_max, "tau_max");
}

RunConfig parse_config(const std::string& json_text, RunConfig base) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig c = std::move(base);
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "prime_bound") c.orbits.prime_bound = value.get<int>();
      else if (key == "min_primes") c.orbits.min_primes = value.get<int>();
      else if (key == "dim_cap") c.orbits.dim_cap = value.get<int>();
      else if (key == "label_budget") c.orbits.label_budget = value.get<long long>();
      else if (key == "weyl_budget") c.weyl_budget = value.get<long long>();
      else if (key == "hecke_rank_cap") c.hecke_rank_cap = value.get<int>();
      else if (key == "hecke_radius") c.hecke_radius = value.get<int>();
      else if (key == "d_max") c.d_max = value.get<int>();
      else if (key == "partition_range") c.partition_range = value.get<int>();
      else if (key == "tau_max") c.tau_max = value.get<int>();
      else if (key == "jobs") c.jobs = value.get<int>();
      else if (key == "cases") c.cases = value.get<std::vector<std::string>>();
      else if (key == "format") {
        const auto f = value.get<std::string>();
        if (f == "json") c.format = ReportFormat::JsonLines;
        else if (f == "text") c.format = ReportFormat::Text;
        else throw ConfigError("format must be json or text, got " + f);
      } else {
        throw ConfigError("unknown config key " + key);
      }
    }
  } catch (const nlohmann::json::type_error& e) {
    throw ConfigError(std::string("config value has the wrong type: ") + e.what());
  }
  c.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string slug(const std::string& text) {
  std::string out;
  bool gap = false;
  for (char ch : text) {
    if (std::isalnum(static_cast<unsigned char>(ch))) {
      if (gap && !out.empty()) out += '_';
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      gap = false;
    } else {
      gap = true;
    }
  }
  return out;
}

namespace {

using Records = std::vector<ClaimRecord>;

struct Unit {
  std::string id;
  std::function<Records()> run;
};

std::string join_ints(const std::vector<int>& v) {
  std::string out = "{";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

/// Positive root counts from the classification, independent of enumeration.
long long expected_positive(const RootSystemType& t) {
  const long long n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

long long expected_center(const RootSystemType& t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 4;
    case Family::E: return t.rank == 6 ? 3 : t.rank == 7 ? 2 : 1;
    default: return 1;
  }
}

Records rootsys_unit(const std::string& name) {
  const RootSystem rs(RootSystemType::parse(name));
  const std::string id = "rootsys." + name;
  Records out;
  const auto refl = positive_roots_by_reflection(rs);
  std::set<std::vector<int>> a, b;
  for (const auto& r : rs.positive_roots()) a.insert(to_std(r));
  for (const auto& r : refl) b.insert(to_std(r));
  out.push_back(make_claim(id + ".positive", "positive roots of " + name, std::to_string(expected_positive(rs.type())),
                           std::to_string(a.size()) + " by root strings, " + std::to_string(b.size()) +
                               " by reflection closure" + (a == b ? ", same set" : ", sets differ"),
                           a == b && static_cast<long long>(a.size()) == expected_positive(rs.type())));
  int exps = 0;
  for (int d : rs.degrees()) exps += d - 1;
  out.push_back(make_claim(id + ".exponents", "sum of the exponents d_i - 1 equals the number of positive roots",
                           std::to_string(rs.positive_count()), std::to_string(exps), exps == rs.positive_count()));
  out.push_back(make_claim(id + ".center", "order of X/Q, the center of the simply connected group",
                           std::to_string(expected_center(rs.type())), std::to_string(rs.center_order()),
                           rs.center_order() == expected_center(rs.type())));
  long long bad = 0;
  for (int sign : {1, -1}) bad += jacobi_violations(rs, structure_constants(rs, sign));
  out.push_back(make_claim(id + ".jacobi", "Chevalley basis structure constants satisfy the Jacobi identity",
                           "0 violated triples", std::to_string(bad) + " violated triples (both sign conventions)",
                           bad == 0));
  return out;
}

/// Valid orders as tabulated for the exceptional types; A_n has none and
/// D_n has the odd m in [n + 1, 2n - 3].
std::optional<std::vector<int>> stated_valid_orders(const RootSystemType& t) {
  switch (t.family) {
    case Family::E:
      if (t.rank == 6) return std::vector<int>{7, 10, 11};
      if (t.rank == 7) return std::vector<int>{11, 13, 15, 16, 17};
      return std::vector<int>{11, 13, 16, 17, 19, 21, 22, 23, 25, 26, 27, 28, 29};
    case Family::A: return std::vector<int>{};
    case Family::D: {
      std::vector<int> out;
      for (int m = (t.rank + 1) | 1; m <= 2 * t.rank - 3; m += 2) out.push_back(m);
      return out;
    }
    default: return std::nullopt;
  }
}

std::optional<long long> stated_irr(const RootSystemType& t) {
  switch (t.family) {
    case Family::E: return t.rank == 6 ? 25 : t.rank == 7 ? 60 : 112;
    case Family::F: return 25;
    case Family::G: return 6;
    default: return std::nullopt;
  }
}

Records weyl_unit(const std::string& name, const RunConfig& config) {
  const RootSystem rs(RootSystemType::parse(name));
  const RootSystemType& t = rs.type();
  const std::string id = "weyl." + name;
  Records out;
  const bool classical_listed = (t.family == Family::A && t.rank <= 9) ||
                                ((t.family == Family::B || t.family == Family::C || t.family == Family::D) && t.rank <= 7);
  if (classical_listed || stated_irr(t)) {
    const long long formula = irr_count(t);
    const auto classes = conjugacy_class_count(rs, config.weyl_budget);
    if (const auto stated = stated_irr(t)) {
      const std::string anchor = "number of irreducible representations of W0 for " + name;
      if (classes)
        out.push_back(make_claim(id + ".irr", anchor, std::to_string(*stated),
                                 std::to_string(*classes) + " conjugacy classes by enumeration",
                                 *classes == *stated && formula == *stated));
      else
        out.push_back(make_claim(id + ".irr", anchor, std::to_string(*stated),
                                 std::to_string(formula) + " tabulated (|W0| = " + std::to_string(weyl_order(rs)) +
                                     " is over the enumeration budget)",
                                 formula == *stated));
    } else if (classes) {
      out.push_back(make_claim(id + ".irr", "irreducible representations of W0 counted by (bi)partitions",
                               std::to_string(*classes) + " conjugacy classes by enumeration",
                               std::to_string(formula), formula == *classes));
    } else {
      out.push_back({id + ".irr", "irreducible representations of W0 counted by (bi)partitions",
                     "conjugacy class count", "|W0| over the enumeration budget", ClaimStatus::Skipped});
    }
  }
  if (weyl_order(rs) <= 500'000) {
    const PoincarePoly by_degrees = poincare(rs);
    const PoincarePoly by_walk = poincare_by_enumeration(rs, config.weyl_budget);
    long long prod = 1;
    for (int d : rs.degrees()) prod *= d;
    out.push_back(make_claim(id + ".poincare", "Poincare polynomial as a product over the degrees",
                             "enumerated length distribution, |W0| = " + std::to_string(by_walk.total()),
                             "product formula, prod d_i = " + std::to_string(prod),
                             by_degrees == by_walk && prod == by_walk.total()));
  }
  if (const auto stated = stated_valid_orders(t)) {
    const auto got = valid_orders(rs);
    out.push_back(make_claim(id + ".valid_orders", "orders o(q) = m below the top degree with P_W0(q) != 0",
                             join_ints(*stated), join_ints(got), got == *stated));
  }
  return out;
}

Records partitions_unit(const RunConfig& config) {
  Records out;
  auto seq = [](int from, int to, const std::function<BigCount(int)>& f) {
    std::string s = "(";
    for (int n = from; n <= to; ++n) s += (n > from ? "," : "") + str(f(n));
    return s + ")";
  };
  auto check = [&](std::string id, std::string anchor, std::string want, std::string got) {
    const bool ok = want == got;
    out.push_back(make_claim(std::move(id), std::move(anchor), std::move(want), std::move(got), ok));
  };
  check("partitions.p", "partition counts p(3..6)", "(3,5,7,11)", seq(3, 6, partition_count));
  check("partitions.P", "type D representation counts P(4..12)", "(13,18,37,55,100,150,251,376,599)",
        seq(4, 12, typeD_count));
  check("partitions.D", "comparison bound D(4..12)", "(16,32,48,96,144,288,432,864,1296)", seq(4, 12, typeD_bound));
  for (const auto& c : check_inequalities(config.partition_range, config.tau_max)) {
    const std::string range = std::to_string(c.from) + " <= n <= " + std::to_string(c.to);
    out.push_back(make_claim("partitions." + slug(c.name), c.name + " for " + range, "holds on " + range,
                             c.holds ? "holds" + (c.detail.empty() ? "" : "; " + c.detail)
                                     : "fails at n = " + std::to_string(*c.counterexample),
                             c.holds));
  }
  return out;
}

std::vector<QOrder> torus_orders(const RootSystem& rs) {
  std::vector<QOrder> out;
  if (rs.type().family == Family::F)
    for (int m : {5, 7, 9, 10, 11}) out.push_back(QOrder::finite(m));
  else if (rs.type().family == Family::G)
    for (int m : {4, 5}) out.push_back(QOrder::finite(m));
  else
    for (int m : valid_orders(rs)) out.push_back(QOrder::finite(m));
  out.push_back(QOrder::infinite());
  return out;
}

Records torus_unit(const std::string& name) {
  const RootSystem rs(RootSystemType::parse(name));
  const std::string id = "torus." + name;
  const bool lemma = rs.type().family == Family::B || rs.type().family == Family::F || rs.type().family == Family::G;
  const bool characters = (rs.type().family == Family::B && rs.rank() <= 6) || rs.type().family == Family::C ||
                          rs.type().family == Family::F || rs.type().family == Family::G;
  Records out;
  for (const QOrder& o : torus_orders(rs)) {
    const std::string oid = id + ".o" + o.str();
    if (lemma) {
      const Lemma32Result r = verify_lemma32(rs, o);
      out.push_back(make_claim(oid + ".nonconjugate",
                               "standard and mixed points of order " + o.str() + " are not W0-conjugate",
                               "not conjugate",
                               std::string(r.conjugate ? "conjugate" : "not conjugate") + " (decided by " + r.decided_by +
                                   "; " + r.standard_signature.str() + " vs " + r.mixed_signature.str() + ")",
                               r.applicable && !r.conjugate));
    }
    if (characters && o.is_finite()) {
      const CentralCharacterCount c = count_one_dim_characters(rs, o);
      const long long want = 2 * rs.center_order();
      out.push_back(make_claim(oid + ".central", "central characters of the one-dimensional representations",
                               std::to_string(want) + " = 2|Z|", std::to_string(c.count) + (c.refused ? " refused" : ""),
                               !c.refused && c.count == want));
    }
  }
  if (characters) {
    const CentralCharacterCount c = count_one_dim_characters(rs, QOrder::finite(1));
    out.push_back(make_claim(id + ".q1.central", "central characters of the one-dimensional representations at q = 1",
                             std::to_string(rs.center_order()) + " = |Z|",
                             std::to_string(c.count) + (c.refused ? " refused" : ""),
                             !c.refused && c.count == rs.center_order()));
  }
  return out;
}

Records regular_unit(const RunConfig& config) {
  Records out;
  for (const char* name : {"A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6", "C3", "C4", "C5", "C6", "D4",
                           "D5", "D6", "D7", "G2", "F4", "E6", "E7", "E8"}) {
    const RootSystem rs(RootSystemType::parse(name));
    const OrbitCount c = orbit_count_regular(rs, config.orbits);
    const long long want = 1LL << rs.rank();
    std::string got = c.refused ? "refused: " + c.note : std::to_string(c.count);
    if (!c.refused) {
      got += " at p =";
      for (size_t i = 0; i < c.primes_used.size(); ++i) got += " " + std::to_string(c.primes_used[i]);
      if (!c.stable) got += " (unstable)";
    }
    ClaimRecord r = make_claim(std::string("orbits.regular.") + name,
                               "regular case: all simple roots in N_{q,s}, orbits = subsets of simple roots",
                               std::to_string(want) + " = 2^" + std::to_string(rs.rank()), got,
                               !c.refused && c.stable && c.count == want);
    if (c.prime_shortage) r.status = ClaimStatus::Skipped;
    out.push_back(std::move(r));
  }
  return out;
}

void add_checks(Records& out, const std::string& prefix, const std::string& anchor,
                const std::vector<IdentityCheck>& checks, const std::string& type = "") {
  std::map<std::string, int> seen;
  for (const auto& c : checks) {
    const bool typed = !type.empty() && c.name.rfind(type + " ", 0) == 0;
    std::string id = prefix + "." + slug(typed ? c.name.substr(type.size() + 1) : c.name);
    if (++seen[id] > 1) id += "_" + std::to_string(seen[id]);
    out.push_back(make_claim(id, anchor + ": " + c.name, "identity holds",
                             (c.pass ? "holds" : "fails") + (c.detail.empty() ? "" : "; " + c.detail), c.pass));
  }
}

Records bernstein_unit(const std::string& name, const RunConfig& config) {
  const RootSystem rs(RootSystemType::parse(name));
  Records out;
  add_checks(out, "hecke." + name, "Bernstein elements on the radius-" + std::to_string(config.hecke_radius) + " ball",
             verify_bernstein(rs, config.hecke_radius), name);
  if (rs.type().family == Family::A)
    add_checks(out, "hecke." + name + ".theta_alpha", "theta_{alpha_i} through T_{x_i} in type A",
               verify_theta_alpha_formula(rs), name);
  return out;
}

std::string exponent_str(const CharacterExponents& c) {
  std::string out = "(";
  for (size_t i = 0; i < c.exponent.size(); ++i)
    out += (i ? "," : "") + std::string(c.sign[i] < 0 ? "-" : "") + std::to_string(c.exponent[i]);
  return out + ")";
}

Records characters_unit() {
  Records out;
  using S = Scalar;
  auto expect = [&](std::string id, std::string anchor, const char* type, std::vector<S> assignment,
                    std::string want) {
    const RootSystem rs(RootSystemType::parse(type));
    const std::string got = exponent_str(one_dim_character(rs, assignment));
    const bool ok = got == want;
    out.push_back(make_claim(std::move(id), std::move(anchor), want, got, ok));
  };
  for (int n = 1; n <= 5; ++n) {
    const std::string t = "A" + std::to_string(n);
    std::string want = "(";
    for (int i = 0; i < n; ++i) want += i ? ",1" : "1";
    expect("hecke.characters." + t, "T_r -> q for every r: theta_{alpha_i} -> q^{e_i}", t.c_str(),
           std::vector<S>(static_cast<size_t>(n + 1), S::Q), want + ")");
  }
  expect("hecke.characters.F4", "F4 character with long T_r -> q, short T_r -> -1: exponents e_i", "F4",
         {S::MinusOne, S::Q, S::Q, S::MinusOne, S::MinusOne}, "(1,1,-1,-1)");
  expect("hecke.characters.G2", "G2 character with T_{r_0}, T_{r_1} -> q, T_{r_2} -> -1: exponents e_i", "G2",
         {S::Q, S::Q, S::MinusOne}, "(1,-1)");
  {
    const RootSystem rs(RootSystemType::parse("A2"));
    bool refused = false;
    try {
      one_dim_character(rs, {S::Q, S::MinusOne, S::Q});
    } catch (const std::invalid_argument&) {
      refused = true;
    }
    out.push_back(make_claim("hecke.characters.A2.braid", "braid-related generators take the same scalar",
                             "mixed assignment on A2 refused", refused ? "refused" : "accepted", refused));
  }
  return out;
}

Records ddprime_unit() {
  Records out;
  for (const char* name : {"A1", "A2", "B2", "G2", "A3", "B3", "C3"}) {
    const RootSystem rs(RootSystemType::parse(name));
    const DDPrime dd = build_d_dprime(rs);
    add_checks(out, std::string("hecke.ddprime.") + name, "eigen-relations of D and D' over Z[v, v^-1]", dd.checks,
               name);
  }
  return out;
}

bool selects(const std::string& selector, const std::string& id) {
  auto under = [](const std::string& a, const std::string& b) {
    return a == b || (a.size() > b.size() && a.compare(0, b.size(), b) == 0 && a[b.size()] == '.');
  };
  return under(id, selector) || under(selector, id);
}

bool record_selected(const std::string& selector, const std::string& id) {
  return id == selector || (id.size() > selector.size() && id.compare(0, selector.size(), selector) == 0 &&
                            id[selector.size()] == '.');
}

std::vector<Unit> all_units(const RunConfig& config) {
  std::vector<Unit> units;
  for (const char* n : {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "C3",
                        "C4", "C5", "C6", "C7", "C8", "D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8", "F4", "G2"})
    units.push_back({std::string("rootsys.") + n, [n] { return rootsys_unit(n); }});
  std::vector<std::string> weyl;
  for (int n = 1; n <= 9; ++n) weyl.push_back("A" + std::to_string(n));
  for (int n = 2; n <= 7; ++n) weyl.push_back("B" + std::to_string(n));
  for (int n = 3; n <= 7; ++n) weyl.push_back("C" + std::to_string(n));
  for (int n = 4; n <= config.d_max; ++n) weyl.push_back("D" + std::to_string(n));
  for (const char* n : {"E6", "E7", "E8", "F4", "G2"}) weyl.push_back(n);
  for (const auto& n : weyl) units.push_back({"weyl." + n, [n, &config] { return weyl_unit(n, config); }});
  units.push_back({"partitions", [&config] { return partitions_unit(config); }});
  for (const char* n : {"B2", "B3", "B4", "B5", "B6", "B7", "B8", "C3", "C4", "C5", "C6", "F4", "G2"})
    units.push_back({std::string("torus.") + n, [n] { return torus_unit(n); }});
  units.push_back({"orbits.regular", [&config] { return regular_unit(config); }});
  for (const auto& c : all_cases(config.d_max))
    units.push_back({c.id, [c, &config] { return verify_case(c, config.orbits); }});
  for (const char* n : {"A2", "B2", "G2"})
    units.push_back({std::string("hecke.") + n, [n, &config] { return bernstein_unit(n, config); }});
  units.push_back({"hecke.words", [] {
                     Records out;
                     add_checks(out, "hecke.words", "translation words in the extended affine Weyl group",
                                verify_translation_words());
                     return out;
                   }});
  units.push_back({"hecke.lengths", [] {
                     Records out;
                     add_checks(out, "hecke.lengths", "length of the fundamental translations in type A",
                                verify_type_a_lengths(6));
                     return out;
                   }});
  units.push_back({"hecke.characters", [] { return characters_unit(); }});
  units.push_back({"hecke.ddprime", [] { return ddprime_unit(); }});
  return units;
}

std::vector<Unit> selected_units(const RunConfig& config) {
  auto units = all_units(config);
  if (config.cases.empty()) return units;
  for (const auto& s : config.cases)
    if (std::none_of(units.begin(), units.end(), [&](const Unit& u) { return selects(s, u.id); }))
      throw ConfigError("no claim matches " + s);
  std::vector<Unit> out;
  for (auto& u : units)
    if (std::any_of(config.cases.begin(), config.cases.end(), [&](const std::string& s) { return selects(s, u.id); }))
      out.push_back(std::move(u));
  return out;
}

Records run_unit(const Unit& u) {
  try {
    return u.run();
  } catch (const WeylBudgetExceeded& e) {
    return {{u.id + ".error", u.id, "within budget", e.what(), ClaimStatus::Skipped}};
  } catch (const HeckeRefusal& e) {
    return {{u.id + ".error", u.id, "within rank cap", e.what(), ClaimStatus::Skipped}};
  } catch (const OrbitRefusal& e) {
    return {{u.id + ".error", u.id, "within orbit caps", e.what(), ClaimStatus::Skipped}};
  } catch (const std::exception& e) {
    return {{u.id + ".error", u.id, "no error", e.what(), ClaimStatus::Fail}};
  }
}

}  // namespace

std::vector<std::string> unit_ids(const RunConfig& config) {
  std::vector<std::string> out;
  for (const auto& u : selected_units(config)) out.push_back(u.id);
  return out;
}

std::vector<ClaimRecord> verify_all(const RunConfig& config) {
  config.validate();
  const auto units = selected_units(config);
  std::vector<Records> results(units.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < units.size(); i = next++) results[i] = run_unit(units[i]);
  };
  const int threads = std::min<int>(config.jobs, static_cast<int>(units.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  Records out;
  for (auto& r : results)
    for (auto& rec : r)
      if (config.cases.empty() || std::any_of(config.cases.begin(), config.cases.end(), [&](const std::string& s) {
            return record_selected(s, rec.claim_id);
          }))
        out.push_back(std::move(rec));
  return out;
}

}  // namespace hv
